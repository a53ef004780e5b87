#include <gtest/gtest.h>

#include <cmath>

#include "mhd/flux.hpp"
#include "mhd/state.hpp"
#include "oracles.hpp"

using namespace mhd;

namespace {

constexpr Direction kDirs[] = {Direction::X, Direction::Y, Direction::Z};
const PrimState kBrioLeft{1.0, 0, 0, 0, 1.0, 0.75, 1.0, 0};

double max_abs(const Vec8& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Flux, ConsistencyBrioWuLeft) {
  for (Direction d : kDirs) {
    const Vec8 f = physical_flux(kBrioLeft, 2.0, d);
    EXPECT_LE(max_abs(ec_flux(kBrioLeft, kBrioLeft, 2.0, d) - f), 1e-13);
    EXPECT_LE(max_abs(ekec_flux(kBrioLeft, kBrioLeft, 2.0, d) - f), 1e-13);
  }
}

TEST(Flux, ConsistencyRandom) {
  oracle::Sampler s(21);
  for (int n = 0; n < 1000; ++n) {
    const PrimState p = s.state();
    for (Direction d : kDirs) {
      const Vec8 f = oracle::flux(p, 5.0 / 3.0, static_cast<int>(d));
      EXPECT_LE(max_abs(ec_flux(p, p, 5.0 / 3.0, d) - f), 1e-13 * (1 + max_abs(f)));
      EXPECT_LE(max_abs(ekec_flux(p, p, 5.0 / 3.0, d) - f), 1e-13 * (1 + max_abs(f)));
    }
  }
}

TEST(Flux, EqualStateAveragesReproducePrimitives) {
  const PrimState p{1.3, 0.2, -0.7, 0.4, 2.1, 0.5, -1.1, 0.3};
  const ECAverages a = ec_averages(p, p, 1.4);
  EXPECT_NEAR(a.rho_hat, p.rho, 1e-14);
  EXPECT_NEAR(a.p1, p.p, 1e-14);
  EXPECT_NEAR(a.p2, p.p, 1e-14);
  EXPECT_NEAR(a.vel1[1], p.v, 1e-15);
  EXPECT_NEAR(a.vel2[2], p.w, 1e-15);
  EXPECT_NEAR(a.BB[0][1], p.B1 * p.B2, 1e-15);
}

TEST(Flux, ZeroFieldReducesToIsmailRoe) {
  oracle::Sampler s(22);
  for (int n = 0; n < 500; ++n) {
    PrimState L = s.state(), R = s.state();
    L.B1 = L.B2 = L.B3 = R.B1 = R.B2 = R.B3 = 0.0;
    const Vec8 f = ec_flux(L, R, 1.4, Direction::X);
    const auto ref = oracle::ismail_roe(L, R, 1.4);
    EXPECT_LE((f.head<5>() - ref).cwiseAbs().maxCoeff(), 1e-12 * (1 + ref.cwiseAbs().maxCoeff()));
    EXPECT_EQ(f[5], 0.0);
    EXPECT_EQ(f[6], 0.0);
    EXPECT_EQ(f[7], 0.0);
  }
}

TEST(Flux, ZeroFieldKineticReducesToChandrashekar) {
  oracle::Sampler s(23);
  for (int n = 0; n < 500; ++n) {
    PrimState L = s.state(), R = s.state();
    L.B1 = L.B2 = L.B3 = R.B1 = R.B2 = R.B3 = 0.0;
    const Vec8 f = ekec_flux(L, R, 1.4, Direction::X);
    const auto ref = oracle::chandrashekar(L, R, 1.4);
    EXPECT_LE((f.head<5>() - ref).cwiseAbs().maxCoeff(), 1e-12 * (1 + ref.cwiseAbs().maxCoeff()));
    EXPECT_EQ(f.tail<3>().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Flux, SymmetricInArguments) {
  oracle::Sampler s(24);
  for (int n = 0; n < 500; ++n) {
    const PrimState L = s.state(), R = s.state();
    for (Direction d : kDirs) {
      EXPECT_EQ(max_abs(ec_flux(L, R, 5.0 / 3.0, d) - ec_flux(R, L, 5.0 / 3.0, d)), 0.0);
      EXPECT_EQ(max_abs(ekec_flux(L, R, 5.0 / 3.0, d) - ekec_flux(R, L, 5.0 / 3.0, d)), 0.0);
    }
  }
}

TEST(Flux, NormalFieldRowIsZero) {
  oracle::Sampler s(25);
  for (int n = 0; n < 200; ++n) {
    const PrimState L = s.state(), R = s.state();
    for (Direction d : kDirs) {
      EXPECT_EQ(ec_flux(L, R, 5.0 / 3.0, d)[5 + static_cast<int>(d)], 0.0);
      EXPECT_EQ(ekec_flux(L, R, 5.0 / 3.0, d)[5 + static_cast<int>(d)], 0.0);
    }
  }
}

TEST(Flux, EntropyConditionWithSource) {
  oracle::Sampler s(26);
  const double g = 5.0 / 3.0;
  for (int n = 0; n < 2000; ++n) {
    const PrimState L = s.state();
    const PrimState R = s.same_sign_partner(L);
    const double dxL = s.spacing(), dxR = s.spacing();
    for (Direction d : kDirs) {
      const int k = static_cast<int>(d);
      const Vec8 src = janhunen_interface_source(L, R, dxL, dxR, g, d).s;
      const auto ec = oracle::entropy_balance(L, R, dxL, dxR, ec_flux(L, R, g, d), src, g, k);
      EXPECT_LE(std::abs(ec.residual), 1e-11 * ec.scale);
      const Vec8 srcb = janhunen_interface_source_beta(L, R, dxL, dxR, g, d).s;
      const auto ke = oracle::entropy_balance(L, R, dxL, dxR, ekec_flux(L, R, g, d), srcb, g, k);
      EXPECT_LE(std::abs(ke.residual), 1e-11 * ke.scale);
    }
  }
}

TEST(Flux, BetaFormSourceMatches) {
  oracle::Sampler s(27);
  for (int n = 0; n < 2000; ++n) {
    const PrimState L = s.state();
    const PrimState R = s.same_sign_partner(L);
    const double dxL = s.spacing(), dxR = s.spacing();
    for (Direction d : kDirs) {
      const Vec8 a = janhunen_interface_source(L, R, dxL, dxR, 1.4, d).s;
      const Vec8 b = janhunen_interface_source_beta(L, R, dxL, dxR, 1.4, d).s;
      EXPECT_LE(max_abs(a - b), 1e-14 * (1 + max_abs(a)));
    }
  }
}

TEST(Flux, SourceVanishesWithoutNormalJump) {
  oracle::Sampler s(28);
  PrimState L = s.state(), R = s.state();
  R.B1 = L.B1;
  const InterfaceSource src = janhunen_interface_source(L, R, 1.0, 0.5, 2.0, Direction::X);
  EXPECT_EQ(src.s.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(src.jump_Bd, 0.0);
  EXPECT_EQ(src.s.head<5>().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Flux, SourceEntropyContributionCancelsJumpTerm) {
  // rho = p = 1, u = (1,0,0), B = (1,1,1) on the left; the normal field jumps by 0.1.
  for (Direction d : kDirs) {
    const int k = static_cast<int>(d);
    const PrimState L{1, 1, 0, 0, 1, 1, 1, 1};
    PrimState R = L;
    (k == 0 ? R.B1 : (k == 1 ? R.B2 : R.B3)) += 0.1;
    const Vec8 s = janhunen_interface_source(L, R, 1.0, 1.0, 5.0 / 3.0, d).s;
    const Vec8 vL = oracle::entropy_vars(L, 5.0 / 3.0), vR = oracle::entropy_vars(R, 5.0 / 3.0);
    const double contraction = (0.5 * (vL + vR)).dot(s);
    // With z1 = 1 on both sides: -[[B_d]] (<z1 z2><z6> + <z1 z3><z7> + <z1 z4><z8>).
    const double Bm[3] = {0.5 * (L.B1 + R.B1), 0.5 * (L.B2 + R.B2), 0.5 * (L.B3 + R.B3)};
    const double expected = -0.1 * (L.u * Bm[0] + L.v * Bm[1] + L.w * Bm[2]);
    EXPECT_NEAR(contraction, expected, 1e-15);
    EXPECT_EQ(s.head<5>().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Flux, SignChangingFieldUsesFieldFreeWeights) {
  PrimState L{1, 0.3, 0.1, 0, 1, 0.5, 0.7, 0.2};
  PrimState R{2, 0.1, -0.2, 0.4, 0.5, 0.6, -0.9, 0.0};
  const double dxL = 1.0, dxR = 2.0;
  const InterfaceSource src = janhunen_interface_source(L, R, dxL, dxR, 2.0, Direction::X);
  EXPECT_EQ(src.degenerate_rows, 2);
  const double jump = R.B1 - L.B1;
  const double wL = L.rho / L.p, wR = R.rho / R.p;
  const double weights = 0.5 * (dxL * wL + dxR * wR);
  EXPECT_NEAR(src.s[6], -jump * 0.5 * (wL * L.v + wR * R.v) / weights, 1e-15);
  EXPECT_NEAR(src.s[7], -jump * 0.5 * (wL * L.w + wR * R.w) / weights, 1e-15);
  const double bnum = 0.5 * (wL * L.u + wR * R.u) * 0.5 * (L.B1 + R.B1);
  EXPECT_NEAR(src.s[5], -jump * bnum / (0.5 * (dxL * wL * L.B1 + dxR * wR * R.B1)), 1e-15);
}

TEST(Flux, FieldFreeWeightsMatchFormulaForEqualField) {
  const PrimState L{1, 0.3, 0.1, -0.2, 1, 0.5, 0.7, 0.2};
  const PrimState R{2, 0.1, -0.2, 0.4, 0.5, 0.6, 0.7, 0.2};
  PrimState Lz = L, Rz = R;
  Lz.B2 = Lz.B3 = Rz.B2 = Rz.B3 = 0.0;
  const InterfaceSource equal = janhunen_interface_source(L, R, 1.0, 2.0, 2.0, Direction::X);
  const InterfaceSource zero = janhunen_interface_source(Lz, Rz, 1.0, 2.0, 2.0, Direction::X);
  EXPECT_EQ(equal.degenerate_rows, 0);
  EXPECT_EQ(zero.degenerate_rows, 2);
  EXPECT_NEAR(zero.s[6], equal.s[6], 1e-15);
  EXPECT_NEAR(zero.s[7], equal.s[7], 1e-15);
}

TEST(Flux, UnderflowedTangentialFieldGivesFiniteSource) {
  const PrimState L{1, 0, 0, 0, 1, 1.41, 0, 0};
  const PrimState R{1, -3e-226, 3e-270, 3e-270, 1, 1.41, -5e-322, -5e-322};
  for (const Direction d : {Direction::X, Direction::Y}) {
    const InterfaceSource src = janhunen_interface_source(L, R, 1.0 / 128, 1.0 / 128, 1.4, d);
    const InterfaceSource beta = janhunen_interface_source_beta(L, R, 1.0 / 128, 1.0 / 128, 1.4, d);
    EXPECT_TRUE(src.s.allFinite());
    EXPECT_TRUE(beta.s.allFinite());
  }
}
