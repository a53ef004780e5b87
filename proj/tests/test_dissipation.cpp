#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mhd/dissipation.hpp"
#include "mhd/flux.hpp"
#include "oracles.hpp"

using namespace mhd;

namespace {

constexpr Direction kDirs[] = {Direction::X, Direction::Y, Direction::Z};
const PrimState kBrioLeft{1.0, 0, 0, 0, 1.0, 0.75, 1.0, 0};

}  // namespace

TEST(Dissipation, ZeroFieldIsAcoustic) {
  const WaveSpeeds w = wave_speeds(PrimState{}, 2.0, Direction::X);
  EXPECT_NEAR(w.a, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(w.c_a, 0.0);
  EXPECT_NEAR(w.c_f, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(w.c_s, 0.0);
}

TEST(Dissipation, AlignedFieldFactorizes) {
  const PrimState p{1, 0, 0, 0, 1, 2, 0, 0};
  const WaveSpeeds w = wave_speeds(p, 2.0, Direction::X);
  EXPECT_NEAR(w.c_f * w.c_f, 4.0, 1e-14);
  EXPECT_NEAR(w.c_s * w.c_s, 2.0, 1e-14);
}

TEST(Dissipation, BrioWuLeftSpeeds) {
  const WaveSpeeds w = wave_speeds(kBrioLeft, 2.0, Direction::X);
  EXPECT_NEAR(w.c_a, 0.75, 1e-15);
  EXPECT_NEAR(w.c_f, 1.79228, 1e-5);
  EXPECT_NEAR(w.c_s, 0.59180, 1e-5);
  EXPECT_NEAR(w.c_f * w.c_s, w.a * 0.75, 1e-12);
  EXPECT_NEAR(w.a * 0.75, 1.06066, 1e-5);
}

TEST(Dissipation, SpeedOrderingAndProduct) {
  oracle::Sampler s(31);
  for (int n = 0; n < 1000; ++n) {
    const PrimState p = s.state();
    for (Direction d : kDirs) {
      const WaveSpeeds w = wave_speeds(p, 5.0 / 3.0, d);
      EXPECT_LE(0.0, w.c_s);
      EXPECT_LE(w.c_s, w.c_a * (1 + 1e-14));
      EXPECT_LE(w.c_a, w.c_f * (1 + 1e-14));
      const double bn = std::abs(w.b[static_cast<int>(d)]);
      EXPECT_NEAR(w.c_f * w.c_s, w.a * bn, 1e-12 * w.c_f * w.c_f);
    }
  }
}

TEST(Dissipation, MerriamIdentity) {
  oracle::Sampler s(32);
  int checked = 0;
  while (checked < 1000) {
    const PrimState p = s.state();
    for (Direction d : kDirs) {
      if (wave_speeds(p, 5.0 / 3.0, d).b_perp <= 1e-3) continue;
      const EigenSystem es = eigen_system(p, 5.0 / 3.0, d);
      const Mat8 H = oracle::entropy_jacobian(p, 5.0 / 3.0);
      const Mat8 RSR = es.Rhat * es.S.asDiagonal() * es.Rhat.transpose();
      EXPECT_LE((H - RSR).cwiseAbs().maxCoeff() / H.cwiseAbs().maxCoeff(), 1e-10);
    }
    ++checked;
  }
}

TEST(Dissipation, EigenRelationAgainstFiniteDifferences) {
  oracle::Sampler s(33);
  for (int n = 0; n < 200; ++n) {
    const PrimState p = s.state();
    for (Direction d : kDirs) {
      const int k = static_cast<int>(d);
      const EigenSystem es = eigen_system(p, 5.0 / 3.0, d);
      const Mat8 A = oracle::flux_jacobian_fd(p, 5.0 / 3.0, k) + oracle::powell_matrix(p, k);
      const Mat8 err = A * es.Rhat - es.Rhat * es.lambda.asDiagonal();
      EXPECT_LE(err.cwiseAbs().maxCoeff() /
                    (A.cwiseAbs().maxCoeff() * es.Rhat.cwiseAbs().maxCoeff()),
                1e-5);
    }
  }
}

TEST(Dissipation, EigenvalueSet) {
  oracle::Sampler s(34);
  for (int n = 0; n < 200; ++n) {
    const PrimState p = s.state();
    for (Direction d : kDirs) {
      const WaveSpeeds w = wave_speeds(p, 5.0 / 3.0, d);
      const EigenSystem es = eigen_system(p, 5.0 / 3.0, d);
      const double un = p.vel(static_cast<int>(d));
      const double expected[8] = {un - w.c_f, un - w.c_a, un - w.c_s, un,
                                  un,         un + w.c_s, un + w.c_a, un + w.c_f};
      for (int i = 0; i < 8; ++i) EXPECT_NEAR(es.lambda[i], expected[i], 1e-12);
      EXPECT_NEAR(es.alpha_f * es.alpha_f + es.alpha_s * es.alpha_s, 1.0, 1e-14);
    }
  }
}

TEST(Dissipation, ZeroFieldAlphas) {
  const PrimState p{1.4, 0.3, 0, 0, 0.9, 0, 0, 0};
  const EigenSystem es = eigen_system(p, 1.4, Direction::X);
  EXPECT_EQ(es.alpha_f, 1.0);
  EXPECT_EQ(es.alpha_s, 0.0);
  EXPECT_EQ(es.lambda[3], 0.3);
  EXPECT_EQ(es.lambda[4], 0.3);
  EXPECT_NEAR(es.beta_t[0], M_SQRT1_2, 1e-16);
}

TEST(Dissipation, TriplePointStaysFinite) {
  // a == |b_n| with no tangential field.
  const double g = 5.0 / 3.0;
  const PrimState p{1, 0.1, 0, 0, 3.0 / 5.0, 1.0, 0, 0};
  const EigenSystem es = eigen_system(p, g, Direction::X);
  EXPECT_TRUE(es.Rhat.allFinite());
  EXPECT_NEAR(es.alpha_f * es.alpha_f + es.alpha_s * es.alpha_s, 1.0, 1e-14);
}

TEST(Dissipation, IdenticalStatesGiveConsistentFlux) {
  for (Direction d : kDirs) {
    const Vec8 f = physical_flux(kBrioLeft, 2.0, d);
    EXPECT_LE((es_roe_flux(kBrioLeft, kBrioLeft, 2.0, d) - f).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LE((es_llf_flux(kBrioLeft, kBrioLeft, 2.0, d) - f).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Dissipation, QuadraticFormsNonNegative) {
  oracle::Sampler s(35);
  for (int n = 0; n < 2000; ++n) {
    const PrimState L = s.state(), R = s.state();
    const Vec8 dv = oracle::entropy_vars(R, 1.4) - oracle::entropy_vars(L, 1.4);
    const PrimState m = mean_state(L, R);
    for (Direction d : kDirs) {
      const EigenSystem es = eigen_system(m, 1.4, d);
      const Vec8 w = es.Rhat.transpose() * dv;
      const double roe = w.dot(es.lambda.cwiseAbs().cwiseProduct(es.S).cwiseProduct(w));
      EXPECT_GE(roe, 0.0);
      EXPECT_GE(dv.dot(entropy_jacobian(m, 1.4) * dv), 0.0);
    }
  }
}

TEST(Dissipation, EntropyProductionNonPositive) {
  oracle::Sampler s(36);
  const double g = 5.0 / 3.0;
  for (int n = 0; n < 2000; ++n) {
    const PrimState L = s.state();
    const PrimState R = s.same_sign_partner(L);
    const double dxL = s.spacing(), dxR = s.spacing();
    for (Direction d : kDirs) {
      const int k = static_cast<int>(d);
      const Vec8 src = janhunen_interface_source(L, R, dxL, dxR, g, d).s;
      for (const Vec8& f : {es_roe_flux(L, R, g, d), es_llf_flux(L, R, g, d)}) {
        EXPECT_LE(oracle::entropy_balance(L, R, dxL, dxR, f, src, g, k).residual, 1e-11);
      }
    }
  }
}

TEST(Dissipation, LaxFriedrichsSpeedAtMeanState) {
  const PrimState L{1, 0.5, 0, 0, 1, 0.75, 1, 0}, R{0.125, -0.2, 0, 0, 0.1, 0.75, -1, 0};
  const PrimState m = mean_state(L, R);
  const double lam = std::abs(m.u) + wave_speeds(m, 2.0, Direction::X).c_f;
  const Vec8 dv = entropy_vars(R, 2.0) - entropy_vars(L, 2.0);
  const Vec8 expected = ec_flux(L, R, 2.0, Direction::X) - 0.5 * lam * entropy_jacobian(m, 2.0) * dv;
  EXPECT_LE((es_llf_flux(L, R, 2.0, Direction::X) - expected).cwiseAbs().maxCoeff(), 1e-14);
}
