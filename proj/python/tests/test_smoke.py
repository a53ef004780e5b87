import math

import pytest

import mhd_esfv as m


def brio_wu_left():
    return m.PrimState(1.0, 0.0, 0.0, 0.0, 1.0, 0.75, 1.0, 0.0)


def test_round_trip():
    p = m.PrimState(0.125, 0.3, -0.2, 0.1, 0.1, 0.75, -1.0, 0.2)
    back = m.cons_to_prim(m.prim_to_cons(p, 2.0), 2.0)
    assert back.rho == pytest.approx(p.rho, rel=1e-14)
    assert back.p == pytest.approx(p.p, rel=1e-13)


def test_energy_of_brio_wu_left():
    q = m.prim_to_cons(brio_wu_left(), 2.0)
    assert q[4] == pytest.approx(1.78125, rel=1e-15)


def test_flux_consistency_all_kinds():
    p = brio_wu_left()
    for direction in (m.Direction.X, m.Direction.Y, m.Direction.Z):
        f = m.physical_flux(p, 2.0, direction)
        for flux in (m.ec_flux, m.ekec_flux, m.es_roe_flux, m.es_llf_flux):
            g = flux(p, p, 2.0, direction)
            assert max(abs(a - b) for a, b in zip(f, g)) < 1e-13


def test_log_mean():
    assert m.log_mean(1.0, math.e) == pytest.approx(math.e - 1.0, rel=1e-15)
    with pytest.raises(ValueError):
        m.log_mean(-1.0, 1.0)


def test_wave_speeds_brio_wu():
    w = m.wave_speeds(brio_wu_left(), 2.0)
    assert w.c_f * w.c_s == pytest.approx(w.a * 0.75, rel=1e-12)


def test_merriam_identity():
    p = m.PrimState(1.3, 0.2, -0.4, 0.1, 0.7, 0.5, 0.9, -0.3)
    es = m.eigen_system(p, 5.0 / 3.0)
    R = es.right_eigenvectors
    H = m.entropy_jacobian(p, 5.0 / 3.0)
    S = es.scaling
    for i in range(8):
        for j in range(8):
            rsr = sum(R[i][k] * S[k] * R[j][k] for k in range(8))
            assert rsr == pytest.approx(H[i][j], abs=1e-12)


def test_eoc():
    rates, mean = m.eoc([4.0, 1.0], [50, 100])
    assert rates[0] == pytest.approx(2.0)
    assert mean == pytest.approx(2.0)


def test_run_experiment(tmp_path):
    files = m.run_experiment(
        "riemann",
        {"problem": "brio_wu", "cells": "40", "cfl": "0.4", "output_dir": str(tmp_path)},
    )
    assert len(files) == 1
    with open(files[0]) as fh:
        assert fh.readline().strip() == "x,rho,u,v,w,p,B1,B2,B3"


def test_config_error():
    with pytest.raises(ValueError):
        m.run_experiment("riemann", {"flux": "nonsense"})
