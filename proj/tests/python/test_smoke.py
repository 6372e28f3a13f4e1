import math

import pytest

import symmschemes as ss


REFERENCE_STENCIL = [
    [0.0, 0.0, 1.0],   # centre (x, t, u)
    [1.0, 0.0, 1.0],   # +
    [-1.0, 0.0, 1.0],  # -
    [0.0, 0.25, 1.0],  # hat
]


def test_heat_invariants_on_reference_stencil():
    fam = ss.invariant_family("heat")
    assert fam.member_names == ["I1", "I2", "I3", "I4"]
    assert fam.evaluate("I1", REFERENCE_STENCIL) == pytest.approx(1.0)
    assert fam.evaluate("I2", REFERENCE_STENCIL) == pytest.approx(4.0)
    assert fam.evaluate("I3", REFERENCE_STENCIL) == pytest.approx(1.0)
    assert fam.evaluate("I4", REFERENCE_STENCIL) == pytest.approx(0.0, abs=1e-14)


def test_invariant_count_matches_the_dimension_formula():
    counts = ss.invariant_family("heat").invariant_count(n_samples=30)
    assert counts["mu"] == 4
    assert counts["dim_manifold"] == 10
    assert counts["stable"]


def test_strong_invariance_passes():
    report = ss.invariant_family("linear-ode").strong_invariance(n_samples=50)
    assert report["pass"]


def test_scheme_residuals_vanish_on_constant_data():
    scheme = ss.scheme("heat", tau=0.25)
    values = scheme.residuals(REFERENCE_STENCIL)
    assert len(values) == 3
    assert max(abs(v) for v in values) < 1e-14


def test_weak_invariance_of_the_heat_scheme():
    report = ss.scheme("heat").weak_invariance(n_samples=50)
    assert report["pass"]


def test_hodograph_round_trip():
    x, u = ss.transform_point("hodograph", [2.0, 1.5], [5.0])
    assert x == [5.0, 1.5]
    assert u == [2.0]
    back_x, back_u = ss.transform_point("hodograph", x, u, inverse=True)
    assert back_x == [2.0, 1.5]
    assert back_u == [5.0]


def test_pushforward_matches_hand_coded_image():
    assert ss.pushforward_residual_gap(n_samples=25) < 1e-12


def test_flow_of_the_galilei_generator():
    (x, t), (u,) = ss.flow_point("heat", 4, [1.0, 1.0], [1.0], 0.1)
    assert x == pytest.approx(1.2, rel=1e-10)
    assert t == pytest.approx(1.0, rel=1e-12)
    assert u == pytest.approx(math.exp(-0.11), rel=1e-9)


def test_march_follows_the_exact_family():
    rows = ss.march_heat(family="exp", nodes=10, steps=10)
    assert len(rows) == 11
    t0 = 1.0
    for m, row in enumerate(rows):
        t = t0 + 0.002 * m
        for n, (x, tt, u) in enumerate(row):
            assert tt == pytest.approx(t, rel=1e-12)
            assert x == pytest.approx(0.1 * n + 2.0 * t, abs=1e-10)
            assert u == pytest.approx(math.exp(-x + t), rel=1e-9)


def test_elliptic_solver_recovers_the_harmonic_profile():
    result = ss.solve_elliptic(n_r=16, n_theta=16)
    assert result["converged"]
    err = max(
        abs(u - math.log(r))
        for row in result["grid"]
        for (r, _theta, u) in row
    )
    assert err < 0.02


def test_consistency_order_of_the_heat_study():
    report = ss.consistency_order("heat")
    assert not report["exact"]
    assert report["slope"] >= 0.8


def test_domain_violations_surface_as_exceptions():
    fam = ss.invariant_family("heat")
    bad = [row[:] for row in REFERENCE_STENCIL]
    bad[0][2] = -1.0
    with pytest.raises(Exception):
        fam.evaluate("I2", bad)
