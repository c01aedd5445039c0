import math

import pytest

import conegeom as cg

L3 = {"kind": "lp_ball", "n": 2, "r": 3}
DISC = {"kind": "ball", "n": 2}


def rel(a, b):
    return abs(a - b) / abs(b)


def test_disc_basics():
    assert rel(cg.volume(DISC), math.pi) < 1e-10
    assert rel(cg.polar_volume(DISC), math.pi) < 1e-10
    assert rel(cg.as_p(DISC, 1.0), 2 * math.pi) < 1e-9
    assert rel(cg.as_p(DISC, float("inf")), 2 * math.pi) < 1e-9
    assert cg.support(DISC, [0.6, 0.8]) == pytest.approx(1.0)


def test_omega_routes_agree_on_l3_disc():
    cf = cg.omega_lp_closed_form(2, 3.0)
    assert rel(cf, 1.21568352006816542) < 1e-12
    assert rel(cg.omega_entropy(L3), cf) < 1e-8
    fit = cg.omega_p_limit(L3)
    assert rel(math.exp(fit["limit"]), cf) < 1e-2


def test_kl_vanishes_on_ellipse_only():
    ellipse = {"kind": "ellipsoid", "matrix": [[2.0, 0.3], [0.3, 0.5]]}
    assert abs(cg.kl_p_q(ellipse)) < 1e-9
    assert cg.kl_p_q(L3) > 1e-4
    assert cg.kl_q_p(L3) > 1e-4


def test_centroid_and_floating_bodies():
    # unnormalized moments, so compare on the volume-one body
    k = {"kind": "normalized", "base": L3}
    h1 = cg.zp_support(k, 1.0, [1.0, 0.0])
    h8 = cg.zp_support(k, 8.0, [1.0, 0.0])
    assert 0 < h1 < h8 < cg.support(k, [1.0, 0.0])
    f = cg.floating_support(L3, 0.01, [1.0, 0.0])
    assert 0 < f < 1


def test_asymptotics():
    r = cg.beta_power_expansion(3, 2.0**12)
    assert abs(r["residual"]) * (2.0**12) ** 2 < 11
    assert rel(cg.stirling_rel_error(10.0), 2.674053735473081e-6) < 1e-6


def test_section5_mc_matches_closed_form():
    s = cg.section5_integral(2, 3.0, 200000, seed=3)
    assert rel(s["closed_form"], cg.section5_closed_form(2, 3.0)) < 1e-14
    assert abs(s["z_score"]) < 4


def test_errors_carry_kind():
    with pytest.raises(cg.GeometryError) as info:
        cg.volume({"kind": "blob", "n": 2})
    assert info.value.kind == "InvalidConfig"
    with pytest.raises(cg.GeometryError):
        cg.as_p({"kind": "cube", "n": 2}, -2.0)
