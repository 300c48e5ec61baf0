import random
from fractions import Fraction as F
from math import comb

import pytest

from valuegeom import (
    SymmetricValueProfile,
    egalitarian_shapley,
    generalized_pythagoras,
    inner_L,
    named_profile,
    optimal_epsilon,
    projection_report,
    r2_from_moments,
    reconstruct,
    stratified_coords,
    weighted_moments,
    weights,
)
from util import rational, random_efficient_profile, random_profile


def single_stratum_profile(n, a, alpha, beta):
    al = [F(0)] * n
    be = [F(0)] * (n - 1)
    al[a - 1] = F(alpha)
    if a < n:
        be[a - 1] = F(beta)
    return SymmetricValueProfile(n, tuple(al), tuple(be))


def test_esd_coordinates_n4():
    coords = stratified_coords(named_profile("esd", 4))
    assert coords.eps == (F(0), F(1), F(1))
    assert coords.delta == (F(0),) * 3
    assert coords.top_dev_sq == 0
    assert coords.is_efficient()


def test_solidarity_coordinates_n4():
    coords = stratified_coords(named_profile("so", 4))
    assert coords.eps == (F(23, 36), F(13, 18), F(3, 4))
    assert coords.delta == (F(0),) * 3


def test_banzhaf_coordinates_formula():
    for n in (3, 4, 7, 12, 20):
        coords = stratified_coords(named_profile("bz", n))
        for a in range(1, n):
            eps = 1 - F(a, 1 << (a - 1))
            assert coords.eps[a - 1] == eps
            assert coords.delta[a - 1] == -eps / n
        assert coords.top_dev_sq == n * (F(1, 1 << (n - 1)) - F(1, n)) ** 2


def test_banzhaf_strata_cli_example_values():
    coords = stratified_coords(named_profile("bz", 4))
    assert coords.eps == (F(0), F(0), F(1, 4))
    assert coords.delta == (F(0), F(0), F(-1, 16))


def test_top_convention_is_metadata():
    coords = stratified_coords(named_profile("esd", 4))
    assert coords.eps_top_convention == 1
    assert len(coords.eps) == 3


def test_reconstruct_all_zero_is_shapley():
    assert reconstruct((F(0),) * 4, 5) == named_profile("sh", 5)


def test_reconstruct_constant_is_mixed_family():
    e = F(2, 7)
    assert reconstruct((e,) * 4, 5) == egalitarian_shapley(e, 5)


def test_reconstruct_esd_coordinates():
    assert reconstruct((F(0), F(1), F(1)), 4) == named_profile("esd", 4)


def test_reconstruct_rejects_wrong_length():
    with pytest.raises(ValueError):
        reconstruct((F(0),) * 3, 5)


def test_weights_n4():
    w = weights(4)
    assert w.w == (F(18, 29), F(9, 29), F(2, 29))
    assert sum(w.w) == 1
    assert 1 - w.w[0] == F(11, 29) == optimal_epsilon(named_profile("esd", 4))


def test_weights_sum_to_one_and_positive():
    for n in range(2, 16):
        w = weights(n)
        assert sum(w.w) == 1
        assert all(x > 0 for x in w.w)


def test_weights_n2_single_stratum():
    assert weights(2).w == (F(1),)


def test_moments_solidarity_n4():
    coords = stratified_coords(named_profile("so", 4))
    m = weighted_moments(coords, weights(4))
    assert m.mean == F(39, 58)
    assert m.variance == F(19, 10092)


def test_moments_esd_n4():
    coords = stratified_coords(named_profile("esd", 4))
    assert weighted_moments(coords, weights(4)).mean == F(11, 29)


def test_moments_constant_vector_zero_variance():
    coords = stratified_coords(egalitarian_shapley(F(3, 5), 6))
    m = weighted_moments(coords, weights(6))
    assert m.variance == 0 and m.mean == F(3, 5)


def test_r2_from_moments_examples():
    w4 = weights(4)
    esd = stratified_coords(named_profile("esd", 4))
    assert r2_from_moments(esd, w4) == 1 - w4.w[0] == F(11, 29)
    so = stratified_coords(named_profile("so", 4))
    assert r2_from_moments(so, w4) == F(4563, 4582)


def test_r2_from_moments_mixed_family_is_one():
    for eps in (F(1, 3), F(-2), F(7, 2)):
        coords = stratified_coords(egalitarian_shapley(eps, 5))
        assert r2_from_moments(coords, weights(5)) == 1


def test_r2_from_moments_shapley_convention():
    coords = stratified_coords(named_profile("sh", 5))
    assert r2_from_moments(coords, weights(5)) == 1


def test_r2_from_moments_rejects_defective_target():
    coords = stratified_coords(named_profile("bz", 4))
    with pytest.raises(ValueError):
        r2_from_moments(coords, weights(4))


@pytest.mark.parametrize("n", range(3, 11))
def test_r2_consistency_with_projection(n):
    w = weights(n)
    for kind in ("esd", "so"):
        coords = stratified_coords(named_profile(kind, n))
        assert r2_from_moments(coords, w) == projection_report(named_profile(kind, n), kind).r2
    for eps in (F(1, 3), F(4, 5)):
        coords = stratified_coords(egalitarian_shapley(eps, n))
        assert r2_from_moments(coords, w) == 1


def test_generalized_pythagoras_banzhaf_n4():
    breakdown = generalized_pythagoras(named_profile("bz", 4))
    assert breakdown.total == F(7, 48)
    assert breakdown.top_term == F(1, 16)
    assert breakdown.eff_terms == (F(0), F(0), F(1, 48))
    assert breakdown.unif_terms == (F(0), F(0), F(1, 16))


@pytest.mark.parametrize("n", range(2, 13))
def test_generalized_pythagoras_banzhaf_clean_form(n):
    # with the defect locked at -eps/n the two per-size terms merge into C(n,a)/a * eps^2
    breakdown = generalized_pythagoras(named_profile("bz", n))
    coords = stratified_coords(named_profile("bz", n))
    merged = sum(
        (F(comb(n, a), a) * coords.eps[a - 1] ** 2 for a in range(1, n)), F(0)
    )
    assert breakdown.total == merged + breakdown.top_term


def test_generalized_pythagoras_efficient_targets_have_no_defect_terms():
    for kind in ("esd", "so"):
        breakdown = generalized_pythagoras(named_profile(kind, 5))
        assert all(t == 0 for t in breakdown.unif_terms)
        assert breakdown.top_term == 0


@pytest.mark.parametrize("n", range(2, 13))
def test_projection_as_weighted_mean_including_banzhaf(n):
    w = weights(n)
    kinds = ["ed", "esd", "so", "bz"]
    for kind in kinds:
        prof = named_profile(kind, n)
        coords = stratified_coords(prof)
        mean = sum((wa * e for wa, e in zip(w.w, coords.eps)), F(0))
        assert mean == optimal_epsilon(prof)


def test_projection_as_weighted_mean_random_symmetric():
    rng = random.Random(606)
    for n in (3, 5, 7):
        w = weights(n)
        for _ in range(20):
            prof = random_profile(rng, n)
            coords = stratified_coords(prof)
            mean = sum((wa * e for wa, e in zip(w.w, coords.eps)), F(0))
            assert mean == optimal_epsilon(prof)


def test_roundtrip_random_coordinates():
    rng = random.Random(17)
    for n in range(2, 11):
        for _ in range(13 if n < 10 else 10):
            e = tuple(rational(rng) for _ in range(n - 1))
            assert stratified_coords(reconstruct(e, n)).eps == e


def test_roundtrip_random_efficient_profiles():
    rng = random.Random(18)
    for n in (3, 5, 8):
        for _ in range(20):
            prof = random_efficient_profile(rng, n)
            coords = stratified_coords(prof)
            assert coords.delta == (F(0),) * (n - 1)
            assert reconstruct(coords.eps, n) == prof


def test_coordinate_map_is_linear_in_the_deviation():
    # coordinates measure the deviation from the Shapley profile, so the map
    # is linear in that deviation and respects affine combinations of profiles
    rng = random.Random(19)
    n = 5
    sh = named_profile("sh", n)
    for _ in range(20):
        p, q = random_profile(rng, n), random_profile(rng, n)
        a, b = rational(rng), rational(rng)
        shifted = sh + a * (p - sh) + b * (q - sh)
        combo = stratified_coords(shifted)
        cp, cq = stratified_coords(p), stratified_coords(q)
        for k in range(n - 1):
            assert combo.eps[k] == a * cp.eps[k] + b * cq.eps[k]
            assert combo.delta[k] == a * cp.delta[k] + b * cq.delta[k]


def test_coordinate_map_respects_affine_combinations():
    rng = random.Random(20)
    n = 6
    for _ in range(20):
        p, q = random_profile(rng, n), random_profile(rng, n)
        a = rational(rng)
        b = 1 - a
        combo = stratified_coords(a * p + b * q)
        cp, cq = stratified_coords(p), stratified_coords(q)
        for k in range(n - 1):
            assert combo.eps[k] == a * cp.eps[k] + b * cq.eps[k]
            assert combo.delta[k] == a * cp.delta[k] + b * cq.delta[k]


def test_stratum_orthogonality():
    rng = random.Random(21)
    n = 6
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            p = single_stratum_profile(n, a, rational(rng), rational(rng))
            q = single_stratum_profile(n, b, rational(rng), rational(rng))
            assert inner_L(p, q) == 0


def test_efficient_and_uniform_directions_are_orthogonal():
    n = 6
    for a in range(1, n):
        # alpha:beta = (n-a):(-a) kills the total worth; alpha = beta spans uniform
        eff = single_stratum_profile(n, a, n - a, -a)
        unif = single_stratum_profile(n, a, 1, 1)
        assert inner_L(eff, unif) == 0
        assert inner_L(eff, eff) > 0 and inner_L(unif, unif) > 0
