import random
from fractions import Fraction as F

import pytest

from valuegeom import (
    DependentDirections,
    egalitarian_shapley,
    gram_fit,
    inner_L,
    mixture_profile,
    named_profile,
    optimal_epsilon,
    projection_report,
    solve_normal_equations,
)
from util import rational, random_efficient_profile


def cramer_2x2(gram, rhs):
    det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]
    x0 = (rhs[0] * gram[1][1] - gram[0][1] * rhs[1]) / det
    x1 = (gram[0][0] * rhs[1] - rhs[0] * gram[1][0]) / det
    return det, [x0, x1]


def two_direction_fit(n=4):
    return gram_fit(
        named_profile("esd", n),
        [named_profile("ed", n), named_profile("bz", n)],
        ["ed", "bz"],
    )


def test_worked_two_direction_fit():
    fit = two_direction_fit()
    assert fit.gram_det == F(67, 96)
    assert fit.gram == ((F(29, 6), F(1, 12)), (F(1, 12), F(7, 48)))
    assert fit.rhs == (F(11, 6), F(1, 12))
    assert fit.coeffs == (F(25, 67), F(24, 67))
    assert fit.proj_sq == F(287, 402)
    assert fit.dist_sq == F(11, 6)
    assert fit.r2_u == F(287, 737)
    assert fit.shapley_coefficient == F(18, 67)


def test_worked_fit_mixture_profile():
    fit = two_direction_fit()
    expected = (
        F(18, 67) * named_profile("sh", 4)
        + F(25, 67) * named_profile("ed", 4)
        + F(24, 67) * named_profile("bz", 4)
    )
    assert mixture_profile(fit) == expected


def test_single_direction_reduces_to_line_projection():
    for kind in ("bz", "esd", "so"):
        for n in (3, 4, 6):
            target = named_profile(kind, n)
            fit = gram_fit(target, [named_profile("ed", n)], ["ed"])
            assert fit.coeffs == (optimal_epsilon(target),)
            assert fit.r2_u == projection_report(target, kind).r2


def test_target_already_in_span():
    target = egalitarian_shapley(F(1, 3), 4)
    fit = gram_fit(target, [named_profile("ed", 4), named_profile("bz", 4)], ["ed", "bz"])
    assert fit.coeffs == (F(1, 3), F(0))
    assert fit.r2_u == 1
    assert mixture_profile(fit) == target


def test_mixture_with_zero_coefficients_is_shapley():
    fit = gram_fit(named_profile("sh", 4), [named_profile("ed", 4)], ["ed"])
    assert fit.coeffs == (F(0),)
    assert mixture_profile(fit) == named_profile("sh", 4)


def test_mixture_full_weight_on_equal_division():
    fit = gram_fit(named_profile("ed", 4), [named_profile("ed", 4)], ["ed"])
    assert fit.coeffs == (F(1),)
    assert mixture_profile(fit) == named_profile("ed", 4)


def test_normal_equation_residual_orthogonality():
    rng = random.Random(71)
    for n in (4, 5):
        anchors = [named_profile("ed", n), named_profile("bz", n), named_profile("esd", n)]
        names = ["ed", "bz", "esd"]
        targets = [named_profile("so", n)] + [random_efficient_profile(rng, n) for _ in range(5)]
        for target in targets:
            fit = gram_fit(target, anchors, names)
            resid = target - mixture_profile(fit)
            for d in fit.directions:
                assert inner_L(resid, d) == 0


def test_general_pythagoras_for_subspaces():
    for n in (4, 6):
        for kind in ("esd", "so"):
            target = named_profile(kind, n)
            fit = gram_fit(target, [named_profile("ed", n), named_profile("bz", n)], ["ed", "bz"])
            resid = target - mixture_profile(fit)
            assert fit.dist_sq == fit.proj_sq + inner_L(resid, resid)


@pytest.mark.parametrize("n", range(4, 9))
def test_nested_fit_is_monotone(n):
    for kind in ("esd", "so"):
        target = named_profile(kind, n)
        one = gram_fit(target, [named_profile("ed", n)], ["ed"])
        two = gram_fit(target, [named_profile("ed", n), named_profile("bz", n)], ["ed", "bz"])
        assert one.r2_u <= two.r2_u


def test_two_direction_gain_at_n4_is_exact():
    two = two_direction_fit()
    one = gram_fit(named_profile("esd", 4), [named_profile("ed", 4)], ["ed"])
    assert two.r2_u - one.r2_u == F(287, 737) - F(11, 29)


def test_solver_agrees_with_cramer_on_2x2():
    fit = two_direction_fit()
    det, coeffs = cramer_2x2(fit.gram, fit.rhs)
    assert det == fit.gram_det
    assert tuple(coeffs) == fit.coeffs
    rng = random.Random(911)
    for _ in range(25):
        gram = [[rational(rng) for _ in range(2)] for _ in range(2)]
        rhs = [rational(rng) for _ in range(2)]
        det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]
        got_det, got = solve_normal_equations(gram, rhs)
        assert got_det == det
        if det != 0:
            c_det, c = cramer_2x2(gram, rhs)
            assert got == c


def test_solver_solves_random_systems_exactly():
    rng = random.Random(912)
    for k in (1, 2, 3, 4):
        for _ in range(10):
            gram = [[rational(rng) for _ in range(k)] for _ in range(k)]
            rhs = [rational(rng) for _ in range(k)]
            det, coeffs = solve_normal_equations(gram, rhs)
            if coeffs is None:
                assert det == 0
                continue
            for i in range(k):
                assert sum((gram[i][j] * coeffs[j] for j in range(k)), F(0)) == rhs[i]


def test_dependent_directions_duplicate():
    with pytest.raises(DependentDirections) as err:
        gram_fit(
            named_profile("so", 4),
            [named_profile("ed", 4), named_profile("ed", 4)],
            ["ed", "ed2"],
        )
    assert set(err.value.names) == {"ed", "ed2"}


def test_dependent_directions_names_offending_subset():
    # f:1/2 minus Shapley is half of ed minus Shapley, so those two are the
    # dependent pair; the Banzhaf direction is innocent
    with pytest.raises(DependentDirections) as err:
        gram_fit(
            named_profile("so", 4),
            [named_profile("ed", 4), named_profile("bz", 4), egalitarian_shapley(F(1, 2), 4)],
            ["ed", "bz", "f:1/2"],
        )
    assert set(err.value.names) == {"ed", "f:1/2"}


def test_fit_rejects_mismatched_n():
    with pytest.raises(ValueError):
        gram_fit(named_profile("so", 4), [named_profile("ed", 5)], ["ed"])


def test_fit_requires_directions():
    with pytest.raises(ValueError):
        gram_fit(named_profile("so", 4), [], [])
