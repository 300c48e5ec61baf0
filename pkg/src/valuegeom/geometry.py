"""Inner product on linear value maps and projection onto the Shapley-to-equal-division line.

The inner product sums, over all unanimity games, the Euclidean pairing of
the two maps' payoff vectors. On symmetric profiles this collapses to an
O(n) sum over coalition sizes; the O(2^n) enumeration and the evaluation in
an arbitrary orthonormal basis of the game space are kept as independent
verification paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import axis_norm_sq
from .games import HOrthonormalBasis, coalitions
from .values import (
    GeneralLinearValueMap,
    SymmetricValueProfile,
    egalitarian_shapley,
    named_profile,
)

#: Direct coalition enumeration is kept as a cross-check up to this size.
MAX_ENUMERATION_PLAYERS = 12

#: General (non-symmetric) maps carry n * (2^n - 1) rationals; cap their use.
MAX_GENERAL_MAP_PLAYERS = 6

_ZERO = Fraction(0)
_ONE = Fraction(1)

__all__ = [
    "MAX_ENUMERATION_PLAYERS",
    "MAX_GENERAL_MAP_PLAYERS",
    "ProjectionReport",
    "axis_norm_sq",
    "banzhaf_optimal_epsilon",
    "esd_optimal_epsilon",
    "inner_L",
    "inner_L_by_enumeration",
    "inner_L_general",
    "inner_L_in_basis",
    "optimal_epsilon",
    "projection_report",
    "residual_profile",
]


def inner_L(p: SymmetricValueProfile, q: SymmetricValueProfile) -> Fraction:
    """Inner product of two symmetric profiles via the per-size closed form.

    Each size a < n contributes C(n, a) * (a * alpha_a * alpha_a'
    + (n-a) * beta_a * beta_a'); size n contributes n * alpha_n * alpha_n'.
    """
    if p.n != q.n:
        raise ValueError(f"player counts differ: {p.n} vs {q.n}")
    n = p.n
    total = _ZERO
    for a in range(1, n):
        term = a * p.alpha[a - 1] * q.alpha[a - 1] + (n - a) * p.beta[a - 1] * q.beta[a - 1]
        if term:
            total += comb(n, a) * term
    total += n * p.alpha[n - 1] * q.alpha[n - 1]
    return total


def inner_L_by_enumeration(p: SymmetricValueProfile, q: SymmetricValueProfile) -> Fraction:
    """Same inner product, summed payoff-by-payoff over every coalition."""
    if p.n != q.n:
        raise ValueError(f"player counts differ: {p.n} vs {q.n}")
    if p.n > MAX_ENUMERATION_PLAYERS:
        raise ValueError(f"enumeration path is capped at n={MAX_ENUMERATION_PLAYERS}, got {p.n}")
    total = _ZERO
    for mask in coalitions(p.n):
        for x, y in zip(p.unanimity_payoff(mask), q.unanimity_payoff(mask)):
            if x and y:
                total += x * y
    return total


def inner_L_general(p: GeneralLinearValueMap, q: GeneralLinearValueMap) -> Fraction:
    """Inner product of two general linear maps, summed over all unanimity games."""
    if p.n != q.n:
        raise ValueError(f"player counts differ: {p.n} vs {q.n}")
    if p.n > MAX_GENERAL_MAP_PLAYERS:
        raise ValueError(f"general maps are capped at n={MAX_GENERAL_MAP_PLAYERS}, got {p.n}")
    total = _ZERO
    for u, v in zip(p.actions, q.actions):
        for x, y in zip(u, v):
            if x and y:
                total += x * y
    return total


def inner_L_in_basis(
    p: GeneralLinearValueMap, q: GeneralLinearValueMap, basis: HOrthonormalBasis
) -> Fraction:
    """Inner product computed in an arbitrary orthonormal basis of the game space.

    Each basis game is expanded in dividends and the maps are applied by
    linearity. The result must agree exactly with `inner_L_general`; the
    basis is validated first and rejected if its pairwise inner products
    differ from the identity matrix.
    """
    if p.n != q.n or p.n != basis.n:
        raise ValueError(f"player counts differ: {p.n}, {q.n}, basis {basis.n}")
    rows = basis.dividend_rows()
    d = len(rows)
    for i in range(d):
        for j in range(i, d):
            expected = _ONE if i == j else _ZERO
            acc = _ZERO
            for x, y in zip(rows[i], rows[j]):
                if x and y:
                    acc += x * y
            if acc != expected:
                raise ValueError(
                    f"basis is not orthonormal: vectors {i} and {j} pair to {acc}, expected {expected}"
                )
    n = p.n
    total = _ZERO
    for row in rows:
        p_img = [_ZERO] * n
        q_img = [_ZERO] * n
        for coeff, p_vec, q_vec in zip(row, p.actions, q.actions):
            if not coeff:
                continue
            for i in range(n):
                if p_vec[i]:
                    p_img[i] += coeff * p_vec[i]
                if q_vec[i]:
                    q_img[i] += coeff * q_vec[i]
        for x, y in zip(p_img, q_img):
            if x and y:
                total += x * y
    return total


def optimal_epsilon(target: SymmetricValueProfile) -> Fraction:
    """Mixing parameter of the closest point on the Shapley-to-equal-division line."""
    n = target.n
    sh = named_profile("sh", n)
    axis = named_profile("ed", n) - sh
    return inner_L(axis, target - sh) / axis_norm_sq(n)


def banzhaf_optimal_epsilon(n: int) -> Fraction:
    """Closed form of the optimal mixing parameter for the Banzhaf value."""
    if n < 2:
        raise ValueError(f"player count must be at least 2, got {n}")
    gap = 2 - 2 * Fraction(3 ** (n - 1), 2 ** (n - 1))
    return 1 + gap / axis_norm_sq(n)


def esd_optimal_epsilon(n: int) -> Fraction:
    """Closed form of the optimal mixing parameter for equal surplus division."""
    if n < 2:
        raise ValueError(f"player count must be at least 2, got {n}")
    return 1 - Fraction(n - 1) / axis_norm_sq(n)


def residual_profile(target: SymmetricValueProfile) -> SymmetricValueProfile:
    """The component of the target orthogonal to the line, as a profile."""
    return target - egalitarian_shapley(optimal_epsilon(target), target.n)


@dataclass(frozen=True)
class ProjectionReport:
    """Exact summary of one projection onto the Shapley-to-equal-division line.

    ``at_shapley`` marks the degenerate case where the target coincides with
    the Shapley value, for which ``r2`` is 1 by convention.
    """

    n: int
    target: str
    eps_star: Fraction
    dist_sq: Fraction
    proj_sq: Fraction
    resid_sq: Fraction
    r2: Fraction
    at_shapley: bool


def projection_report(target: SymmetricValueProfile, name: str = "") -> ProjectionReport:
    """Project a symmetric profile onto the line and report all exact scalars.

    The residual norm is computed by evaluating the inner product on the
    residual profile, not from the decomposition identity, so
    dist_sq == proj_sq + resid_sq is a genuine cross-check for callers.
    """
    n = target.n
    sh = named_profile("sh", n)
    diff = target - sh
    eps = optimal_epsilon(target)
    dist_sq = inner_L(diff, diff)
    proj_sq = eps * eps * axis_norm_sq(n)
    resid = residual_profile(target)
    resid_sq = inner_L(resid, resid)
    at_shapley = dist_sq == 0
    r2 = _ONE if at_shapley else proj_sq / dist_sq
    return ProjectionReport(
        n=n,
        target=name,
        eps_star=eps,
        dist_sq=dist_sq,
        proj_sq=proj_sq,
        resid_sq=resid_sq,
        r2=r2,
        at_shapley=at_shapley,
    )
