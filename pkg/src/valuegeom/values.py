"""Symmetric linear value maps in per-size coordinates, plus brute-force oracles.

A symmetric linear value map on n players is pinned down by what it pays on
each unanimity game, and by symmetry that payoff has one value for members
of the generating coalition (``alpha``) and one for outsiders (``beta``),
depending only on the coalition size. The closed-form profiles here cover
the Shapley value, equal division, the Banzhaf value, equal surplus
division, and the solidarity value, together with the one-parameter family
interpolating Shapley and equal division.

The oracles at the bottom recompute the same solutions straight from their
definition sums (permutations, subsets, within-coalition averages) so the
closed forms can be checked against an independent path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .combinatorics import solidarity_stratum_epsilon
from .games import Coalition, Game, coalitions, dividends

PayoffVector = tuple[Fraction, ...]

PROFILE_KINDS = ("sh", "ed", "bz", "esd", "so")

#: Hard caps keeping the definition-sum oracles inside a sane runtime.
#: These are configuration constants, never silent truncations: exceeding a
#: cap raises.
SHAPLEY_ORACLE_MAX_PLAYERS = 8
BANZHAF_ORACLE_MAX_PLAYERS = 20
SOLIDARITY_ORACLE_MAX_PLAYERS = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SymmetryViolation(ValueError):
    """A general map failed player symmetry; carries the witnessing coalitions."""

    def __init__(self, message: str, first: Coalition, second: Coalition):
        super().__init__(message)
        self.first = first
        self.second = second


@dataclass(frozen=True)
class SymmetricValueProfile:
    """Per-size coordinates of a symmetric linear value map.

    ``alpha[a-1]`` is the payoff to a member of a size-a generating
    coalition on its unanimity game, for a = 1..n. ``beta[a-1]`` is the
    payoff to a non-member, for a = 1..n-1 (at size n there are no
    non-members).
    """

    n: int
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"player count must be at least 2, got {self.n}")
        if len(self.alpha) != self.n:
            raise ValueError(f"expected {self.n} alpha entries, got {len(self.alpha)}")
        if len(self.beta) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} beta entries, got {len(self.beta)}")

    @classmethod
    def zero(cls, n: int) -> "SymmetricValueProfile":
        return cls(n, (_ZERO,) * n, (_ZERO,) * (n - 1))

    def alpha_at(self, a: int) -> Fraction:
        """Member payoff at coalition size a (1-based)."""
        return self.alpha[a - 1]

    def beta_at(self, a: int) -> Fraction:
        """Non-member payoff at coalition size a (1-based, a < n)."""
        return self.beta[a - 1]

    def unanimity_payoff(self, generators: "Coalition | int") -> PayoffVector:
        """Payoff vector on the unanimity game generated by the given coalition."""
        bits = generators.bits if isinstance(generators, Coalition) else int(generators)
        if not 0 < bits < (1 << self.n):
            raise ValueError(f"generator bits {bits} out of range for n={self.n}")
        a = bits.bit_count()
        al = self.alpha[a - 1]
        be = self.beta[a - 1] if a < self.n else _ZERO
        return tuple(al if bits >> i & 1 else be for i in range(self.n))

    def is_efficient(self) -> bool:
        """Whether the induced map always distributes exactly the grand worth."""
        n = self.n
        for a in range(1, n):
            if a * self.alpha[a - 1] + (n - a) * self.beta[a - 1] != 1:
                return False
        return n * self.alpha[n - 1] == 1

    def _require_same_n(self, other: "SymmetricValueProfile") -> None:
        if self.n != other.n:
            raise ValueError(f"player counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "SymmetricValueProfile") -> "SymmetricValueProfile":
        self._require_same_n(other)
        return SymmetricValueProfile(
            self.n,
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
            tuple(a + b for a, b in zip(self.beta, other.beta)),
        )

    def __sub__(self, other: "SymmetricValueProfile") -> "SymmetricValueProfile":
        self._require_same_n(other)
        return SymmetricValueProfile(
            self.n,
            tuple(a - b for a, b in zip(self.alpha, other.alpha)),
            tuple(a - b for a, b in zip(self.beta, other.beta)),
        )

    def __rmul__(self, scalar) -> "SymmetricValueProfile":
        c = Fraction(scalar)
        return SymmetricValueProfile(
            self.n,
            tuple(c * a for a in self.alpha),
            tuple(c * b for b in self.beta),
        )

    def __neg__(self) -> "SymmetricValueProfile":
        return (-1) * self


def named_profile(kind: str, n: int) -> SymmetricValueProfile:
    """Closed-form profile of one of the five standard solutions.

    Kinds: ``sh`` Shapley, ``ed`` equal division, ``bz`` Banzhaf, ``esd``
    equal surplus division, ``so`` solidarity.
    """
    if n < 2:
        raise ValueError(f"player count must be at least 2, got {n}")
    if kind == "sh":
        alpha = tuple(Fraction(1, a) for a in range(1, n + 1))
        beta = (_ZERO,) * (n - 1)
    elif kind == "ed":
        share = Fraction(1, n)
        alpha = (share,) * n
        beta = (share,) * (n - 1)
    elif kind == "bz":
        alpha = tuple(Fraction(1, 1 << (a - 1)) for a in range(1, n + 1))
        beta = (_ZERO,) * (n - 1)
    elif kind == "esd":
        share = Fraction(1, n)
        alpha = (_ONE,) + (share,) * (n - 1)
        beta = (_ZERO,) + (share,) * (n - 2)
    elif kind == "so":
        # Outsider payoff per size comes from the solidarity closed form;
        # the member payoff is recovered from efficiency.
        beta_list = [solidarity_stratum_epsilon(a, n) / n for a in range(1, n)]
        alpha = tuple(
            (1 - (n - a) * beta_list[a - 1]) / a if a < n else Fraction(1, n)
            for a in range(1, n + 1)
        )
        beta = tuple(beta_list)
    else:
        raise ValueError(f"unknown value kind {kind!r}; expected one of {PROFILE_KINDS}")
    return SymmetricValueProfile(n, alpha, beta)


def egalitarian_shapley(eps, n: int) -> SymmetricValueProfile:
    """The mix (1 - eps) * Shapley + eps * equal division.

    Outsiders of a generating coalition receive exactly eps/n, for any
    rational eps (negative and above-one values included).
    """
    e = Fraction(eps)
    sh = named_profile("sh", n)
    ed = named_profile("ed", n)
    return (1 - e) * sh + e * ed


def profile_for_token(token: str, n: int) -> SymmetricValueProfile:
    """Resolve a value token: one of the named kinds, or ``f:<rational>``."""
    if token in PROFILE_KINDS:
        return named_profile(token, n)
    if token.startswith("f:"):
        try:
            eps = Fraction(token[2:])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad mixing parameter in token {token!r}") from exc
        return egalitarian_shapley(eps, n)
    raise ValueError(f"unknown value token {token!r}")


def evaluate(profile: SymmetricValueProfile, game: Game) -> PayoffVector:
    """Apply the value map to a game through its dividend decomposition."""
    if profile.n != game.n:
        raise ValueError(f"player counts differ: {profile.n} vs {game.n}")
    n = game.n
    divs = dividends(game).dividends
    payoff = [_ZERO] * n
    for mask in range(1, 1 << n):
        h = divs[mask - 1]
        if not h:
            continue
        a = mask.bit_count()
        al = h * profile.alpha[a - 1]
        be = h * profile.beta[a - 1] if a < n else _ZERO
        for i in range(n):
            payoff[i] += al if mask >> i & 1 else be
    return tuple(payoff)


@dataclass(frozen=True)
class GeneralLinearValueMap:
    """A linear value map pinned down by its payoff vector on every unanimity game.

    ``actions[m - 1]`` is the payoff vector on the unanimity game generated
    by the coalition with bitmask ``m``; linearity extends it to all games.
    """

    n: int
    actions: tuple[PayoffVector, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"player count must be at least 2, got {self.n}")
        expected = (1 << self.n) - 1
        if len(self.actions) != expected:
            raise ValueError(f"expected {expected} unanimity payoffs, got {len(self.actions)}")
        for vec in self.actions:
            if len(vec) != self.n:
                raise ValueError(f"payoff vectors must have length {self.n}")

    @classmethod
    def from_profile(cls, profile: SymmetricValueProfile) -> "GeneralLinearValueMap":
        return cls(profile.n, tuple(profile.unanimity_payoff(m) for m in coalitions(profile.n)))

    @classmethod
    def from_unanimity_images(
        cls, n: int, image: Callable[[int], Sequence[Fraction]]
    ) -> "GeneralLinearValueMap":
        """Build a map from a function giving the payoff on each unanimity game."""
        return cls(n, tuple(tuple(Fraction(x) for x in image(m)) for m in coalitions(n)))

    def apply(self, game: Game) -> PayoffVector:
        """Evaluate on an arbitrary game by expanding it in dividends."""
        if self.n != game.n:
            raise ValueError(f"player counts differ: {self.n} vs {game.n}")
        divs = dividends(game).dividends
        payoff = [_ZERO] * self.n
        for mask in range(1, 1 << self.n):
            h = divs[mask - 1]
            if not h:
                continue
            vec = self.actions[mask - 1]
            for i in range(self.n):
                if vec[i]:
                    payoff[i] += h * vec[i]
        return tuple(payoff)

    def _require_same_n(self, other: "GeneralLinearValueMap") -> None:
        if self.n != other.n:
            raise ValueError(f"player counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "GeneralLinearValueMap") -> "GeneralLinearValueMap":
        self._require_same_n(other)
        return GeneralLinearValueMap(
            self.n,
            tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.actions, other.actions)),
        )

    def __sub__(self, other: "GeneralLinearValueMap") -> "GeneralLinearValueMap":
        self._require_same_n(other)
        return GeneralLinearValueMap(
            self.n,
            tuple(tuple(a - b for a, b in zip(u, v)) for u, v in zip(self.actions, other.actions)),
        )

    def __rmul__(self, scalar) -> "GeneralLinearValueMap":
        c = Fraction(scalar)
        return GeneralLinearValueMap(
            self.n, tuple(tuple(c * a for a in vec) for vec in self.actions)
        )


def profile_from_general(vmap: GeneralLinearValueMap) -> SymmetricValueProfile:
    """Extract per-size coordinates, verifying player symmetry exhaustively.

    Raises SymmetryViolation naming the witnessing coalitions when any
    unanimity payoff is not constant on members and non-members, or when two
    equal-size coalitions disagree.
    """
    n = vmap.n
    alpha: list[Fraction] = [_ZERO] * n
    beta: list[Fraction] = [_ZERO] * (n - 1)
    first_mask: dict[int, int] = {}
    for mask in coalitions(n):
        a = mask.bit_count()
        vec = vmap.actions[mask - 1]
        members = [i for i in range(n) if mask >> i & 1]
        outsiders = [i for i in range(n) if not mask >> i & 1]
        al = vec[members[0]]
        for i in members[1:]:
            if vec[i] != al:
                here = Coalition(mask, n)
                raise SymmetryViolation(
                    f"payoff differs between members {members[0]} and {i} on unanimity game of {here}",
                    here,
                    here,
                )
        be = vec[outsiders[0]] if outsiders else None
        for i in outsiders[1:]:
            if vec[i] != be:
                here = Coalition(mask, n)
                raise SymmetryViolation(
                    f"payoff differs between non-members {outsiders[0]} and {i} on unanimity game of {here}",
                    here,
                    here,
                )
        if a in first_mask:
            ref = first_mask[a]
            if al != alpha[a - 1] or (be is not None and be != beta[a - 1]):
                raise SymmetryViolation(
                    f"size-{a} coalitions {Coalition(ref, n)} and {Coalition(mask, n)} induce different payoffs",
                    Coalition(ref, n),
                    Coalition(mask, n),
                )
        else:
            first_mask[a] = mask
            alpha[a - 1] = al
            if be is not None:
                beta[a - 1] = be
    return SymmetricValueProfile(n, tuple(alpha), tuple(beta))


def shapley_oracle(game: Game) -> PayoffVector:
    """Average marginal contribution over all player orderings, by full enumeration."""
    n = game.n
    if n > SHAPLEY_ORACLE_MAX_PLAYERS:
        raise ValueError(f"permutation enumeration is capped at n={SHAPLEY_ORACLE_MAX_PLAYERS}, got {n}")
    worths = [_ZERO, *game.worths]
    totals = [_ZERO] * n
    for perm in itertools.permutations(range(n)):
        mask = 0
        for i in perm:
            grown = mask | (1 << i)
            before, after = worths[mask], worths[grown]
            if after != before:
                totals[i] += after - before
            mask = grown
    count = factorial(n)
    return tuple(t / count for t in totals)


def banzhaf_oracle(game: Game) -> PayoffVector:
    """Average marginal contribution over all coalitions of the other players."""
    n = game.n
    if n > BANZHAF_ORACLE_MAX_PLAYERS:
        raise ValueError(f"subset enumeration is capped at n={BANZHAF_ORACLE_MAX_PLAYERS}, got {n}")
    worths = [_ZERO, *game.worths]
    scale = 1 << (n - 1)
    result = []
    for i in range(n):
        bit = 1 << i
        total = _ZERO
        for mask in range(1 << n):
            if mask & bit:
                continue
            before, after = worths[mask], worths[mask | bit]
            if after != before:
                total += after - before
        result.append(total / scale)
    return tuple(result)


def solidarity_oracle(game: Game) -> PayoffVector:
    """Definition sum of the solidarity value.

    Each coalition containing a player contributes its within-coalition
    average marginal contribution, weighted by (n-s)! (s-1)! / n!.
    """
    n = game.n
    if n > SOLIDARITY_ORACLE_MAX_PLAYERS:
        raise ValueError(f"coalition enumeration is capped at n={SOLIDARITY_ORACLE_MAX_PLAYERS}, got {n}")
    worths = [_ZERO, *game.worths]
    fact_n = factorial(n)
    weight = [_ZERO] * (n + 1)
    for s in range(1, n + 1):
        weight[s] = Fraction(factorial(n - s) * factorial(s - 1), fact_n)
    averaged = [_ZERO] * (1 << n)
    for mask in range(1, 1 << n):
        s = mask.bit_count()
        total = _ZERO
        rest = mask
        while rest:
            bit = rest & -rest
            before, after = worths[mask ^ bit], worths[mask]
            if after != before:
                total += after - before
            rest ^= bit
        averaged[mask] = total / s
    result = []
    for i in range(n):
        bit = 1 << i
        total = _ZERO
        for mask in range(1, 1 << n):
            if mask & bit and averaged[mask]:
                total += weight[mask.bit_count()] * averaged[mask]
        result.append(total)
    return tuple(result)
