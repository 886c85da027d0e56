"""Counting invariants of a module J/I and their binomial transforms.

alpha counts the subsets A with x_A in J \\ I by cardinality.  The level-q
transform beta is the signed binomial transform of alpha; the Hilbert depth
is the largest level at which every transform entry is nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

import numpy as np

from .complexes import ComplexLike, complex_of_ideal, f_vector
from .ideals import (
    DEFAULT_ENUMERATION_CAP,
    IdealPair,
    colon,
    membership_table,
    popcount_table,
)
from .macaulay import binomial_ext


@dataclass(frozen=True)
class AlphaVector:
    """Counts alpha_0..alpha_n of squarefree monomials in J \\ I by degree."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("alpha vector must have n+1 entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("alpha entries are counts and cannot be negative")

    @property
    def min_degree(self) -> int:
        return _first_positive(self.counts)

    @property
    def max_degree(self) -> int:
        return _last_positive(self.counts)


@dataclass(frozen=True)
class BetaVector:
    """The level-q signed binomial transform, entries for k = 0..q."""

    level: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.level + 1:
            raise ValueError("beta vector at level q must have q+1 entries")

    def first_negative(self) -> Optional[int]:
        for k, v in enumerate(self.values):
            if v < 0:
                return k
        return None

    @property
    def is_nonnegative(self) -> bool:
        return self.first_negative() is None


def _first_positive(counts: Sequence[int]) -> int:
    for k, c in enumerate(counts):
        if c > 0:
            return k
    raise ValueError("all entries are zero")


def _last_positive(counts: Sequence[int]) -> int:
    for k in range(len(counts) - 1, -1, -1):
        if counts[k] > 0:
            return k
    raise ValueError("all entries are zero")


def _transform_values(counts: Sequence[int], q: int) -> tuple[int, ...]:
    # beta_k^q = sum_j (-1)^(k-j) C(q-j, k-j) a_j; entries beyond the input
    # length are treated as zero.
    out = []
    for k in range(q + 1):
        top = min(k, len(counts) - 1)
        out.append(
            sum((-1) ** (k - j) * comb(q - j, k - j) * counts[j] for j in range(top + 1))
        )
    return tuple(out)


def alpha(pair: IdealPair, cap: int = DEFAULT_ENUMERATION_CAP) -> AlphaVector:
    """Count members of J \\ I by degree with one pass over all 2^n masks."""
    table = membership_table(pair.upper, cap) & ~membership_table(pair.lower, cap)
    counts = np.bincount(popcount_table(pair.n)[table], minlength=pair.n + 1)
    return AlphaVector(pair.n, tuple(int(c) for c in counts))


def beta(alpha_vec: AlphaVector, q: int) -> BetaVector:
    """The level-q transform of an alpha vector, 0 <= q <= n."""
    if not 0 <= q <= alpha_vec.n:
        raise ValueError(f"level {q} outside 0..{alpha_vec.n}")
    return BetaVector(q, _transform_values(alpha_vec.counts, q))


def alpha_from_beta(beta_vec: BetaVector, d: int) -> AlphaVector:
    """Invert the level-d transform; recovers alpha_0..alpha_d."""
    if d != beta_vec.level:
        raise ValueError("inversion level must match the beta vector level")
    values = beta_vec.values
    counts = tuple(
        sum(comb(d - j, k - j) * values[j] for j in range(k + 1)) for k in range(d + 1)
    )
    return AlphaVector(d, counts)


def beta_table(alpha_vec: AlphaVector, q_lo: int, q_hi: int) -> list[BetaVector]:
    return [beta(alpha_vec, q) for q in range(q_lo, q_hi + 1)]


def hdepth_of_alpha(alpha_vec: AlphaVector) -> int:
    """Largest q with beta^q entirely nonnegative.

    Scans downward from the degree bound max{k : alpha_k > 0}; the scan is
    guaranteed to stop at min{k : alpha_k > 0} or above.
    """
    top = alpha_vec.max_degree
    bottom = alpha_vec.min_degree
    for q in range(top, bottom - 1, -1):
        if all(v >= 0 for v in _transform_values(alpha_vec.counts, q)):
            return q
    raise AssertionError("transform scan fell through its lower bound")


def hdepth(pair: IdealPair, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Hilbert depth of J/I."""
    a = alpha(pair, cap)
    if a.counts == (0,) * (pair.n + 1):
        raise ValueError("alpha vanishes identically; I and J coincide as ideals")
    return hdepth_of_alpha(a)


def dim_module(pair: IdealPair, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Krull dimension of J/I, read off as max{k : alpha_k > 0}."""
    return alpha(pair, cap).max_degree


def dim_module_colon(pair: IdealPair, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Cross-check path for the dimension: dim of Delta(I:J) plus one."""
    quotient = colon(pair.lower, pair.upper)
    if quotient.is_unit:
        raise ValueError("(I : J) is the unit ideal; the pair is degenerate")
    return complex_of_ideal(quotient, cap).dim + 1


def h_vector(x: ComplexLike, level: Optional[int] = None,
             cap: int = DEFAULT_ENUMERATION_CAP) -> BetaVector:
    """h-vector of a complex or relative complex via its face counts.

    The default level is dim+1; an explicit level is used when transforming
    skeleta, where the truncation may sit below the requested level.
    """
    fv = f_vector(x, cap)
    if level is None:
        if not fv.entries:
            raise ValueError("empty complex has no intrinsic level; pass one explicitly")
        level = len(fv.entries) - 1
    return BetaVector(level, _transform_values(fv.entries, level))


def beta_recurrence_check(alpha_vec: AlphaVector, d: int) -> Optional[tuple[str, int]]:
    """Exact check of the two transform identities at level d.

    Verifies beta_k^{d+1} = beta_k^d - beta_{k-1}^d for 1 <= k <= d, and the
    complement identity beta_k^d(complement) = C(n-d+k-1, k) - beta_k^d
    where the complement counts are C(n,j) - alpha_j.  Returns None when
    both hold, else (identity name, first failing k).
    """
    if not 1 <= d <= alpha_vec.n:
        raise ValueError(f"level {d} outside 1..{alpha_vec.n}")
    n = alpha_vec.n
    at_d = _transform_values(alpha_vec.counts, d)
    at_d1 = _transform_values(alpha_vec.counts, d + 1)
    for k in range(1, d + 1):
        if at_d1[k] != at_d[k] - at_d[k - 1]:
            return ("level-recurrence", k)
    complement = tuple(comb(n, j) - c for j, c in enumerate(alpha_vec.counts))
    if any(c < 0 for c in complement):
        raise ValueError("alpha exceeds the binomial bound; not a subset count")
    comp_at_d = _transform_values(complement, d)
    for k in range(d + 1):
        if comp_at_d[k] != binomial_ext(n - d + k - 1, k) - at_d[k]:
            return ("complement-identity", k)
    return None
