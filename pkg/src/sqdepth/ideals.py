"""Squarefree monomials and monomial ideals as bitmasks over x_1..x_n.

A squarefree monomial is identified with its variable set, stored as an
integer mask (bit i-1 set means x_i divides the monomial).  Ideals are kept
as canonical antichains of generator masks, so equal ideals compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import CapExceededError, InvalidPairError, ParseError

MAX_VARIABLES = 63
DEFAULT_ENUMERATION_CAP = 24


@dataclass(frozen=True)
class RingContext:
    """The ambient polynomial ring, reduced to its variable count."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARIABLES:
            raise ValueError(f"variable count must be in 1..{MAX_VARIABLES}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial x_A, stored as the bitmask of A."""

    mask: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARIABLES:
            raise ValueError(f"variable count must be in 1..{MAX_VARIABLES}, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "Monomial") -> bool:
        return self.mask & ~other.mask == 0

    def support(self) -> tuple[int, ...]:
        """1-based variable indices."""
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __str__(self):
        if self.mask == 0:
            return "1"
        return "*".join(f"x{i}" for i in self.support())


def _canonical_masks(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


def _is_antichain(masks) -> bool:
    return all(
        not (a != b and a & ~b == 0) for a in masks for b in masks
    )


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal given by its minimal generators.

    ``generators`` is the divisibility antichain in canonical order
    (degree, then mask value).  The zero ideal has no generators; the unit
    ideal is generated by the empty mask (the monomial 1).
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARIABLES:
            raise ValueError(f"variable count must be in 1..{MAX_VARIABLES}, got {self.n}")
        masks = [g.mask for g in self.generators]
        if any(g.n != self.n for g in self.generators):
            raise ValueError("generator variable counts disagree with the ideal")
        if masks != list(_canonical_masks(masks)) or not _is_antichain(masks):
            raise ValueError("generators must be a canonically ordered antichain")

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial(0, n),))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "MonomialIdeal":
        return minimalize((Monomial(m, n) for m in masks), n)

    @property
    def kind(self) -> str:
        if not self.generators:
            return "zero"
        if self.generators[0].mask == 0:
            return "unit"
        return "proper"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return bool(self.generators) and self.generators[0].mask == 0

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def generator_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        """Membership test: some generator divides m."""
        if m.n != self.n:
            raise ValueError("monomial and ideal live in different rings")
        return any(g.mask & ~m.mask == 0 for g in self.generators)

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & ~mask == 0 for g in self.generators)

    def __str__(self):
        if self.is_zero:
            return "zero"
        if self.is_unit:
            return "unit"
        return ", ".join(str(g) for g in self.generators)


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Reduce a generating set to the divisibility antichain.

    Deterministic: the surviving generators are ordered by degree, then by
    mask value.  An empty generating set yields the zero ideal.
    """
    masks = sorted({g.mask for g in gens}, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(Monomial(m, n) for m in kept))


def _colon_single(ideal: MonomialIdeal, gmask: int) -> MonomialIdeal:
    # (I : x_B) is generated by the masks A \ B over generators x_A of I.
    return MonomialIdeal.from_masks((g.mask & ~gmask for g in ideal.generators), ideal.n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of squarefree ideals: pairwise mask unions, minimalized."""
    if a.n != b.n:
        raise ValueError("ideals live in different rings")
    return MonomialIdeal.from_masks(
        (ga.mask | gb.mask for ga in a.generators for gb in b.generators), a.n
    )


def colon(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal (I : J) for squarefree ideals.

    Computed as the intersection of (I : g) over the generators g of J.
    """
    if ideal.n != other.n:
        raise ValueError("ideals live in different rings")
    if other.is_zero:
        raise ValueError("colon by the zero ideal is undefined")
    result = MonomialIdeal.unit(ideal.n)
    for g in other.generators:
        result = intersect(result, _colon_single(ideal, g.mask))
    return result


@dataclass(frozen=True)
class IdealPair:
    """A validated pair I < J presenting the module J/I.

    The quotient S/I is the pair (I, unit); the ideal I viewed as a module
    is the pair (zero, I).
    """

    lower: MonomialIdeal
    upper: MonomialIdeal

    def __post_init__(self):
        if self.lower.n != self.upper.n:
            raise InvalidPairError("I and J live in different rings")
        for g in self.lower.generators:
            if not self.upper.contains(g):
                raise InvalidPairError(f"generator {g} of I does not lie in J")
        if self.lower == self.upper:
            raise InvalidPairError("I and J are equal as ideals")

    @property
    def n(self) -> int:
        return self.upper.n

    @classmethod
    def quotient(cls, ideal: MonomialIdeal) -> "IdealPair":
        """S/I as the pair (I, unit)."""
        return cls(ideal, MonomialIdeal.unit(ideal.n))

    @classmethod
    def module(cls, ideal: MonomialIdeal) -> "IdealPair":
        """The ideal I viewed as the module (zero, I)."""
        return cls(MonomialIdeal.zero(ideal.n), ideal)


# ---------------------------------------------------------------------------
# Subset tables.  All 2^n enumeration funnels through these numpy kernels.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def popcount_table(n: int) -> np.ndarray:
    """uint8 array of length 2^n with the popcount of every index."""
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        pc = np.concatenate([pc, pc + 1])
    pc.setflags(write=False)
    return pc


def check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap {cap}; raise it explicitly if intended"
        )


def membership_table(ideal: MonomialIdeal, cap: int = DEFAULT_ENUMERATION_CAP) -> np.ndarray:
    """Boolean array over all 2^n masks: x_A in the ideal.

    Seeded with the generators, then closed upward one bit at a time.
    """
    check_cap(ideal.n, cap)
    size = 1 << ideal.n
    table = np.zeros(size, dtype=bool)
    if ideal.is_unit:
        table[:] = True
        return table
    for g in ideal.generators:
        table[g.mask] = True
    for b in range(ideal.n):
        view = table.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return table


def downward_closure_table(masks: Iterable[int], n: int,
                           cap: int = DEFAULT_ENUMERATION_CAP) -> np.ndarray:
    """Boolean array over all 2^n masks: subset of one of the seeds."""
    check_cap(n, cap)
    table = np.zeros(1 << n, dtype=bool)
    for m in masks:
        table[m] = True
    for b in range(n):
        view = table.reshape(-1, 2, 1 << b)
        view[:, 0, :] |= view[:, 1, :]
    return table


def maximal_masks(table: np.ndarray, n: int) -> tuple[int, ...]:
    """Masks in the table with no marked proper superset, canonically ordered."""
    fac = table.copy()
    for b in range(n):
        tv = table.reshape(-1, 2, 1 << b)
        fv = fac.reshape(-1, 2, 1 << b)
        fv[:, 0, :] &= ~tv[:, 1, :]
    return _canonical_masks(int(m) for m in np.nonzero(fac)[0])


def minimal_masks(table: np.ndarray, n: int) -> tuple[int, ...]:
    """Masks in the table with no marked proper subset, canonically ordered."""
    mini = table.copy()
    for b in range(n):
        tv = table.reshape(-1, 2, 1 << b)
        mv = mini.reshape(-1, 2, 1 << b)
        mv[:, 1, :] &= ~tv[:, 0, :]
    return _canonical_masks(int(m) for m in np.nonzero(mini)[0])


# ---------------------------------------------------------------------------
# Text grammar: `zero` | `unit` | comma/whitespace-separated x<i>*x<j>*...
# with # comments to end of line.
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"[^\s,]+")
_FACTOR_RE = re.compile(r"x([1-9][0-9]*)\Z")


def _tokens_with_positions(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        hash_pos = line.find("#")
        if hash_pos >= 0:
            line = line[:hash_pos]
        for m in _TOKEN_RE.finditer(line):
            yield m.group(0), lineno, m.start() + 1


def _parse_product(token: str, line: int, col: int, n: int) -> int:
    mask = 0
    offset = 0
    for factor in token.split("*"):
        fcol = col + offset
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ParseError(
                f"malformed variable token {factor!r} (expected x<i>)", line, fcol
            )
        index = int(m.group(1))
        if not 1 <= index <= n:
            raise ParseError(f"variable index {index} out of range 1..{n}", line, fcol)
        bit = 1 << (index - 1)
        if mask & bit:
            raise ParseError(
                f"repeated variable x{index} in product (non-squarefree)", line, fcol
            )
        mask |= bit
        offset += len(factor) + 1
    return mask


def parse_ideal(text: str, ctx: RingContext) -> MonomialIdeal:
    """Parse one ideal from text; see the grammar in the module docstring."""
    tokens = list(_tokens_with_positions(text))
    if not tokens:
        raise ParseError("empty ideal specification")
    keywords = [t for t in tokens if t[0] in ("zero", "unit")]
    if keywords:
        if len(tokens) > 1:
            word, line, col = keywords[0]
            raise ParseError(
                f"keyword {word!r} cannot be combined with generators", line, col
            )
        return MonomialIdeal.zero(ctx.n) if tokens[0][0] == "zero" else MonomialIdeal.unit(ctx.n)
    masks = [_parse_product(tok, line, col, ctx.n) for tok, line, col in tokens]
    return MonomialIdeal.from_masks(masks, ctx.n)
