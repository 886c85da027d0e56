"""Seeded random instances for property sweeps."""

from __future__ import annotations

import random

from .ideals import IdealPair, Monomial, MonomialIdeal, minimalize


def random_monomial(rng: random.Random, n: int, min_degree: int = 1) -> Monomial:
    degree = rng.randint(min_degree, n)
    bits = rng.sample(range(n), degree)
    return Monomial(sum(1 << b for b in bits), n)


def random_proper_ideal(rng: random.Random, n: int, max_gens: int = 6) -> MonomialIdeal:
    """A nonzero ideal with nonconstant generators (never zero, never unit)."""
    count = rng.randint(1, max_gens)
    return minimalize((random_monomial(rng, n) for _ in range(count)), n)


def random_quotient_pair(rng: random.Random, n: int) -> IdealPair:
    """S/I for a random proper nonzero ideal."""
    return IdealPair.quotient(random_proper_ideal(rng, n))


def random_module_pair(rng: random.Random, n: int) -> IdealPair:
    """A random proper nonzero ideal viewed as a module."""
    return IdealPair.module(random_proper_ideal(rng, n))


def random_pair(rng: random.Random, n: int, max_attempts: int = 100) -> IdealPair:
    """A valid pair I < J with J proper or unit and I possibly zero."""
    for _ in range(max_attempts):
        if rng.random() < 0.3:
            upper = MonomialIdeal.unit(n)
        else:
            upper = random_proper_ideal(rng, n)
        gens = []
        for _ in range(rng.randint(0, 4)):
            if upper.is_unit:
                gens.append(random_monomial(rng, n))
            else:
                base = rng.choice(upper.generators).mask
                extra = random_monomial(rng, n, min_degree=0).mask
                gens.append(Monomial(base | extra, n))
        lower = minimalize(gens, n)
        if lower != upper:
            return IdealPair(lower, upper)
    raise RuntimeError("failed to draw a valid pair")


def random_complete_intersection(rng: random.Random, n: int) -> tuple[IdealPair, int]:
    """S/I for generators with pairwise disjoint supports; returns (pair, m)."""
    variables = list(range(n))
    rng.shuffle(variables)
    m = rng.randint(1, max(1, n // 2))
    gens = []
    cursor = 0
    for i in range(m):
        remaining = len(variables) - cursor - (m - i - 1)
        size = rng.randint(1, max(1, min(3, remaining)))
        block = variables[cursor:cursor + size]
        cursor += size
        gens.append(Monomial(sum(1 << b for b in block), n))
    return IdealPair.quotient(minimalize(gens, n)), m


def random_alpha_counts(rng: random.Random, n: int) -> tuple[int, ...]:
    """Counts bounded by the binomial coefficients, not identically zero."""
    from math import comb

    while True:
        counts = tuple(rng.randint(0, comb(n, k)) for k in range(n + 1))
        if any(counts):
            return counts
