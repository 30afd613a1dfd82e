"""Shared builders for randomized, always-admissible test instances."""

from __future__ import annotations

import random
from fractions import Fraction

from qlincat import (
    GradedSpace,
    NotComplementary,
    make_sudbery,
    space_of,
)

MIXED_SHAPES = [(0, 0), (0, 1), (1, 1), (0, 0, 0), (0, 0, 1), (0, 1, 1)]


def rand_nonzero(rng: random.Random, lo: int = -5, hi: int = 5, den: int = 4) -> Fraction:
    while True:
        n = rng.randint(lo, hi)
        if n:
            return Fraction(n, rng.randint(1, den))


def rand_space(rng: random.Random, shapes=MIXED_SHAPES) -> GradedSpace:
    return space_of(rng.choice(shapes))


def rand_reciprocal(rng: random.Random, space: GradedSpace):
    """A reciprocal parameter matrix with the parity diagonal."""
    n = space.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        m[a][a] = Fraction((-1) ** space.parities[a])
        for b in range(a + 1, n):
            r = rand_nonzero(rng)
            m[a][b] = r
            m[b][a] = 1 / r
    return tuple(tuple(row) for row in m)


def rand_sudbery(rng: random.Random, space: GradedSpace, name: str = ""):
    """Admissible two-parameter object with independent random p and q."""
    while True:
        q = rand_reciprocal(rng, space)
        p = rand_reciprocal(rng, space)
        try:
            return make_sudbery(space, q, p, name)
        except NotComplementary:
            continue


def rand_constant(rng: random.Random) -> Fraction:
    """A random quantum constant, never 0 or -1."""
    while True:
        c = rand_nonzero(rng)
        if c not in (-1, 1):
            return c


def sudbery_with_constant(
    rng: random.Random,
    space: GradedSpace,
    constant: Fraction,
    name: str = "",
):
    """Object whose ratios realize the given constant under a random basis order."""
    n = space.dim
    order = list(range(n))
    rng.shuffle(order)
    positions = [0] * n
    for rank_, a in enumerate(order):
        positions[a] = rank_
    q = rand_reciprocal(rng, space)
    p = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        p[a][a] = Fraction((-1) ** space.parities[a])
        for b in range(n):
            if a != b:
                s = (positions[b] > positions[a]) - (positions[b] < positions[a])
                p[a][b] = q[a][b] * constant**s
    return make_sudbery(space, q, tuple(tuple(r) for r in p), name)


def even2_sudbery(p21, q21, name: str = ""):
    """Purely even dim-2 object from the two upper parameters p^{21}, q^{21}."""
    p21, q21 = Fraction(p21), Fraction(q21)
    one = Fraction(1)
    q = ((one, 1 / q21), (q21, one))
    p = ((one, 1 / p21), (p21, one))
    return make_sudbery(space_of((0, 0)), q, p, name)
