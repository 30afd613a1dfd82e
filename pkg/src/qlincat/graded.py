"""Z2-graded index bookkeeping: parities, Koszul signs, tensor word bases.

All sign conventions used across the package are fixed here, once:

* transposing graded symbols y, u costs (-1)**(parity(y)*parity(u)), so the
  product in a tensor product of algebras is
  (x (x) y)(u (x) v) = (-1)**(parity(y)*parity(u)) (xu (x) yv);
* the pairing of degree-2 words of the dual bases is
  <e_A e_B, e^C e^D> = (-1)**(par(B)*par(C)) delta_A^C delta_B^D;
* the parity-reversing isomorphism on the tensor square sends
  e^A (x) e^B to (-1)**par(A) (Pi e^A) (x) (Pi e^B).

Basis enumeration is lexicographic in index tuples so matrix layouts are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import Matrix


class DegreeMismatch(Exception):
    """Words do not have the degree required by the operation."""


@dataclass(frozen=True)
class GradedSpace:
    """A finite-dimensional Z2-graded space: a parity bit per basis index."""

    dim: int
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.parities) != self.dim:
            raise ValueError("parity list length must equal dim")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")

    def word_parity(self, word: tuple[int, ...]) -> int:
        return sum(self.parities[i] for i in word) % 2

    @property
    def even_count(self) -> int:
        return self.parities.count(0)

    @property
    def odd_count(self) -> int:
        return self.parities.count(1)


def even_space(n: int) -> GradedSpace:
    return GradedSpace(n, (0,) * n)


def space_of(parities) -> GradedSpace:
    pair = tuple(int(p) for p in parities)
    return GradedSpace(len(pair), pair)


def reversed_parity_space(space: GradedSpace) -> GradedSpace:
    return GradedSpace(space.dim, tuple(1 - p for p in space.parities))


def koszul_sign(p1: int, p2: int) -> int:
    """Sign produced by transposing symbols of parities p1 and p2."""
    return -1 if (p1 * p2) % 2 else 1


def tensor_power_basis(space: GradedSpace, degree: int) -> list[tuple[int, ...]]:
    """All words of the given degree, in lexicographic order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return list(product(range(space.dim), repeat=degree))


def koszul_pairing(
    space: GradedSpace, lower: tuple[int, int], upper: tuple[int, int]
) -> Fraction:
    """Pairing of degree-2 words: <e_A e_B, e^C e^D>."""
    if len(lower) != 2 or len(upper) != 2:
        raise DegreeMismatch("koszul_pairing is defined on degree-2 words")
    a, b = lower
    c, d = upper
    if a != c or b != d:
        return Fraction(0)
    return Fraction(koszul_sign(space.parities[b], space.parities[c]))


def koszul_gram(space: GradedSpace) -> Matrix:
    """Gram matrix of the degree-2 pairing: a signed diagonal matrix."""
    n = space.dim
    signs = []
    for a, b in product(range(n), repeat=2):
        signs.append(koszul_sign(space.parities[a], space.parities[b]))
    return Matrix(
        [
            [Fraction(signs[i]) if i == j else Fraction(0) for j in range(n * n)]
            for i in range(n * n)
        ]
    )


def pi_matrix(space: GradedSpace) -> Matrix:
    """Coordinate matrix of the parity-reversion isomorphism on the tensor square.

    Diagonal with entry (-1)**par(A) at word (A, B); it is its own inverse.
    """
    n = space.dim
    entries = [(-1) ** space.parities[a] for a, _ in product(range(n), repeat=2)]
    return Matrix(
        [
            [Fraction(entries[i]) if i == j else Fraction(0) for j in range(n * n)]
            for i in range(n * n)
        ]
    )


def pi_image(space: GradedSpace, vec) -> tuple[Fraction, ...]:
    """Apply the parity-reversion isomorphism to a tensor-square vector."""
    return pi_matrix(space).apply(vec)
