"""The graded-dimension oracle and the quantum-constant criterion.

The oracle is ground truth: the degree-d part of the quadratic ideal is
spanned by word (x) relation (x) word placements, and the quotient dimension
is the word count minus the exact rank of that stack.  The criterion side
never looks at the ideal: it extracts a single constant c from the ratios
p^{AB}/q^{AB} of each object (two-valued structure {c, 1/c} plus a
transitive comparison pattern) and asks whether the two constants agree up
to inverse.  Tests confirm the two sides always agree at degree 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import comb, gcd

from .homs import HomAlgebra
from .spaces import QuantumObject

ORACLE_WORD_LIMIT = 10**6


class TooLarge(Exception):
    """The requested degree would enumerate too many words."""


def classical_dimension(parities, degree: int) -> int:
    """Degree-d dimension of the free supercommutative algebra on the
    given generators (odd ones square to zero)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    pair = tuple(int(p) % 2 for p in parities)
    m = pair.count(0)
    k = pair.count(1)
    total = 0
    for j in range(min(k, degree) + 1):
        e = degree - j
        even_part = 1 if e == 0 else (comb(m + e - 1, e) if m > 0 else 0)
        total += comb(k, j) * even_part
    return total


def _sparse_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank of sparse integer rows (cols keyed by word index).

    The pivot of a stored row is its largest column, so eliminating the
    largest pivoted column of a work row only introduces smaller columns and
    the reduction terminates.  All arithmetic is integer (fraction-free with
    gcd normalization).
    """
    pivots: dict[int, dict[int, int]] = {}
    rk = 0
    for row in rows:
        work = {c: v for c, v in row.items() if v}
        while work:
            lead = max(work)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in work.values():
                    g = gcd(g, v)
                if g > 1:
                    work = {c: v // g for c, v in work.items()}
                pivots[lead] = work
                rk += 1
                break
            a = work[lead]
            b = piv[lead]
            new = {c: b * v for c, v in work.items() if c != lead}
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = new.get(c, 0) - a * v
                if nv:
                    new[c] = nv
                elif c in new:
                    del new[c]
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            work = new
    return rk


def _int_relation_terms(rels) -> list[list[tuple[tuple[int, int], int]]]:
    """Relation polynomials with denominators cleared to integers."""
    out = []
    for poly in rels.polys:
        den = 1
        for c in poly.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        out.append([(w, int(c * den)) for w, c in poly.terms.items()])
    return out


def dimension_oracle(hom: HomAlgebra, degree: int) -> int:
    """Exact dimension of the degree-d part of the quotient algebra."""
    if degree < 2:
        raise ValueError("oracle needs degree >= 2")
    n = hom.alphabet.size
    if n**degree > ORACLE_WORD_LIMIT:
        raise TooLarge(f"{n}**{degree} words exceed the oracle guard")
    rel_terms = _int_relation_terms(hom.relations)
    rows: list[dict[int, int]] = []
    for i in range(degree - 1):
        tail = degree - 2 - i
        for u in product(range(n), repeat=i):
            upre = 0
            for g in u:
                upre = upre * n + g
            upre *= n ** (tail + 2)
            for v in product(range(n), repeat=tail):
                vidx = 0
                for g in v:
                    vidx = vidx * n + g
                for rel in rel_terms:
                    row = {}
                    for (g, h), c in rel:
                        idx = upre + (g * n + h) * n**tail + vidx
                        row[idx] = c
                    rows.append(row)
    return n**degree - _sparse_rank(rows)


@dataclass(frozen=True)
class Extraction:
    """A constant and basis ordering realizing p^{AB} = q^{AB} c^{sign}.

    positions[A] is the rank of the original index A in the realizing order.
    unconstrained marks spaces (dim <= 1) whose constant is arbitrary.
    """

    constant: Fraction
    positions: tuple[int, ...]
    unconstrained: bool = False


def pbw_extract_constant(obj: QuantumObject) -> Extraction | None:
    """Extract (c, ordering) from a two-parameter object, or None.

    Succeeds iff every off-diagonal ratio p^{AB}/q^{AB} lies in {c, 1/c} for
    a single c and the two-valued pattern is a transitive tournament, i.e.
    realizable as sign(position(B) - position(A)).
    """
    if obj.qp is None:
        return None
    q, p = obj.qp
    n = obj.space.dim
    if n <= 1:
        return Extraction(Fraction(1), tuple(range(n)), unconstrained=True)
    ratios = {}
    for a in range(n):
        for b in range(n):
            if a != b:
                ratios[(a, b)] = p[a][b] / q[a][b]
    c = next((r for r in ratios.values() if r != 1), Fraction(1))
    if c == 1:
        if any(r != 1 for r in ratios.values()):
            return None
        return Extraction(Fraction(1), tuple(range(n)))
    cinv = 1 / c
    for r in ratios.values():
        if r != c and r != cinv:
            return None
    # tournament: A points at B when the (A, B) ratio equals c
    wins = [0] * n
    for (a, b), r in ratios.items():
        if r == c:
            wins[a] += 1
    order = sorted(range(n), key=lambda a: (-wins[a], a))
    positions = [0] * n
    for rank_, a in enumerate(order):
        positions[a] = rank_
    for (a, b), r in ratios.items():
        want = c if positions[b] > positions[a] else cinv
        if r != want:
            return None
    return Extraction(c, tuple(positions))


def _ordering_by_enumeration(obj: QuantumObject) -> Extraction | None:
    """Brute-force cross-check of the ordering search (small dims only)."""
    if obj.qp is None:
        return None
    q, p = obj.qp
    n = obj.space.dim
    if n <= 1:
        return Extraction(Fraction(1), tuple(range(n)), unconstrained=True)
    candidates = {p[a][b] / q[a][b] for a in range(n) for b in range(n) if a != b}
    candidates |= {1 / c for c in candidates}
    for c in sorted(candidates):
        if c == 0:
            continue
        for perm in permutations(range(n)):
            positions = perm
            ok = True
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    s = (positions[b] > positions[a]) - (positions[b] < positions[a])
                    if p[a][b] != q[a][b] * c**s:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return Extraction(c, tuple(positions))
    return None


@dataclass(frozen=True)
class PBWVerdict:
    criterion_holds: bool
    constant_source: Fraction | None
    constant_target: Fraction | None
    ordering_source: tuple[int, ...] | None
    ordering_target: tuple[int, ...] | None
    oracle_dims: tuple[tuple[int, int, int], ...] = ()


def _compatible(ea: Extraction, eb: Extraction) -> bool:
    if ea.unconstrained or eb.unconstrained:
        return True
    return ea.constant in (eb.constant, 1 / eb.constant)


def pbw_criterion(
    src: QuantumObject,
    tgt: QuantumObject,
    oracle_degree: int | None = 3,
) -> PBWVerdict:
    """Classical-dimension criterion: both constants extract and agree up to
    inverse.  The verdict optionally carries exact quotient dimensions
    against the classical counts up to oracle_degree for cross-checking."""
    ea = pbw_extract_constant(src)
    eb = pbw_extract_constant(tgt)
    holds = ea is not None and eb is not None and _compatible(ea, eb)
    dims: list[tuple[int, int, int]] = []
    if oracle_degree is not None and oracle_degree >= 2:
        from .homs import hom_algebra

        size = src.space.dim * tgt.space.dim
        if size**oracle_degree > ORACLE_WORD_LIMIT:
            raise TooLarge(
                f"{size}**{oracle_degree} words exceed the oracle guard"
            )
        hom = hom_algebra(src, tgt)
        for d in range(2, oracle_degree + 1):
            dims.append(
                (
                    d,
                    dimension_oracle(hom, d),
                    classical_dimension(hom.alphabet.parities, d),
                )
            )
    return PBWVerdict(
        criterion_holds=holds,
        constant_source=ea.constant if ea else None,
        constant_target=eb.constant if eb else None,
        ordering_source=ea.positions if ea else None,
        ordering_target=eb.positions if eb else None,
        oracle_dims=tuple(dims),
    )
