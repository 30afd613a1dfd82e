"""Quantum (super)space objects: a graded space with a complementary
decomposition of the tensor square of its dual.

An object carries s complementary subspaces of V' (x) V' (s = 2 being the
I (+) J case), each stored as a list of spanning vectors over the degree-2
word basis.  Named constructors cover the classical decomposition, the
two-parameter (Sudbery-type) family, and its one-parameter normalized form.
Parameter matrices are exact rationals, never indeterminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graded import GradedSpace, koszul_gram
from .linalg import (
    Matrix,
    NotComplementary,
    Vector,
    annihilator,
    frac,
    projectors,
    rank,
    row_spans_equal,
)


class BadParameters(Exception):
    """Parameter matrices violate reciprocity or the diagonal constraint."""


ParamMatrix = tuple[tuple[Fraction, ...], ...]


def _as_param_matrix(m, n: int, label: str) -> ParamMatrix:
    rows = tuple(tuple(frac(x) for x in row) for row in m)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise BadParameters(f"{label} must be a {n}x{n} matrix")
    return rows


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuantumObject:
    """A graded space plus a complementary decomposition of V' (x) V'.

    components[k] is a tuple of spanning vectors (coordinates over the
    lexicographic degree-2 word basis, index (A, B) -> A*dim + B).
    For two-parameter kinds, qp = (Q, P) holds the defining matrices.
    """

    space: GradedSpace
    components: tuple[tuple[Vector, ...], ...]
    kind: str = "general"
    qp: tuple[ParamMatrix, ParamMatrix] | None = None
    normalized: tuple[ParamMatrix, int, Fraction] | None = None
    name: str = ""

    @property
    def s(self) -> int:
        return len(self.components)

    def component_dims(self) -> tuple[int, ...]:
        return tuple(
            rank(Matrix(comp)) if comp else 0 for comp in self.components
        )

    def projectors(self) -> list[Matrix]:
        return projectors(self.components, self.space.dim**2)


def validate_sudbery_params(space: GradedSpace, q: ParamMatrix, p: ParamMatrix) -> None:
    """Check reciprocity, the parity diagonal and complementarity."""
    n = space.dim
    for label, m in (("q", q), ("p", p)):
        for a in range(n):
            expected = Fraction((-1) ** space.parities[a])
            if m[a][a] != expected:
                raise BadParameters(
                    f"{label}[{a}][{a}] = {m[a][a]}, must equal (-1)**parity = {expected}"
                )
            for b in range(n):
                if m[a][b] == 0:
                    raise BadParameters(f"{label}[{a}][{b}] must be nonzero")
                if m[a][b] * m[b][a] != 1:
                    raise BadParameters(
                        f"reciprocity violated: {label}[{a}][{b}]*{label}[{b}][{a}] != 1"
                    )
    for a in range(n):
        for b in range(n):
            if q[a][b] + p[a][b] == 0:
                raise NotComplementary(
                    f"q[{a}][{b}] + p[{a}][{b}] == 0: the two components do not span"
                )


def _pair_spans(space: GradedSpace, q: ParamMatrix, p: ParamMatrix):
    """Spanning vectors for the two components from parameter matrices."""
    n = space.dim
    minus: list[Vector] = []
    plus: list[Vector] = []
    for a in range(n):
        for b in range(n):
            vec = [Fraction(0)] * (n * n)
            vec[a * n + b] += Fraction(1)
            vec[b * n + a] -= q[a][b]
            if any(vec):
                minus.append(tuple(vec))
            vec = [Fraction(0)] * (n * n)
            vec[a * n + b] += Fraction(1)
            vec[b * n + a] += p[a][b]
            if any(vec):
                plus.append(tuple(vec))
    return tuple(minus), tuple(plus)


def classical_params(space: GradedSpace) -> ParamMatrix:
    n = space.dim
    return tuple(
        tuple(
            Fraction((-1) ** (space.parities[a] * space.parities[b]))
            for b in range(n)
        )
        for a in range(n)
    )


def make_classical(space: GradedSpace, name: str = "") -> QuantumObject:
    """The undeformed object: skew-symmetric and symmetric tensors."""
    qc = classical_params(space)
    i_span, j_span = _pair_spans(space, qc, qc)
    obj = QuantumObject(space, (i_span, j_span), "classical", (qc, qc), None, name)
    obj.projectors()
    return obj


def make_sudbery(space: GradedSpace, q, p, name: str = "") -> QuantumObject:
    """Two-parameter object: first component spanned by e^A e^B - q^{AB} e^B e^A,
    second by e^A e^B + p^{AB} e^B e^A."""
    n = space.dim
    qm = _as_param_matrix(q, n, "q")
    pm = _as_param_matrix(p, n, "p")
    validate_sudbery_params(space, qm, pm)
    i_span, j_span = _pair_spans(space, qm, pm)
    kind = "classical" if qm == pm == classical_params(space) else "sudbery"
    obj = QuantumObject(space, (i_span, j_span), kind, (qm, pm), None, name)
    obj.projectors()
    return obj


def make_normalized(space: GradedSpace, q, eps: int, lam, name: str = "") -> QuantumObject:
    """One-parameter normalized object.

    The branch flag eps in {+1, -1} resolves the paired signs in the defining
    relations: the coordinate relations use q^{AB} lam**(eps*sign(A-B)) while
    the parity-reversed coordinates use q^{AB} lam**(-eps*sign(A-B)).  The
    induced two-parameter matrices are therefore

        qhat^{AB} = q^{AB} * lam**(eps*sign(A-B)),
        phat^{AB} = q^{AB} * lam**(-eps*sign(A-B)),

    and the quantum constant extracted from the ratios is lam**(2*eps).
    For a 2-dimensional even space with eps = -1, two objects with upper
    parameters u = q[1][0] and w = q[1][0] reproduce the six cross relations
    of the one-parameter matrix family with parameters (u, w, lam).
    """
    lam = frac(lam)
    if lam == 0:
        raise BadParameters("lam must be nonzero")
    if eps not in (1, -1):
        raise BadParameters("eps must be +1 or -1")
    n = space.dim
    qm = _as_param_matrix(q, n, "q")
    qhat = []
    phat = []
    for a in range(n):
        qrow, prow = [], []
        for b in range(n):
            s = _sign(a - b) * eps
            qrow.append(qm[a][b] * lam**s)
            prow.append(qm[a][b] * lam**-s)
        qhat.append(tuple(qrow))
        phat.append(tuple(prow))
    obj = make_sudbery(space, tuple(qhat), tuple(phat), name)
    return QuantumObject(
        obj.space, obj.components, "normalized", obj.qp, (qm, eps, lam), name
    )


def make_general(space: GradedSpace, components, name: str = "") -> QuantumObject:
    """Object with user-supplied component spanning vectors (any s >= 2)."""
    comps = tuple(
        tuple(tuple(frac(x) for x in v) for v in comp) for comp in components
    )
    if len(comps) < 2:
        raise ValueError("need at least two components")
    obj = QuantumObject(space, comps, "general", None, None, name)
    obj.projectors()
    return obj


def dual_object(obj: QuantumObject) -> QuantumObject:
    """The dual object: components are the annihilators, swapped.

    For a two-parameter object the dual is again two-parameter with
    q_dual^{AB} = 1/p^{AB} and p_dual^{AB} = 1/q^{AB}.
    """
    if obj.s != 2:
        raise ValueError("dual_object requires a two-component object")
    n = obj.space.dim
    gram = koszul_gram(obj.space)
    ann_j = tuple(annihilator(obj.components[1], n * n, gram))
    ann_i = tuple(annihilator(obj.components[0], n * n, gram))
    qp = None
    kind = "general"
    if obj.qp is not None:
        q, p = obj.qp
        qd = tuple(tuple(1 / p[a][b] for b in range(n)) for a in range(n))
        pd = tuple(tuple(1 / q[a][b] for b in range(n)) for a in range(n))
        qp = (qd, pd)
        kind = "classical" if obj.kind == "classical" else "sudbery"
    dual = QuantumObject(
        obj.space, (ann_j, ann_i), kind, qp, None,
        f"dual({obj.name})" if obj.name else "",
    )
    dual.projectors()
    return dual


def objects_equal(a: QuantumObject, b: QuantumObject) -> bool:
    """Same space and the same component subspaces (as spans)."""
    if a.space != b.space or a.s != b.s:
        return False
    return all(
        row_spans_equal(list(ca), list(cb))
        for ca, cb in zip(a.components, b.components)
    )
