"""Executable coalgebra structure on the matrix-entry algebras: the
comultiplication homomorphism property, coassociativity, the counit, and
the 2x2 determinant with its multiplicativity.

Every reduction happens in degree-2 quotient coordinates (these are always
of classical dimension), so none of the checks here assume the PBW property
of the algebras involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graded import pi_image
from .homs import (
    HomAlgebra,
    QuotientMap,
    degree2_quotient,
    hom_algebra,
)
from .linalg import Matrix, frac, row_basis, solve
from .rewrite import NCPoly, Word, matrix_alphabet
from .spaces import QuantumObject


class WrongShape(Exception):
    """Operation requires purely even two-dimensional two-parameter objects."""


@dataclass(frozen=True)
class ComposableTriple:
    """Objects a, b, c together with the three matrix-entry algebras of the
    composable pair of arrows."""

    a: QuantumObject
    b: QuantumObject
    c: QuantumObject
    hom_ab: HomAlgebra
    hom_bc: HomAlgebra
    hom_ac: HomAlgebra

    def __post_init__(self):
        if (
            self.hom_ab.source != self.a
            or self.hom_ab.target != self.b
            or self.hom_bc.source != self.b
            or self.hom_bc.target != self.c
            or self.hom_ac.source != self.a
            or self.hom_ac.target != self.c
        ):
            raise ValueError("hom algebras do not match the stated objects")


def composable_triple(a: QuantumObject, b: QuantumObject, c: QuantumObject) -> ComposableTriple:
    return ComposableTriple(
        a, b, c,
        hom_algebra(a, b),
        hom_algebra(b, c),
        hom_algebra(a, c),
    )


def _delta_bidegree(
    poly: NCPoly,
    a: QuantumObject,
    b: QuantumObject,
    c: QuantumObject,
) -> dict[tuple[Word, Word], Fraction]:
    """Coefficients of Delta(poly) over pairs of degree-2 words.

    poly is quadratic in the entries u_A^S of the composite algebra; the
    comultiplication is u_A^S -> sum_K t_A^K (x) s_K^S and products in the
    tensor square pick up the transposition sign
    (-1)**((par K + par S) * (par B + par L)).
    """
    m, l = b.space.dim, c.space.dim
    pa, pb, pc = a.space.parities, b.space.parities, c.space.parities
    out: dict[tuple[Word, Word], Fraction] = {}
    for (g1, g2), coeff in poly.terms.items():
        aa, s = divmod(g1, l)
        bb, t = divmod(g2, l)
        for k, ll in product(range(m), repeat=2):
            sign = -1 if ((pb[k] + pc[s]) * (pa[bb] + pb[ll])) % 2 else 1
            w1 = (aa * m + k, bb * m + ll)
            w2 = (k * l + s, ll * l + t)
            key = (w1, w2)
            out[key] = out.get(key, Fraction(0)) + coeff * sign
    return {k: v for k, v in out.items() if v}


def _reduce_bidegree(
    expansion: dict[tuple[Word, Word], Fraction],
    q1: QuotientMap,
    q2: QuotientMap,
) -> dict[tuple[Word, Word], Fraction]:
    out: dict[tuple[Word, Word], Fraction] = {}
    for (w1, w2), c in expansion.items():
        for bw1, c1 in q1.coords[w1].items():
            for bw2, c2 in q2.coords[w2].items():
                key = (bw1, bw2)
                out[key] = out.get(key, Fraction(0)) + c * c1 * c2
    return {k: v for k, v in out.items() if v}


def comultiplication_check(triple: ComposableTriple) -> bool:
    """Delta maps every defining relation of the composite algebra into the
    two-sided relation space of the factor algebras."""
    q1 = degree2_quotient(triple.hom_ab.relations)
    q2 = degree2_quotient(triple.hom_bc.relations)
    for rel in triple.hom_ac.relations.polys:
        expansion = _delta_bidegree(rel, triple.a, triple.b, triple.c)
        if _reduce_bidegree(expansion, q1, q2):
            return False
    return True


def coassociativity_check(
    a: QuantumObject, b: QuantumObject, c: QuantumObject, d: QuantumObject
) -> bool:
    """Both iterated comultiplications expand every generator u_A^S into the
    same sum over middle indices; compared coefficient-wise."""
    n, m, l, e = a.space.dim, b.space.dim, c.space.dim, d.space.dim
    for aa in range(n):
        for s in range(e):
            via_right: dict[tuple, Fraction] = {}
            for k in range(m):
                for ll in range(l):
                    key = (aa * m + k, k * l + ll, ll * e + s)
                    via_right[key] = via_right.get(key, Fraction(0)) + 1
            via_left: dict[tuple, Fraction] = {}
            for ll in range(l):
                for k in range(m):
                    key = (aa * m + k, k * l + ll, ll * e + s)
                    via_left[key] = via_left.get(key, Fraction(0)) + 1
            if via_left != via_right:
                return False
    return True


def counit_substitution_ok(hom: HomAlgebra, values: Matrix) -> bool:
    """Do all defining relations vanish under t_A^K -> values[A][K]?"""
    m = hom.target.space.dim
    for rel in hom.relations.polys:
        total = Fraction(0)
        for (g1, g2), c in rel.terms.items():
            a, k = divmod(g1, m)
            b, l = divmod(g2, m)
            total += c * values.data[a][k] * values.data[b][l]
        if total != 0:
            return False
    return True


def counit_check(obj: QuantumObject, substitution: Matrix | None = None) -> bool:
    """Counit on the endomorphism algebra of one object.

    The substitution t_A^B -> delta_A^B (or the given matrix) must kill
    every defining relation, and composing the counit with the
    comultiplication on either side must return each generator.
    """
    n = obj.space.dim
    values = substitution if substitution is not None else Matrix.identity(n)
    hom = hom_algebra(obj, obj)
    if not counit_substitution_ok(hom, values):
        return False
    for a in range(n):
        for s in range(n):
            # (eps (x) 1) Delta(t_A^S) = sum_K eps(t_A^K) t_K^S must be t_A^S
            left = {k: values.data[a][k] for k in range(n) if values.data[a][k]}
            if left != {a: Fraction(1)}:
                return False
            # (1 (x) eps) Delta(t_A^S) = sum_K t_A^K eps(t_K^S) must be t_A^S
            right = {k: values.data[k][s] for k in range(n) if values.data[k][s]}
            if right != {s: Fraction(1)}:
                return False
    return True


def _xi_quotient_coefficients(obj: QuantumObject) -> dict[tuple[int, int], Fraction]:
    """Coefficients gamma with [xi^a xi^b] = gamma_{ab} [xi^1 xi^2] in the
    degree-2 part of the parity-reversed coordinate algebra."""
    n = obj.space.dim
    rel_vectors = [pi_image(obj.space, v) for v in obj.components[1]]
    base = row_basis(rel_vectors)
    area = [Fraction(0)] * (n * n)
    area[0 * n + 1] = Fraction(1)
    columns = [tuple(area)] + [tuple(v) for v in base]
    mat = Matrix(columns).transpose()
    gammas: dict[tuple[int, int], Fraction] = {}
    for a, b in product(range(n), repeat=2):
        target = [Fraction(0)] * (n * n)
        target[a * n + b] = Fraction(1)
        x = solve(mat, target)
        if x is None:
            raise WrongShape("area form is degenerate for this object")
        gammas[(a, b)] = x[0]
    return gammas


def _check_det_shape(obj: QuantumObject) -> None:
    if obj.space.dim != 2 or any(obj.space.parities) or obj.qp is None:
        raise WrongShape("determinant needs purely even dim-2 two-parameter objects")


def determinant_2x2(
    src: QuantumObject,
    tgt: QuantumObject,
    rescale: tuple | None = None,
) -> NCPoly:
    """Coefficient of the source area form in the coaction image of the
    target area form: for parameters (q, p) this is ad - p^{21} cb.

    The optional rescale = (f_src, f_tgt) multiplies the result by
    f_src / f_tgt, the coboundary freedom of the area forms.
    """
    _check_det_shape(src)
    _check_det_shape(tgt)
    alphabet = matrix_alphabet(src.space, tgt.space)
    # purely even entries: the coaction product picks up no transposition signs
    gammas = _xi_quotient_coefficients(src)
    m = tgt.space.dim
    terms: dict[Word, Fraction] = {}
    for a, b in product(range(2), repeat=2):
        coeff = gammas[(a, b)]
        if not coeff:
            continue
        w = (a * m + 0, b * m + 1)
        terms[w] = terms.get(w, Fraction(0)) + coeff
    det = NCPoly(alphabet, terms)
    if rescale is not None:
        f_src, f_tgt = frac(rescale[0]), frac(rescale[1])
        if f_src == 0 or f_tgt == 0:
            raise ValueError("rescale factors must be nonzero")
        det = det.scale(f_src / f_tgt)
    return det


def determinant_multiplicativity(
    triple: ComposableTriple,
    rescales: tuple | None = None,
    dets: tuple[NCPoly, NCPoly, NCPoly] | None = None,
) -> bool:
    """Delta(det over the composite) equals det (x) det in the degree-2
    quotient coordinates of the factor algebras.

    rescales = (f_a, f_b, f_c) applies the coboundary freedom consistently;
    dets may override the three determinants (for negative controls).
    """
    fa, fb, fc = (
        tuple(frac(f) for f in rescales) if rescales is not None else (1, 1, 1)
    )
    if dets is None:
        det_ab = determinant_2x2(triple.a, triple.b, (fa, fb))
        det_bc = determinant_2x2(triple.b, triple.c, (fb, fc))
        det_ac = determinant_2x2(triple.a, triple.c, (fa, fc))
    else:
        det_ab, det_bc, det_ac = dets
    q1 = degree2_quotient(triple.hom_ab.relations)
    q2 = degree2_quotient(triple.hom_bc.relations)
    lhs = _reduce_bidegree(
        _delta_bidegree(det_ac, triple.a, triple.b, triple.c), q1, q2
    )
    rhs_raw: dict[tuple[Word, Word], Fraction] = {}
    for w1, c1 in det_ab.terms.items():
        for w2, c2 in det_bc.terms.items():
            key = (w1, w2)
            rhs_raw[key] = rhs_raw.get(key, Fraction(0)) + c1 * c2
    rhs = _reduce_bidegree(rhs_raw, q1, q2)
    return lhs == rhs
