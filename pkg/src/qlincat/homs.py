"""Quadratic relations of the algebra of matrix entries between two
quantum space objects.

Two independent derivations are provided.  The general one runs over every
component: each pair (g, f) with g in a basis of the annihilator of the
source component and f in a basis of the target component contributes the
relation

    sum (-1)**(par(B)*par(K)) g^{AB} f_{KL} t_A^K t_B^L = 0.

For two-parameter objects the closed single-relation formula (one relation
per index quadruple, with ratio coefficients) is implemented separately and
must produce the same span, which tests enforce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graded import koszul_gram
from .linalg import Matrix, annihilator, rank, row_basis, rref, vstack
from .rewrite import Alphabet, NCPoly, Word, degree2_words_desc, matrix_alphabet, word_key
from .spaces import QuantumObject


class ComponentCountMismatch(Exception):
    """Source and target have different numbers of components."""


class AlphabetMismatch(Exception):
    """Relation sets over different generator alphabets."""


@dataclass(frozen=True)
class RelationSet:
    """A span of quadratic relations: as polynomials and as a coefficient
    matrix over the lexicographic degree-2 word basis."""

    alphabet: Alphabet
    polys: tuple[NCPoly, ...]
    matrix: Matrix

    @property
    def span_dim(self) -> int:
        return rank(self.matrix) if self.polys else 0


def relation_set(alphabet: Alphabet, polys) -> RelationSet:
    polys = tuple(p for p in polys if not p.is_zero)
    n = alphabet.size
    rows = []
    for p in polys:
        row = [Fraction(0)] * (n * n)
        for (g, h), c in p.terms.items():
            row[g * n + h] += c
        rows.append(row)
    mat = Matrix(rows) if rows else Matrix.zeros(0, n * n)
    return RelationSet(alphabet, polys, mat)


@dataclass(frozen=True)
class HomAlgebra:
    """Generators t_A^K (parity par(A)+par(K)) with quadratic relations."""

    source: QuantumObject
    target: QuantumObject
    alphabet: Alphabet
    relations: RelationSet


def derive_relations_general(src: QuantumObject, tgt: QuantumObject) -> RelationSet:
    """Relation span from annihilator bases, component by component.

    The number of relations always equals the sum over components of
    dim(Ann I_k of source) * dim(I_k of target); this linear independence
    is asserted.
    """
    if src.s != tgt.s:
        raise ComponentCountMismatch(f"source has {src.s} components, target {tgt.s}")
    n, m = src.space.dim, tgt.space.dim
    alphabet = matrix_alphabet(src.space, tgt.space)
    gram = koszul_gram(src.space)
    polys: list[NCPoly] = []
    expected = 0
    for comp_v, comp_w in zip(src.components, tgt.components):
        ann = annihilator(comp_v, n * n, gram)
        fbasis = row_basis(comp_w)
        expected += len(ann) * len(fbasis)
        for g in ann:
            for f in fbasis:
                terms: dict[Word, Fraction] = {}
                for a, b in product(range(n), repeat=2):
                    gc = g[a * n + b]
                    if not gc:
                        continue
                    for k, l in product(range(m), repeat=2):
                        fc = f[k * m + l]
                        if not fc:
                            continue
                        sign = -1 if (src.space.parities[b] * tgt.space.parities[k]) % 2 else 1
                        w = (a * m + k, b * m + l)
                        terms[w] = terms.get(w, Fraction(0)) + sign * gc * fc
                poly = NCPoly(alphabet, terms)
                assert not poly.is_zero, "degenerate relation from independent pair"
                polys.append(poly.monic())
    rs = relation_set(alphabet, polys)
    assert rs.span_dim == expected, "relation span smaller than the component count"
    return rs


def _require_qp(obj: QuantumObject) -> tuple:
    if obj.qp is None:
        from .spaces import BadParameters

        raise BadParameters("object does not carry two-parameter matrices")
    return obj.qp


def derive_relations_sudbery(src: QuantumObject, tgt: QuantumObject) -> RelationSet:
    """Closed-form relation list for two-parameter objects.

    One relation per index quadruple (A, B, K, L):

        t_A^K t_B^L
          - (p_BA + q_BA)/(p^LK + q^LK) * (-1)**(par A par L + par B par K) t_B^L t_A^K
          - (p_BA p^LK - q_BA q^LK)/(p^LK + q^LK) * (-1)**((par A + par B) par K) t_B^K t_A^L
        = 0,

    lower-index parameters being the same numbers as upper-index ones.
    Coincident indices degenerate to the one-row and one-column relations.
    """
    qv, pv = _require_qp(src)
    qw, pw = _require_qp(tgt)
    n, m = src.space.dim, tgt.space.dim
    pav, paw = src.space.parities, tgt.space.parities
    alphabet = matrix_alphabet(src.space, tgt.space)
    polys = []
    for a, b in product(range(n), repeat=2):
        for k, l in product(range(m), repeat=2):
            denom = pw[l][k] + qw[l][k]
            c1 = (pv[b][a] + qv[b][a]) / denom
            if (pav[a] * paw[l] + pav[b] * paw[k]) % 2:
                c1 = -c1
            c2 = (pv[b][a] * pw[l][k] - qv[b][a] * qw[l][k]) / denom
            if ((pav[a] + pav[b]) * paw[k]) % 2:
                c2 = -c2
            terms: dict[Word, Fraction] = {}
            for w, c in (
                ((a * m + k, b * m + l), Fraction(1)),
                ((b * m + l, a * m + k), -c1),
                ((b * m + k, a * m + l), -c2),
            ):
                terms[w] = terms.get(w, Fraction(0)) + c
            poly = NCPoly(alphabet, terms)
            if not poly.is_zero:
                polys.append(poly.monic())
    return relation_set(alphabet, polys)


def spans_equal(r1: RelationSet, r2: RelationSet) -> bool:
    if r1.alphabet != r2.alphabet:
        raise AlphabetMismatch("relation sets over different alphabets")
    k1, k2 = rank(r1.matrix), rank(r2.matrix)
    if k1 != k2:
        return False
    if not r1.polys or not r2.polys:
        return k1 == k2 == 0
    return rank(vstack(r1.matrix, r2.matrix)) == k1


def bilinear_form_relations(obj: QuantumObject) -> RelationSet:
    """Relations for coefficients t_{AB} of an even bilinear form, i.e. the
    hom relations into the dual object (the upper index runs over the dual
    basis)."""
    if obj.s != 2:
        raise ValueError("bilinear forms need a two-component object")
    from .spaces import dual_object

    return derive_relations_general(obj, dual_object(obj))


def hom_algebra(src: QuantumObject, tgt: QuantumObject, form: str = "general") -> HomAlgebra:
    if form == "general":
        rels = derive_relations_general(src, tgt)
    elif form == "sudbery":
        rels = derive_relations_sudbery(src, tgt)
    else:
        raise ValueError(f"unknown derivation form {form!r}")
    return HomAlgebra(src, tgt, rels.alphabet, rels)


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on the degree-2 part of the quotient by a relation span.

    basis is the tuple of irreducible words; coords maps every degree-2 word
    to its (sparse) coordinate vector over that basis.
    """

    basis: tuple[Word, ...]
    coords: dict[Word, dict[Word, Fraction]]

    @property
    def dim(self) -> int:
        return len(self.basis)


def degree2_quotient(rels: RelationSet) -> QuotientMap:
    alphabet = rels.alphabet
    n = alphabet.size
    words = degree2_words_desc(alphabet)
    permuted = Matrix(
        [[row[w[0] * n + w[1]] for w in words] for row in rels.matrix.data]
    ) if rels.polys else Matrix.zeros(0, n * n)
    red, pivots = rref(permuted)
    pivot_set = set(pivots)
    basis = tuple(sorted((words[j] for j in range(len(words)) if j not in pivot_set),
                         key=word_key))
    coords: dict[Word, dict[Word, Fraction]] = {w: {w: Fraction(1)} for w in basis}
    for r, pc in enumerate(pivots):
        coords[words[pc]] = {
            words[j]: -red.data[r][j]
            for j in range(len(words))
            if j != pc and red.data[r][j]
        }
    return QuotientMap(basis, coords)
