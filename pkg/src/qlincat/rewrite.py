"""Noncommutative polynomials over a matrix-entry alphabet, the row-major
monomial order, normal forms, and the cubic-overlap confluence check.

Letters are the generators t_A^K of a matrix of noncommuting entries,
numbered row-major (letter id = A * cols + K), so the natural integer order
on ids is exactly the row-major generator order.  Words of equal degree are
compared lexicographically; shorter words come first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from string import ascii_letters

from .graded import GradedSpace
from .linalg import Matrix, frac, rref

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Generator alphabet: a parity and a printable name per letter."""

    parities: tuple[int, ...]
    names: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.parities)

    def format_word(self, word: Word) -> str:
        return "".join(self.names[g] for g in word) if word else "1"


def matrix_alphabet(source: GradedSpace, target: GradedSpace) -> Alphabet:
    """Alphabet of matrix entries t_A^K with parity par(A) + par(K)."""
    n, m = source.dim, target.dim
    parities = []
    names = []
    for a in range(n):
        for k in range(m):
            parities.append((source.parities[a] + target.parities[k]) % 2)
            if n * m <= 26:
                names.append(ascii_letters[a * m + k])
            else:
                names.append(f"t[{a},{k}]")
    return Alphabet(tuple(parities), tuple(names))


def word_key(word: Word):
    return (len(word), word)


def monomial_compare(w1: Word, w2: Word) -> int:
    """-1, 0, or +1: degree first, then lexicographic on letter ids."""
    k1, k2 = word_key(w1), word_key(w2)
    return (k1 > k2) - (k1 < k2)


class NCPoly:
    """A finite Fraction-linear combination of words in an alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        clean: dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            c = frac(coeff)
            if c:
                clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet, {})

    @classmethod
    def monomial(cls, alphabet: Alphabet, word: Word, coeff=1) -> "NCPoly":
        return cls(alphabet, {tuple(word): frac(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NCPoly") -> "NCPoly":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return NCPoly(self.alphabet, terms)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NCPoly":
        c = frac(c)
        return NCPoly(self.alphabet, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            terms: dict[Word, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    terms[w] = terms.get(w, Fraction(0)) + c1 * c2
            return NCPoly(self.alphabet, terms)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=word_key)

    def monic(self) -> "NCPoly":
        if not self.terms:
            return self
        lead = self.terms[self.leading_word()]
        return self.scale(Fraction(1) / lead)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def __repr__(self) -> str:
        return format_poly(self)


def format_poly(p: NCPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for word, coeff in p.sorted_terms():
        mono = p.alphabet.format_word(word)
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = mono if mag == 1 else f"{mag} {mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def degree2_words_desc(alphabet: Alphabet) -> list[Word]:
    words = list(product(range(alphabet.size), repeat=2))
    words.sort(key=word_key, reverse=True)
    return words


def nonordered_degree2_words(alphabet: Alphabet) -> set[Word]:
    """Left sides a complete quadratic system must have: descending pairs
    plus squares of odd letters (an odd variable may not repeat)."""
    out = set()
    for g in range(alphabet.size):
        for h in range(alphabet.size):
            if g > h:
                out.add((g, h))
        if alphabet.parities[g] == 1:
            out.add((g, g))
    return out


@dataclass(frozen=True)
class RewriteSystem:
    """Quadratic rules: leading degree-2 word -> strictly smaller remainder.

    When the leading words are not exactly the non-ordered degree-2 words the
    defect is recorded (missing / unexpected leaders) rather than raised; the
    system still rewrites best-effort.
    """

    alphabet: Alphabet
    rules: dict[Word, NCPoly]
    missing_leaders: tuple[Word, ...]
    unexpected_leaders: tuple[Word, ...]

    @property
    def complete(self) -> bool:
        return not self.missing_leaders and not self.unexpected_leaders


def build_rewrite_system(relations) -> RewriteSystem:
    """Echelonize a quadratic relation set against the monomial order and
    solve each reduced relation for its leading word."""
    alphabet = relations.alphabet
    n = alphabet.size
    words = degree2_words_desc(alphabet)
    col_of_word = {w: j for j, w in enumerate(words)}
    mat = relations.matrix
    permuted = Matrix(
        [[row[w[0] * n + w[1]] for w in words] for row in mat.data]
    )
    red, pivots = rref(permuted)
    rules: dict[Word, NCPoly] = {}
    for r, pc in enumerate(pivots):
        lead = words[pc]
        rest = {
            words[j]: -red.data[r][j]
            for j in range(len(words))
            if j != pc and red.data[r][j]
        }
        rules[lead] = NCPoly(alphabet, rest)
    expected = nonordered_degree2_words(alphabet)
    leaders = set(rules)
    missing = tuple(sorted(expected - leaders))
    unexpected = tuple(sorted(leaders - expected))
    return RewriteSystem(alphabet, rules, missing, unexpected)


def reduce_once(word: Word, system: RewriteSystem) -> tuple[int, NCPoly] | None:
    """Leftmost reducible adjacent pair, or None if the word is normal."""
    for i in range(len(word) - 1):
        rule = system.rules.get((word[i], word[i + 1]))
        if rule is not None:
            return i, rule
    return None


def normal_form(p: NCPoly, system: RewriteSystem) -> NCPoly:
    """Rewrite every term until no rule left side occurs as a subword.

    Strategy: always the leftmost reducible adjacent pair.  Terminates
    because each step strictly decreases the word in the degree-lex order.
    """
    out: dict[Word, Fraction] = {}
    stack: list[tuple[Word, Fraction]] = list(p.terms.items())
    while stack:
        word, coeff = stack.pop()
        hit = reduce_once(word, system)
        if hit is None:
            out[word] = out.get(word, Fraction(0)) + coeff
            continue
        i, rule = hit
        for w2, c2 in rule.terms.items():
            stack.append((word[:i] + w2 + word[i + 2:], coeff * c2))
    return NCPoly(p.alphabet, out)


@dataclass(frozen=True)
class Overlap:
    word: Word
    resolved: bool


def confluence_check(system: RewriteSystem) -> list[Overlap]:
    """Resolve every cubic overlap x y z (with xy and yz both rule left
    sides) two ways and compare normal forms.

    An empty failure list means the normal form is path-independent in
    degree 3, which for quadratic systems settles linear independence of the
    ordered monomials in every degree.
    """
    lefts = sorted(system.rules, key=word_key)
    by_first: dict[int, list[Word]] = {}
    for w in lefts:
        by_first.setdefault(w[0], []).append(w)
    reports = []
    for xy in lefts:
        for yz in by_first.get(xy[1], ()):
            word = (xy[0], xy[1], yz[1])
            tail = NCPoly.monomial(system.alphabet, (yz[1],))
            head = NCPoly.monomial(system.alphabet, (xy[0],))
            via_left = normal_form(system.rules[xy] * tail, system)
            via_right = normal_form(head * system.rules[yz], system)
            reports.append(Overlap(word, via_left == via_right))
    return reports


def failed_overlaps(reports: list[Overlap]) -> list[Overlap]:
    return [r for r in reports if not r.resolved]
