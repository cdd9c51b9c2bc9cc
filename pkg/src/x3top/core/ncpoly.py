"""Free associative graded algebras and their degree-truncated quotients.

An `NcElement` is a Q-linear combination of words over an alphabet of
graded generators.  `graded_dim_quotient_nc` computes the dimensions of
the graded pieces of the quotient of the free algebra by the two-sided
ideal generated by homogeneous elements, degree by degree, by exact row
reduction.

The degree-d piece of the ideal is spanned by u * r * v over words u, v
and relations r.  For a degree-1 alphabet the same span is organized
through the exact identification

    A_d = (V (x) A_{d-1}) / image(R^(e) (x) A_{d-e}),

one sparse elimination per degree, with word-indexed bases kept
deterministic (graded lexicographic by generator index).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from x3top.core.linalg import RowReducer

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Graded generators: names plus positive integer degrees.

    Parity is degree mod 2; it is carried by the relation elements, not
    by the algebra product, which is plain concatenation.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[i] for i in word)


class NcElement:
    """Linear combination of words, represented sparsely."""

    def __init__(self, alphabet: Alphabet, terms: dict[Word, Fraction] | None = None):
        self.alphabet = alphabet
        self.terms: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(w)] = c

    @staticmethod
    def word(alphabet: Alphabet, *letters: str) -> "NcElement":
        w = tuple(alphabet.index(x) for x in letters)
        return NcElement(alphabet, {w: Fraction(1)})

    def __add__(self, other: "NcElement") -> "NcElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            nv = out.get(w, Fraction(0)) + c
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
        return NcElement(self.alphabet, out)

    def __sub__(self, other: "NcElement") -> "NcElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "NcElement":
        s = Fraction(scalar)
        return NcElement(self.alphabet, {w: s * c for w, c in self.terms.items()})

    def __mul__(self, other: "NcElement") -> "NcElement":
        out: dict[Word, Fraction] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa + wb
                nv = out.get(w, Fraction(0)) + ca * cb
                if nv:
                    out[w] = nv
                else:
                    out.pop(w, None)
        return NcElement(self.alphabet, out)

    def is_homogeneous(self) -> bool:
        degs = {self.alphabet.word_degree(w) for w in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero element has no degree")
        degs = {self.alphabet.word_degree(w) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("element is not degree-homogeneous")
        return degs.pop()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            name = "*".join(self.alphabet.names[i] for i in w) or "1"
            bits.append(f"{self.terms[w]}*{name}")
        return " + ".join(bits)


def anticommutator(alphabet: Alphabet, a: str, b: str) -> NcElement:
    """ab + ba: the enveloping-algebra image of a vanishing bracket of
    two odd generators."""
    return NcElement.word(alphabet, a, b) + NcElement.word(alphabet, b, a)


class _Stage:
    """Reduced degree-d data: coordinate labels (x, j) kept after
    elimination, plus lazily memoized normal forms of raw coordinates."""

    __slots__ = ("reducer", "index", "nf_cache")

    def __init__(self, reducer: RowReducer, kept: list):
        self.reducer = reducer
        self.index = {coord: i for i, coord in enumerate(kept)}
        self.nf_cache: dict = {}

    def nf(self, coord) -> dict[int, Fraction]:
        cached = self.nf_cache.get(coord)
        if cached is None:
            raw = self.reducer.reduce({coord: Fraction(1)})
            cached = {self.index[c]: v for c, v in raw.items()}
            self.nf_cache[coord] = cached
        return cached


def graded_dim_quotient_nc(
    alphabet: Alphabet,
    relation_elements: list[NcElement],
    maxdeg: int,
) -> list[int]:
    """Dimensions of degrees 0..maxdeg of T(V) / (relations).

    Relations must be degree-homogeneous of degree >= 2.  The operation
    is total; callers are responsible for keeping maxdeg at desk scale.
    """
    by_degree: dict[int, list[NcElement]] = {}
    for r in relation_elements:
        if not r.terms:
            continue
        d = r.degree()
        if d < 2:
            raise ValueError("relation elements must have degree >= 2")
        by_degree.setdefault(d, []).append(r)

    if any(d != 1 for d in alphabet.degrees):
        return _dims_by_word_span(alphabet, by_degree, maxdeg)
    return _dims_degree_one(len(alphabet), by_degree, maxdeg)


def _dims_degree_one(
    ngens: int, by_degree: dict[int, list[NcElement]], maxdeg: int
) -> list[int]:
    dims = [1]
    if maxdeg == 0:
        return dims
    dims.append(ngens)
    h = {0: 1, 1: ngens}
    stages: dict[int, _Stage] = {}

    def mul_letter(deg_from: int, j: int, letter: int) -> dict[int, Fraction]:
        # left-multiply basis element j of A_{deg_from} by a generator
        if deg_from == 0:
            return {letter: Fraction(1)}
        return stages[deg_from + 1].nf((letter, j))

    def tail_vector(tail: Word, n: int) -> dict[int, Fraction]:
        # [tail * basis_n], starting from degree d-1-len(tail), iterated
        # left multiplication landing in A_{d-1}
        vec = {n: Fraction(1)}
        deg = (d - 1) - len(tail)
        for letter in reversed(tail):
            nxt: dict[int, Fraction] = {}
            for j, c in vec.items():
                for k, v in mul_letter(deg, j, letter).items():
                    nv = nxt.get(k, Fraction(0)) + c * v
                    if nv:
                        nxt[k] = nv
                    else:
                        nxt.pop(k, None)
            vec = nxt
            deg += 1
        return vec

    for d in range(2, maxdeg + 1):
        reducer = RowReducer()
        for e, rels in sorted(by_degree.items()):
            if e > d:
                continue
            for rel in rels:
                for n in range(h[d - e]):
                    vec: dict = {}
                    for w, c in sorted(rel.terms.items()):
                        x, tail = w[0], w[1:]
                        for j, v in tail_vector(tail, n).items():
                            coord = (x, j)
                            nv = vec.get(coord, Fraction(0)) + c * v
                            if nv:
                                vec[coord] = nv
                            else:
                                vec.pop(coord, None)
                    if vec:
                        reducer.add(vec)
        kept = [
            (x, j)
            for x in range(ngens)
            for j in range(h[d - 1])
            if (x, j) not in reducer.pivots
        ]
        stages[d] = _Stage(reducer, kept)
        h[d] = len(kept)
        dims.append(h[d])
    return dims


def _words_of_degree(degrees: tuple[int, ...], d: int) -> list[Word]:
    if d == 0:
        return [()]
    out: list[Word] = []
    for i, gd in enumerate(degrees):
        if gd <= d:
            out.extend((i,) + w for w in _words_of_degree(degrees, d - gd))
    return out


def _dims_by_word_span(
    alphabet: Alphabet, by_degree: dict[int, list[NcElement]], maxdeg: int
) -> list[int]:
    # straightforward span of u * r * v per degree; used only for
    # alphabets with generators of degree > 1
    dims = []
    degrees = alphabet.degrees
    for d in range(maxdeg + 1):
        words = _words_of_degree(degrees, d)
        reducer = RowReducer()
        for e, rels in sorted(by_degree.items()):
            if e > d:
                continue
            for du in range(d - e + 1):
                dv = d - e - du
                for u in _words_of_degree(degrees, du):
                    for v in _words_of_degree(degrees, dv):
                        for rel in rels:
                            vec = {
                                u + w + v: c for w, c in rel.terms.items()
                            }
                            reducer.add(vec)
        dims.append(len(words) - reducer.rank)
    return dims
