"""Weighted-graded commutative polynomials over Q and quotient dimensions.

Variables carry even weights (weight 2 throughout this package, so the
weighted degree of a monomial is twice its polynomial degree).  Ideal
and quotient computations are degree-truncated exact linear algebra on
monomial bases: the weighted-degree-d piece of an ideal is spanned by
monomial * generator products of that degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from x3top.core.linalg import RowReducer, Vec

Expo = tuple[int, ...]


@dataclass(frozen=True)
class CommRingVars:
    """Named variables with even weights (default 2)."""

    names: tuple[str, ...]
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, "weights", (2,) * len(self.names))
        if len(self.weights) != len(self.names):
            raise ValueError("weights and names must have equal length")
        if any(w <= 0 or w % 2 for w in self.weights):
            raise ValueError("variable weights must be positive even integers")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


class CommPoly:
    """Sparse polynomial: exponent vector -> nonzero rational coefficient."""

    def __init__(self, ring: CommRingVars, terms: dict[Expo, Fraction] | None = None):
        self.ring = ring
        self.terms: dict[Expo, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    @staticmethod
    def variable(ring: CommRingVars, name: str) -> "CommPoly":
        e = [0] * len(ring)
        e[ring.index(name)] = 1
        return CommPoly(ring, {tuple(e): Fraction(1)})

    @staticmethod
    def linear(ring: CommRingVars, coeffs: dict[str, Fraction | int]) -> "CommPoly":
        out: dict[Expo, Fraction] = {}
        for name, c in coeffs.items():
            e = [0] * len(ring)
            e[ring.index(name)] = 1
            out[tuple(e)] = Fraction(c)
        return CommPoly(ring, out)

    def monomial_weight(self, e: Expo) -> int:
        return sum(k * w for k, w in zip(e, self.ring.weights))

    def weighted_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        degs = {self.monomial_weight(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous in weighted degree")
        return degs.pop()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CommPoly") -> "CommPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            nv = out.get(e, Fraction(0)) + c
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
        return CommPoly(self.ring, out)

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "CommPoly":
        s = Fraction(scalar)
        return CommPoly(self.ring, {e: s * c for e, c in self.terms.items()})

    def __mul__(self, other: "CommPoly") -> "CommPoly":
        out: dict[Expo, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                nv = out.get(e, Fraction(0)) + ca * cb
                if nv:
                    out[e] = nv
                else:
                    out.pop(e, None)
        return CommPoly(self.ring, out)

    def substitute(self, images: dict[str, "CommPoly"], target: "CommPoly") -> "CommPoly":
        """Ring map: replace each variable by its image (a polynomial in
        the target ring); `target` supplies the zero of the codomain."""
        out = CommPoly(target.ring)
        for e, c in self.terms.items():
            term = CommPoly(target.ring, {(0,) * len(target.ring): Fraction(c)})
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * images[self.ring.names[i]]
            out = out + term
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            mono = "*".join(
                f"{self.ring.names[i]}^{k}" if k > 1 else self.ring.names[i]
                for i, k in enumerate(e)
                if k
            ) or "1"
            bits.append(f"{self.terms[e]}*{mono}")
        return " + ".join(bits)


@lru_cache(maxsize=None)
def _expos_of_polydeg(nvars: int, d: int) -> tuple[Expo, ...]:
    if nvars == 1:
        return ((d,),)
    out = []
    for first in range(d + 1):
        out.extend((first,) + rest for rest in _expos_of_polydeg(nvars - 1, d - first))
    return tuple(out)


def monomials_of_weight(ring: CommRingVars, weight: int) -> list[Expo]:
    """Exponent vectors of the given weighted degree."""
    if weight % 2:
        return []
    if len(set(ring.weights)) == 1:
        w = ring.weights[0]
        if weight % w:
            return []
        return list(_expos_of_polydeg(len(ring), weight // w))
    out: list[Expo] = []

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(ring):
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = ring.weights[i]
        k = 0
        while k * w <= remaining:
            rec(i + 1, remaining - k * w, acc + [k])
            k += 1

    rec(0, weight, [])
    return out


def ideal_degree_basis(
    ring: CommRingVars, ideal_gens: list[CommPoly], weight: int
) -> RowReducer:
    """Row-reduced spanning set of the weighted-degree-`weight` piece of
    the ideal generated by homogeneous `ideal_gens`."""
    reducer = RowReducer()
    for g in ideal_gens:
        if g.is_zero():
            continue
        gd = g.weighted_degree()
        if gd > weight:
            continue
        for m in monomials_of_weight(ring, weight - gd):
            mono = CommPoly(ring, {m: Fraction(1)})
            reducer.add((mono * g).terms)
    return reducer


def graded_dim_quotient_comm(
    ring: CommRingVars, ideal_gens: list[CommPoly], maxdeg: int
) -> list[int]:
    """Dimensions of the quotient's weighted-degree pieces 0..maxdeg.

    Only even weighted degrees can be nonzero; the returned list is
    indexed by weighted degree (odd entries are 0).
    """
    dims = []
    for weight in range(maxdeg + 1):
        monos = monomials_of_weight(ring, weight)
        if not monos:
            dims.append(0)
            continue
        rank = ideal_degree_basis(ring, ideal_gens, weight).rank
        dims.append(len(monos) - rank)
    return dims


def minimal_generator_degrees(
    ring: CommRingVars, ideal_gens: list[CommPoly], maxdeg: int
) -> list[int]:
    """Weighted degrees (with multiplicity) of a minimal homogeneous
    generating set of the ideal, up to maxdeg.

    In degree d, the number of minimal generators is
    dim I_d - dim (lower-degree part of I * positive-degree ring)_d.
    """
    out: list[int] = []
    for weight in range(2, maxdeg + 1, 2):
        full = ideal_degree_basis(ring, ideal_gens, weight).rank
        lower = [g for g in ideal_gens if not g.is_zero() and g.weighted_degree() < weight]
        # products (monomial of weight >= 2) * (ideal element of lower degree)
        reducer = RowReducer()
        for g in lower:
            gd = g.weighted_degree()
            for m in monomials_of_weight(ring, weight - gd):
                if sum(m) == 0:
                    continue
                mono = CommPoly(ring, {m: Fraction(1)})
                reducer.add((mono * g).terms)
        out.extend([weight] * (full - reducer.rank))
    return out


def ideal_product(a: list[CommPoly], b: list[CommPoly]) -> list[CommPoly]:
    """Pairwise products of generating sets (a generating set of I*J)."""
    return [x * y for x in a for y in b]


def ideal_intersection_dims(
    ring: CommRingVars, a: list[CommPoly], b: list[CommPoly], maxdeg: int
) -> list[int]:
    """dim (I_a intersect I_b) in each weighted degree 0..maxdeg, via
    dim(I+J) = dim I + dim J - dim(I intersect J)."""
    dims = []
    for weight in range(maxdeg + 1):
        ra = ideal_degree_basis(ring, a, weight).rank
        rb = ideal_degree_basis(ring, b, weight).rank
        rsum = ideal_degree_basis(ring, a + b, weight).rank
        dims.append(ra + rb - rsum)
    return dims
