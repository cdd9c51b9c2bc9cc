"""Graded Lie algebra presentations for every parameter case, and exact
rank computation through enveloping algebras.

The homotopy of the symplectomorphism group is a graded Lie algebra
generated by degree-1 classes (x0, y0, x1, y1, z, plus t once the base
area exceeds 1) together with, in some parameter regimes, one or two
central generators of even degree 4*ell - 2 or 4*ell.  Each case is
encoded as the list of quadratic relations satisfied by the degree-1
generators (vanishing brackets, squares, and bracket equalities); the
graded ranks are computed by

  1. exact dimensions of the enveloping algebra (the quotient of the
     free associative algebra by the same relations),
  2. multiplication by 1/(1 - z^d) per central even generator,
  3. exponent extraction from the resulting series.

A non-integer or negative extracted rank raises: it would mean the
presentation is not the enveloping algebra of any graded Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from x3top.core.ncpoly import Alphabet, NcElement, anticommutator, graded_dim_quotient_nc
from x3top.core.series import (
    PowerSeries,
    geometric_series,
    loop_space_ranks,
    pbw_extract,
)
from x3top.homology import InadmissibleShape, Shape


class CaseId(str, Enum):
    MU1 = "MU1"
    S1 = "S1"
    S2 = "S2"
    S3A = "S3a"
    S3B = "S3b"
    S4A = "S4a"
    S4B = "S4b"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    GINF = "GINF"

    @staticmethod
    def parse(text: str) -> "CaseId":
        for c in CaseId:
            if c.value.lower() == str(text).lower():
                return c
        raise ValueError(f"unknown case id {text!r}")


@dataclass(frozen=True)
class LiePresentation:
    """Degree-1 generators with quadratic relations, plus central even
    generators handled multiplicatively at the series level."""

    generators: tuple[str, ...]
    relations: tuple[NcElement, ...]
    central_even_generators: tuple[tuple[str, int], ...] = ()

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.generators, (1,) * len(self.generators))


_FIVE = ("x0", "y0", "x1", "y1", "z")
_SIX = _FIVE + ("t",)

#: brackets of the five basic generators that vanish in every case
#: (the complement of the nonvanishing set {x0y1, x0x1, y0y1, zy0, zx1})
_VANISHING_BASE = (("x0", "y0"), ("x0", "z"), ("x1", "y1"), ("x1", "y0"), ("z", "y1"))


def _base_relations(names: tuple[str, ...]) -> list[NcElement]:
    ab = Alphabet(names, (1,) * len(names))
    rels = [NcElement.word(ab, g, g) for g in names]  # squares of odd generators
    rels += [anticommutator(ab, a, b) for a, b in _VANISHING_BASE]
    return rels


def _ab(names):
    return Alphabet(names, (1,) * len(names))


def _s1_relations() -> list[NcElement]:
    ab = _ab(_SIX)
    rels = _base_relations(_SIX)
    rels.append(anticommutator(ab, "y1", "t"))
    rels.append(anticommutator(ab, "x0", "t") - anticommutator(ab, "y0", "t"))
    rels.append(
        anticommutator(ab, "z", "t")
        - anticommutator(ab, "x1", "t")
        - anticommutator(ab, "x1", "z")
    )
    return rels


def _s2_relations() -> list[NcElement]:
    ab = _ab(_SIX)
    rels = _s1_relations()
    rels.append(
        anticommutator(ab, "x0", "t")
        - anticommutator(ab, "x1", "t")
        - anticommutator(ab, "x1", "x0")
    )
    return rels


def _stable_relations() -> list[NcElement]:
    # the relation set shared by the large-base cases and the limit:
    # [x1,t] and [y1,t] vanish, [x0,t] = [y0,t] = [x1,x0], [z,t] = [x1,z]
    ab = _ab(_SIX)
    rels = _base_relations(_SIX)
    rels.append(anticommutator(ab, "y1", "t"))
    rels.append(anticommutator(ab, "x1", "t"))
    rels.append(anticommutator(ab, "x0", "t") - anticommutator(ab, "y0", "t"))
    rels.append(anticommutator(ab, "x0", "t") - anticommutator(ab, "x1", "x0"))
    rels.append(anticommutator(ab, "z", "t") - anticommutator(ab, "x1", "z"))
    return rels


def _w_degree(case: CaseId, ell: int) -> int:
    if case in (CaseId.S3A, CaseId.S4A):
        return 4 * ell - 2
    return 4 * ell


def _drop_generator(pres: LiePresentation, name: str) -> LiePresentation:
    gens = tuple(g for g in pres.generators if g != name)
    ab = Alphabet(gens, (1,) * len(gens))
    idx = pres.generators.index(name)
    kept = []
    for rel in pres.relations:
        if any(idx in w for w in rel.terms):
            continue
        remap = {
            tuple(i - (i > idx) for i in w): c for w, c in rel.terms.items()
        }
        kept.append(NcElement(ab, remap))
    return LiePresentation(gens, tuple(kept), pres.central_even_generators)


def presentation_for(case: CaseId | str, ell: int = 0, variant: str = "b") -> LiePresentation:
    """The graded Lie presentation of each parameter case.

    ell is required (>= 1) by the cases with central even generators and
    fixes their degree: 4*ell - 2 for the a-variants (S3a, S4a, which
    additionally need ell >= 2), 4*ell for the b-variants.  R1 and R2
    drop the generator y1 (resp. z) from the stable six-generator
    presentation; R3 keeps x0, y0, x1, t with only [x0, x1] nonzero,
    plus two central generators for ell >= 1 whose degree is 4*ell - 2
    for variant "a" (lambda <= 1/2) and 4*ell for variant "b".
    """
    case = CaseId.parse(case) if not isinstance(case, CaseId) else case
    if case == CaseId.MU1:
        return LiePresentation(_FIVE, tuple(_base_relations(_FIVE)))
    if case == CaseId.S1:
        return LiePresentation(_SIX, tuple(_s1_relations()))
    if case == CaseId.S2:
        return LiePresentation(_SIX, tuple(_s2_relations()))
    if case == CaseId.GINF:
        return LiePresentation(_SIX, tuple(_stable_relations()))
    if case in (CaseId.S3A, CaseId.S3B, CaseId.S4A, CaseId.S4B):
        if case in (CaseId.S3A, CaseId.S4A):
            if ell < 2:
                raise InadmissibleShape(f"case {case.value} needs ell >= 2")
        elif ell < 1:
            raise InadmissibleShape(f"case {case.value} needs ell >= 1")
        deg = _w_degree(case, ell)
        if case in (CaseId.S3A, CaseId.S3B):
            ws = (("w_l1", deg), ("w_l2", deg))
        else:
            ws = (("w_l", deg),)
        return LiePresentation(_SIX, tuple(_stable_relations()), ws)
    if case in (CaseId.R1, CaseId.R2):
        dropped = "y1" if case == CaseId.R1 else "z"
        if ell == 0:
            base = presentation_for(CaseId.MU1)
        else:
            base = LiePresentation(_SIX, tuple(_stable_relations()))
        return _drop_generator(base, dropped)
    if case == CaseId.R3:
        if ell == 0:
            # a torus: two commuting degree-1 generators
            names = ("x0", "y0")
            ab = _ab(names)
            rels = [NcElement.word(ab, g, g) for g in names] + [
                anticommutator(ab, "x0", "y0")
            ]
            return LiePresentation(names, tuple(rels))
        names = ("x0", "y0", "x1", "t")
        ab = _ab(names)
        rels = [NcElement.word(ab, g, g) for g in names]
        for a, b in (("x0", "y0"), ("y0", "x1"), ("y0", "t"), ("x1", "t"), ("x0", "t")):
            rels.append(anticommutator(ab, a, b))
        deg = 4 * ell - 2 if variant == "a" else 4 * ell
        ws = (("w_l1", deg), ("w_l2", deg))
        return LiePresentation(names, tuple(rels), ws)
    raise ValueError(f"unhandled case {case}")


def enveloping_dims(pres: LiePresentation, maxdeg: int) -> list[int]:
    """Graded dimensions of the enveloping algebra of the degree-1 part
    (central even generators excluded)."""
    return graded_dim_quotient_nc(pres.alphabet, list(pres.relations), maxdeg)


MAXDEG_SAFETY = 8


def pi_ranks(case: CaseId | str, ell: int = 0, maxdeg: int = 6) -> list[int]:
    """Graded ranks lambda_1..lambda_maxdeg of the presented Lie algebra.

    Computed as enveloping-algebra dimensions, multiplied by the series
    of the central even generators, then exponent-extracted.  Raises if
    any extracted rank fails to be a nonnegative integer.
    """
    if maxdeg > MAXDEG_SAFETY:
        raise ValueError(f"maxdeg > {MAXDEG_SAFETY} exceeds the configured safety bound")
    pres = presentation_for(case, ell)
    dims = enveloping_dims(pres, maxdeg)
    series = PowerSeries.from_coeffs([Fraction(d) for d in dims], maxdeg)
    for _, deg in pres.central_even_generators:
        series = series * geometric_series(deg, 1, maxdeg)
    try:
        odd, even = pbw_extract(series)
    except ValueError as exc:
        raise AssertionError(f"inconsistent presentation for {case}: {exc}") from exc
    ranks = {}
    ranks.update(odd)
    ranks.update(even)
    return [int(ranks[n]) for n in range(1, maxdeg + 1)]


def case_for_shape(s: Shape) -> tuple[CaseId, int]:
    """Route a shape to its parameter case (with its ell).

    Boundary shapes go to R1/R2/R3; mu = 1 to MU1; otherwise the
    lambda-range against (c2, c1, c1+c2) picks S1/S2/S3/S4, with ties
    going to the earlier range.
    """
    boundary = s.boundary_case
    if boundary is not None:
        return CaseId(boundary), s.ell
    ell = s.ell
    if s.mu == 1:
        return CaseId.MU1, 0
    rng = s.lam_range()
    if rng == 1:
        return (CaseId.S1 if ell == 1 else CaseId.S3A), ell
    if rng == 2:
        return (CaseId.S2 if ell == 1 else CaseId.S4A), ell
    if rng == 3:
        return CaseId.S3B, ell
    return CaseId.S4B, ell


def expected_pi_ranks(s: Shape, maxdeg: int = 6) -> list[int]:
    """Closed-form rank table for the generic shapes that admit one.

    With r_n the loop-space ranks (r_1 = 3, r_2 = r_3 = 5, r_4 = 10,
    r_5 = 24, r_6 = 55, ...):

      * mu = 1: 5, r_2, r_3, ...
      * c2 < lambda <= c1:   6, r_2, ... with r_{4l-2} + 1 at degree 4l-2
      * c1 + c2 < lambda:    6, r_2, ... with r_{4l} + 1 at degree 4l
      * lambda <= c2, l >= 2 (two central generators of degree 4l-2):
                             6, r_2, ... with r_{4l-2} + 2 at degree 4l-2
      * c1 < lambda <= c1+c2 (two central generators of degree 4l):
                             6, r_2, ... with r_{4l} + 2 at degree 4l

    The remaining generic regime (lambda <= c2 with l = 1) has no
    closed-form table: there the two extra degree-2 classes bracket
    nontrivially with the generators and the ranks must be computed from
    the presentation (`pi_ranks`); requesting it here raises.
    """
    if not s.is_generic:
        raise InadmissibleShape("expected ranks are tabulated for generic shapes only")
    r = loop_space_ranks(maxdeg)
    if s.mu == 1:
        return [5] + [r[n] for n in range(2, maxdeg + 1)]
    ell = s.ell
    rng = s.lam_range()
    base = [6] + [r[n] for n in range(2, maxdeg + 1)]
    if rng == 1:
        if ell < 2:
            raise InadmissibleShape(
                "no closed-form rank table for lambda <= c2 at ell = 1; "
                "use the S1 presentation"
            )
        bump_deg, bump = 4 * ell - 2, 2
    elif rng == 2:
        bump_deg, bump = 4 * ell - 2, 1
    elif rng == 3:
        bump_deg, bump = 4 * ell, 2
    else:
        bump_deg, bump = 4 * ell, 1
    if 1 <= bump_deg <= maxdeg:
        base[bump_deg - 1] += bump
    return base
