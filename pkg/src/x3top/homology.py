"""Integral second homology of the twice-blown-up ruled surface.

Classes are written p*B + q*F - r1*E1 - r2*E2 in the basis of the base
sphere B, the fiber F, and the two exceptional spheres.  The symmetric
intersection form is B.F = 1, B.B = F.F = 0, Ei.Ej = -delta_ij, with
all mixed pairings zero, and the anticanonical pairing gives
c1(A) = 2(p+q) - r1 - r2.

A `Shape` is an admissible triple (mu, c1, c2) of the base area and the
two blow-up capacities, normalized so the fiber has area 1; it carries
the decomposition mu = ell + lambda with lambda in (0, 1] and the
classification of lambda against c2, c1, c1+c2 which governs every
case split in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from x3top.core.rationals import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class HClass:
    """p*B + q*F - r1*E1 - r2*E2 with integer coefficients."""

    p: int
    q: int
    r1: int
    r2: int

    def __add__(self, other: "HClass") -> "HClass":
        return HClass(self.p + other.p, self.q + other.q, self.r1 + other.r1, self.r2 + other.r2)

    def __sub__(self, other: "HClass") -> "HClass":
        return HClass(self.p - other.p, self.q - other.q, self.r1 - other.r1, self.r2 - other.r2)

    def __neg__(self) -> "HClass":
        return HClass(-self.p, -self.q, -self.r1, -self.r2)

    def scale(self, k: int) -> "HClass":
        return HClass(k * self.p, k * self.q, k * self.r1, k * self.r2)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r1": self.r1, "r2": self.r2}

    def __str__(self) -> str:
        parts = []
        for coeff, sym in ((self.p, "B"), (self.q, "F"), (-self.r1, "E1"), (-self.r2, "E2")):
            if coeff == 0:
                continue
            sign = "+" if coeff > 0 else "-"
            mag = abs(coeff)
            term = sym if mag == 1 else f"{mag}{sym}"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += sign + term
        return out


B = HClass(1, 0, 0, 0)
F = HClass(0, 1, 0, 0)
E1 = HClass(0, 0, -1, 0)
E2 = HClass(0, 0, 0, -1)


def intersect(a: HClass, b: HClass) -> int:
    """Symmetric intersection pairing."""
    return a.p * b.q + a.q * b.p - a.r1 * b.r1 - a.r2 * b.r2


def chern(a: HClass) -> int:
    """First Chern number 2(p+q) - r1 - r2 (pairing with -K,
    K = -2(B+F) - E1 - E2)."""
    return 2 * (a.p + a.q) - a.r1 - a.r2


def adjunction_genus(a: HClass) -> Fraction:
    """g_v(A) = 1 + (A.A - c1(A))/2; zero for embedded spheres."""
    return 1 + Fraction(intersect(a, a) - chern(a), 2)


def k_index(a: HClass) -> Fraction:
    """k(A) = (A.A + c1(A))/2: the number of point constraints cutting
    the moduli of embedded spheres in class A to dimension zero."""
    return Fraction(intersect(a, a) + chern(a), 2)


def d_class(i: int) -> HClass:
    """The section-type family: indices run over all integers with
    D_{4k+1} = B+kF, D_{4k} = B+kF-E2, D_{4k-1} = B+kF-E1,
    D_{4k-2} = B+kF-E1-E2.
    """
    rem = i % 4
    if rem == 1:
        return HClass(1, (i - 1) // 4, 0, 0)
    if rem == 0:
        return HClass(1, i // 4, 0, 1)
    if rem == 3:
        return HClass(1, (i + 1) // 4, 1, 0)
    return HClass(1, (i + 2) // 4, 1, 1)


# ---------------------------------------------------------------------------
# shapes


class InadmissibleShape(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """Admissible parameter triple (mu, c1, c2) with mu >= 1,
    0 < c2 <= c1 and c1 + c2 <= 1."""

    mu: Fraction
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        mu, c1, c2 = Fraction(self.mu), Fraction(self.c1), Fraction(self.c2)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        if mu < 1:
            raise InadmissibleShape(f"mu={mu} violates mu >= 1")
        if not (0 < c2 <= c1):
            raise InadmissibleShape(f"capacities violate 0 < c2 <= c1: c1={c1}, c2={c2}")
        if c1 + c2 > 1:
            raise InadmissibleShape(f"capacities violate c1 + c2 <= 1: c1={c1}, c2={c2}")

    @staticmethod
    def from_strings(mu, c1, c2) -> "Shape":
        return Shape(parse_rational(mu), parse_rational(c1), parse_rational(c2))

    @property
    def ell(self) -> int:
        """mu = ell + lambda with integer ell >= 0 and lambda in (0, 1]."""
        mu = self.mu
        if mu.denominator == 1:
            return int(mu) - 1
        return int(mu.numerator // mu.denominator)

    @property
    def lam(self) -> Fraction:
        return self.mu - self.ell

    @property
    def is_generic(self) -> bool:
        return self.c2 < self.c1 and self.c1 + self.c2 < 1

    @property
    def boundary_case(self) -> str | None:
        """None when generic, else "R1" (c1=c2), "R2" (c1+c2=1) or
        "R3" (c1=c2=1/2)."""
        eq_caps = self.c1 == self.c2
        unit_sum = self.c1 + self.c2 == 1
        if eq_caps and unit_sum:
            return "R3"
        if eq_caps:
            return "R1"
        if unit_sum:
            return "R2"
        return None

    def lam_range(self) -> int:
        """Index of the interval containing lambda: 1 for lam <= c2,
        2 for c2 < lam <= c1, 3 for c1 < lam <= c1 + c2, 4 beyond.
        Ties go to the earlier range."""
        lam = self.lam
        if lam <= self.c2:
            return 1
        if lam <= self.c1:
            return 2
        if lam <= self.c1 + self.c2:
            return 3
        return 4

    def to_json(self) -> dict:
        return {
            "mu": format_rational(self.mu),
            "c1": format_rational(self.c1),
            "c2": format_rational(self.c2),
            "ell": self.ell,
            "lambda": format_rational(self.lam),
        }


def area(s: Shape, a: HClass) -> Fraction:
    """Symplectic area mu*p + q - c1*r1 - c2*r2."""
    return s.mu * a.p + a.q - s.c1 * a.r1 - s.c2 * a.r2


# ---------------------------------------------------------------------------
# curve-class enumerations

_CAP_CORNERS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1), Fraction(0)),
)


def _area_nonneg_all_shapes(a: HClass, strict: bool = False) -> bool:
    # q - r1*c1 - r2*c2 >= 0 on the whole admissible capacity region
    # (mu-independent classes only, p == 0); linear in (c1, c2), so it
    # suffices to check the closure corners of {0 < c2 < c1, c1+c2 < 1}.
    assert a.p == 0
    vals = [a.q - a.r1 * c1 - a.r2 * c2 for (c1, c2) in _CAP_CORNERS]
    if strict:
        # strictness only on the interior, so boundary corners may vanish
        return all(v >= 0 for v in vals) and any(v > 0 for v in vals)
    return all(v >= 0 for v in vals)


def p0_classes(box: int = 4) -> list[HClass]:
    """The fiber-degree classes: every class p=0 that can carry a simple
    holomorphic sphere for some admissible shape.

    Enumerates (q, r1, r2) in a box and keeps classes satisfying the
    sphere adjunction bound 2(q-1) + r1(r1-1) + r2(r2-1) <= 0 together
    with nonnegative area over the whole admissible capacity region.
    Asserts no solutions on the box boundary.
    """
    out = []
    for q, r1, r2 in itertools.product(range(-box, box + 1), repeat=3):
        if (q, r1, r2) == (0, 0, 0):
            continue
        if 2 * (q - 1) + r1 * (r1 - 1) + r2 * (r2 - 1) > 0:
            continue
        a = HClass(0, q, r1, r2)
        if not _area_nonneg_all_shapes(a):
            continue
        assert max(abs(q), abs(r1), abs(r2)) < box, f"solution on box boundary: {a}"
        out.append(a)
    return sorted(out)


def exceptional_classes(box: int = 4) -> list[HClass]:
    """The six exceptional classes: self-intersection -1, Chern number 1,
    positive area for every admissible shape."""
    out = []
    for p in range(0, 3):
        for q, r1, r2 in itertools.product(range(-box, box + 1), repeat=3):
            a = HClass(p, q, r1, r2)
            if intersect(a, a) != -1 or chern(a) != 1:
                continue
            # area mu*p + q - r1 c1 - r2 c2 > 0 for all mu >= 1 and all caps:
            # worst case mu = 1 (coefficients of mu are nonnegative here)
            worst = HClass(0, a.p + a.q, a.r1, a.r2)
            if not _area_nonneg_all_shapes(worst, strict=True):
                continue
            assert max(abs(q), abs(r1), abs(r2)) < box, f"solution on box boundary: {a}"
            out.append(a)
    return sorted(out)


def strata_count(s: Shape) -> int:
    """Number N of strata of the space of compatible almost complex
    structures, per the lambda-range formula 4l-1 / 4l / 4l+1 / 4l+2.

    Only defined on generic shapes; boundary cases go through the
    configuration enumeration instead.
    """
    if not s.is_generic:
        raise InadmissibleShape(
            f"strata count formula needs a generic shape, got boundary case {s.boundary_case}"
        )
    return 4 * s.ell + {1: -1, 2: 0, 3: 1, 4: 2}[s.lam_range()]


def enumerate_d_strata(s: Shape) -> list[tuple[int, HClass]]:
    """All strata (m, D_{-m}) with positive-area defining class, for
    m = 1, 2, ... in order.  On generic shapes the count equals
    `strata_count`."""
    out = []
    m = 1
    while True:
        cls = d_class(-m)
        if area(s, cls) > 0:
            out.append((m, cls))
            m += 1
            continue
        # positivity is monotone decreasing in m beyond the first failures,
        # but the m=1,2 classes (B-E1, B-E1-E2) precede the B-kF family;
        # stop at the first failure past m=2.
        if m <= 2:
            m += 1
            continue
        break
    return out


def codim(ell: int, r1: int, r2: int) -> int:
    """Real codimension of the stratum defined by B - ell*F - r1*E1 - r2*E2:
    4*ell - 2 + 2*r1 + 2*r2 = 2 - 2*c1(that class)."""
    if ell < 1 or r1 not in (0, 1) or r2 not in (0, 1):
        raise ValueError("need ell >= 1 and r1, r2 in {0, 1}")
    return 4 * ell - 2 + 2 * r1 + 2 * r2


# ---------------------------------------------------------------------------
# the line/exceptional basis of the projective-plane picture


@dataclass(frozen=True)
class CP2Class:
    """a0*L - a1*V1 - a2*V2 - a3*V3 in the line/exceptional basis of the
    three-fold blow-up of the projective plane."""

    a0: Fraction
    a1: Fraction
    a2: Fraction
    a3: Fraction

    def __post_init__(self):
        for f in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))


def is_reduced(c: CP2Class) -> bool:
    """a1 >= a2 >= a3 >= 0 and a0 >= a1 + a2 + a3."""
    return c.a1 >= c.a2 >= c.a3 >= 0 and c.a0 >= c.a1 + c.a2 + c.a3


#: images of L, V1, V2, V3 under the basis identification with
#: {B+F-E1, B-E1, F-E1, E2}
BASIS_MAP = {
    "L": HClass(1, 1, 1, 0),
    "V1": HClass(1, 0, 1, 0),
    "V2": HClass(0, 1, 1, 0),
    "V3": HClass(0, 0, 0, -1),
}


def cp2_to_hclass(c: CP2Class) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Image of a0*L - a1*V1 - a2*V2 - a3*V3 as rational coefficients
    (p, q, r1, r2) in the B, F, E1, E2 basis."""
    coeffs = [c.a0, -c.a1, -c.a2, -c.a3]
    imgs = [BASIS_MAP["L"], BASIS_MAP["V1"], BASIS_MAP["V2"], BASIS_MAP["V3"]]
    p = sum(k * im.p for k, im in zip(coeffs, imgs))
    q = sum(k * im.q for k, im in zip(coeffs, imgs))
    r1 = sum(k * im.r1 for k, im in zip(coeffs, imgs))
    r2 = sum(k * im.r2 for k, im in zip(coeffs, imgs))
    return (p, q, r1, r2)


def cp2_to_shape(nu, d1, d2, d3) -> Shape:
    """Shape parameters of the normalized form with total line area nu
    and blow-up capacities d1 >= d2 >= d3:

        mu = (nu - d2)/(nu - d1),  c1 = (nu - d1 - d2)/(nu - d1),
        c2 = d3/(nu - d1).

    Rejects parameters that do not yield an admissible shape.
    """
    nu, d1, d2, d3 = (parse_rational(x) for x in (nu, d1, d2, d3))
    if nu <= d1:
        raise InadmissibleShape("need nu > d1")
    mu = (nu - d2) / (nu - d1)
    c1 = (nu - d1 - d2) / (nu - d1)
    c2 = d3 / (nu - d1)
    return Shape(mu, c1, c2)
