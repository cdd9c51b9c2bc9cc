"""Exact inflation arithmetic: deforming a normalized form along
holomorphic spheres and replaying the thirteen two-column deformation
tables with exact rationals.

A `FormClass` records the areas of (B, F, E1, E2).  Inflating along a
class Z with parameter t >= 0 adds t * (Z . X) to every area; when
Z . Z = -m < 0 the parameter must stay strictly below area(Z)/m (the
negative-inflation bound), and the bound is enforced exactly, with no
epsilon bookkeeping.

Each table column is encoded as data: the curve list with its parameter
substitutions in terms of (mu, c1, c2, lambda, ell, b), an optional
normalization point after which a final negative inflation is applied,
the admissible lambda-range, any cap on b, and the asserted closed
forms of the final areas.  `run_table` interprets the script and checks
every assertion; `limit_check` compares the large-b behavior of the
final areas against the recorded target.

Three of the printed closed forms in circulation are typos and are
asserted here in their verified corrected form; see TABLE_ERRATA.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from x3top.core.rationals import format_rational
from x3top.homology import HClass, InadmissibleShape, Shape, area, d_class, intersect

#: corrected entries, asserted after exact re-derivation of each column:
#: every other printed value reproduces the executed scripts verbatim.
TABLE_ERRATA = {
    (4, 2): "final B-area denominator is 1-c1-c2+b (not 1-c1+c2+b)",
    (7, 2): "final E1-area denominator is 1-c2+b (not 1-c2+(lambda-c2)*b)",
    (13, 2): "substitution a = c1*b/(1-c1) (not c1*b/(lambda-c1))",
}


@dataclass(frozen=True)
class FormClass:
    """Areas of the basis classes (B, F, E1, E2) of a symplectic form's
    cohomology class."""

    b: Fraction
    f: Fraction
    e1: Fraction
    e2: Fraction

    def __post_init__(self):
        for name in ("b", "f", "e1", "e2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @staticmethod
    def of_shape(s: Shape) -> "FormClass":
        return FormClass(s.mu, Fraction(1), s.c1, s.c2)

    def area_of(self, a: HClass) -> Fraction:
        return self.b * a.p + self.f * a.q - self.e1 * a.r1 - self.e2 * a.r2

    def is_admissible(self) -> bool:
        """Positive area on the fiber and on all six exceptional
        classes."""
        probes = [
            HClass(0, 1, 0, 0),
            HClass(0, 0, -1, 0),
            HClass(0, 0, 0, -1),
            HClass(0, 1, 1, 0),
            HClass(0, 1, 0, 1),
            HClass(1, 0, 1, 0),
            HClass(1, 0, 0, 1),
        ]
        return all(self.area_of(c) > 0 for c in probes)

    def scale(self, factor: Fraction) -> "FormClass":
        return FormClass(self.b * factor, self.f * factor, self.e1 * factor, self.e2 * factor)

    def to_json(self) -> dict:
        return {
            "B": format_rational(self.b),
            "F": format_rational(self.f),
            "E1": format_rational(self.e1),
            "E2": format_rational(self.e2),
        }


class InflationBoundError(InadmissibleShape):
    pass


def inflate(f: FormClass, z: HClass, t: Fraction, check_admissible: bool = True) -> FormClass:
    """Add t * PD(Z): every area gains t * (Z . basis class).

    t must be >= 0; if Z has square -m < 0 the bound t * m < area(Z) is
    enforced strictly (exact rationals stand in for the epsilon in the
    open condition).
    """
    t = Fraction(t)
    if t < 0:
        raise InflationBoundError(f"inflation parameter must be >= 0, got {t}")
    sq = intersect(z, z)
    if sq < 0:
        bound = f.area_of(z)
        if t * (-sq) >= bound:
            raise InflationBoundError(
                f"negative inflation along {z} (square {sq}) requires "
                f"t < {format_rational(bound)}/{-sq}, got t = {format_rational(t)}"
            )
    out = FormClass(
        f.b + t * intersect(z, HClass(1, 0, 0, 0)),
        f.f + t * intersect(z, HClass(0, 1, 0, 0)),
        f.e1 + t * intersect(z, HClass(0, 0, -1, 0)),
        f.e2 + t * intersect(z, HClass(0, 0, 0, -1)),
    )
    if check_admissible and not out.is_admissible():
        raise InflationBoundError(
            f"inflation along {z} by {format_rational(t)} leaves an inadmissible form"
        )
    return out


# ---------------------------------------------------------------------------
# table scripts

Rat = Fraction
Sub = Callable[[Shape, Rat], Rat]  # (shape, b) -> parameter value


@dataclass(frozen=True)
class TableColumn:
    """One column of a deformation table.

    `steps` lists (curve, substitution) pairs applied before
    normalization (in order); `post_step`, when present, is a negative
    inflation applied after dividing by the fiber area; `final` maps
    each area name to its asserted closed form; `limit` records the
    large-b targets of the non-constant areas, and `b_cap` an optional
    strict upper bound for b.
    """

    table_id: int
    column: int
    lam_range: Callable[[Shape], bool]
    description: str
    steps: tuple[tuple[Callable[[Shape], HClass], Sub], ...]
    post_step: tuple[Callable[[Shape], HClass], Sub] | None
    final: dict[str, Callable[[Shape, Rat], Rat]]
    limit: dict[str, Callable[[Shape], Rat]]
    b_cap: Callable[[Shape], Rat | None] = lambda s: None


def _D(i_of):
    # curve factory: i_of(shape) -> integer index into the section family
    return lambda s: d_class(i_of(s))


_F = lambda s: HClass(0, 1, 0, 0)
_F_MINUS_E1 = lambda s: HClass(0, 1, 1, 0)
_E1_MINUS_E2 = lambda s: HClass(0, 0, -1, 1)
_F_MINUS_E1_E2 = lambda s: HClass(0, 1, 1, 1)


def _rng(which: str) -> Callable[[Shape], bool]:
    return {
        "a": lambda s: s.lam <= s.c2,
        "b": lambda s: s.c2 < s.lam <= s.c1,
        "c": lambda s: s.c1 < s.lam <= s.c1 + s.c2,
        "d": lambda s: s.c1 + s.c2 < s.lam,
    }[which]


def _and(r1, r2):
    return lambda s: r1(s) and r2(s)


def _build_tables() -> dict[tuple[int, int], TableColumn]:
    T: dict[tuple[int, int], TableColumn] = {}

    def col(table_id, column, lam_range, description, steps, post, final, limit, b_cap=None):
        T[(table_id, column)] = TableColumn(
            table_id,
            column,
            _rng(lam_range) if isinstance(lam_range, str) else lam_range,
            description,
            tuple(steps),
            post,
            final,
            limit,
            b_cap or (lambda s: None),
        )

    one = lambda s, b: Fraction(1)
    mu = lambda s: s.mu

    # -- raising the base area toward its floor (targets the B-area) ---------
    col(
        3, 1, "a", "configs (7)/(9): section curves then the difference sphere",
        steps=[
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: (s.c1 + s.c2) * b / (1 - s.c1 - s.c2)),
        ],
        post=(_E1_MINUS_E2, lambda s, b: s.c2 * b / (1 - s.c1 - s.c2 + b)),
        final={
            "B": lambda s, b: (s.mu * (1 - s.c1 - s.c2) + b * s.ell) / (1 - s.c1 - s.c2 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: Fraction(s.ell)},
    )
    col(
        3, 2, "c", "configs (13)/(15): section curves then the broken fiber",
        steps=[
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: (s.c1 - s.c2) * b / (1 - s.c1 + s.c2)),
        ],
        post=(_F_MINUS_E1_E2, lambda s, b: s.c2 * b / (1 - s.c1 + s.c2 + b)),
        final={
            "B": lambda s, b: (s.mu * (1 - s.c1 + s.c2) + b * (s.ell + s.c1)) / (1 - s.c1 + s.c2 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: s.ell + s.c1},
    )
    col(
        4, 1, "a", "configs (8)/(10): three section curves",
        steps=[
            (_D(lambda s: 4 * s.ell), lambda s, b: s.c2 * b / (1 - s.c1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: s.c1 * b / (1 - s.c1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: (s.mu * (1 - s.c1 - s.c2) + b * s.ell) / (1 - s.c1 - s.c2 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: Fraction(s.ell)},
    )
    col(
        4, 2, "b", "configs (11)/(12): three section curves",
        steps=[
            (_D(lambda s: 4 * s.ell + 4), lambda s, b: s.c2 * b / (1 - s.c1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: s.c1 * b / (1 - s.c1 - s.c2)),
        ],
        post=None,
        final={
            # corrected denominator, see TABLE_ERRATA[(4, 2)]
            "B": lambda s, b: (s.mu * (1 - s.c1 - s.c2) + b * (s.ell + s.c2)) / (1 - s.c1 - s.c2 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: s.ell + s.c2},
    )
    col(
        5, 1, "c", "configs (14)/(16): three section curves",
        steps=[
            (_D(lambda s: 4 * s.ell + 2), lambda s, b: s.c2 * b / (1 - s.c1)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: (s.c1 - s.c2) * b / (1 - s.c1)),
        ],
        post=None,
        final={
            "B": lambda s, b: (s.mu * (1 - s.c1) + b * (s.ell + s.c1)) / (1 - s.c1 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: s.ell + s.c1},
    )
    col(
        5, 2, "d", "configs (17)/(18): three section curves",
        steps=[
            (_D(lambda s: 4 * s.ell + 6), lambda s, b: s.c2 * b / (1 - s.c1)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: (s.c1 - s.c2) * b / (1 - s.c1)),
        ],
        post=None,
        final={
            "B": lambda s, b: (s.mu * (1 - s.c1) + b * (s.ell + s.c1 + s.c2)) / (1 - s.c1 + b),
            "F": one, "E1": lambda s, b: s.c1, "E2": lambda s, b: s.c2,
        },
        limit={"B": lambda s: s.ell + s.c1 + s.c2},
    )

    # -- lowering the first capacity (targets the E1-area) -------------------
    col(
        6, 1, "a", "configs (7)/(9): capped difference-sphere inflation",
        steps=[
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b),
        ],
        post=(_E1_MINUS_E2, lambda s, b: s.c2 * b / (1 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 - s.c2 * b) / (1 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.c2},
        b_cap=lambda s: (s.c1 - s.c2) / (2 * s.c2),
    )
    col(
        6, 2, "c", "configs (13)/(15): broken-fiber inflation",
        steps=[
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c2) * b),
        ],
        post=(_F_MINUS_E1_E2, lambda s, b: s.c2 * b / (1 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 + s.c2 * b) / (1 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.c2},
    )
    col(
        7, 1, "a", "configs (8)/(10)",
        steps=[
            (_D(lambda s: 4 * s.ell), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b / (1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1 * (1 - s.c2) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: Fraction(0)},
    )
    col(
        7, 2, "b", "configs (11)/(12)",
        steps=[
            (_D(lambda s: 4 * s.ell + 4), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c2) * b / (1 - s.c2)),
        ],
        post=None,
        final={
            # corrected denominator, see TABLE_ERRATA[(7, 2)]
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1 * (1 - s.c2) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: Fraction(0)},
    )
    col(
        8, 1, "c", "configs (14)/(16)",
        steps=[
            (_D(lambda s: 4 * s.ell + 2), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c2) * b / (1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (1 - s.c2) + s.c2 * b) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.c2},
    )
    col(
        8, 2, "d", "configs (17)/(18)",
        steps=[
            (_D(lambda s: 4 * s.ell + 6), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - 2 * s.c2) * b / (1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (1 - s.c2) + s.c2 * b) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.c2},
    )

    # -- raising the first capacity ------------------------------------------
    col(
        9, 1, "a", "configs (7)/(9)",
        steps=[
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b),
        ],
        post=(_E1_MINUS_E2, lambda s, b: s.c2 * b / (1 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 + (1 - s.c2) * b) / (1 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: 1 - s.c2},
    )
    col(
        9, 2, "c", "configs (13)/(15)",
        steps=[
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: (1 - s.lam + s.c2) * b / (s.lam - s.c2)),
        ],
        post=(_F_MINUS_E1_E2, lambda s, b: s.c2 * b / (s.lam - s.c2 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (s.lam - s.c2) + s.lam * b) / (s.lam - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        # uncapped shapes reach lam in the limit; capped ones stop at 1-c2
        limit={"E1": lambda s: s.lam if s.lam + s.c2 <= 1 else 1 - s.c2},
        # the negative step 2a < area(F-E1-E2) caps b once lam + c2 > 1;
        # derived, not part of the stated script
        b_cap=lambda s: (
            None
            if s.lam + s.c2 <= 1
            else (1 - s.c1 - s.c2) * (s.lam - s.c2) / (s.lam + s.c2 - 1)
        ),
    )
    col(
        10, 1, "a", "configs (8)/(10)",
        steps=[
            (_D(lambda s: 4 * s.ell), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b / (1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (1 - s.c2) + (1 - s.c2) * b) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: 1 - s.c2},
    )
    col(
        10, 2, "b", "configs (11)/(12)",
        steps=[
            (_D(lambda s: 4 * s.ell + 4), lambda s, b: s.c2 * b / (1 - s.c2)),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c2) * b / (1 - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (1 - s.c2) + (1 - s.c2) * b) / (1 - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: 1 - s.c2},
    )
    col(
        11, 1, "c", "configs (14)/(16)",
        steps=[
            (_D(lambda s: 4 * s.ell + 2), lambda s, b: s.c2 * b / (s.lam - s.c2)),
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: (1 - s.lam) * b / (s.lam - s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (s.lam - s.c2) + s.lam * b) / (s.lam - s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.lam},
    )
    col(
        11, 2, "d", "configs (17)/(18)",
        steps=[
            (_D(lambda s: 4 * s.ell + 6), lambda s, b: s.c2 * b / (s.lam - 2 * s.c2)),
            (_D(lambda s: 4 * s.ell + 3), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: (1 - s.lam + s.c2) * b / (s.lam - 2 * s.c2)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: (s.c1 * (s.lam - 2 * s.c2) + (s.lam - s.c2) * b) / (s.lam - 2 * s.c2 + b),
            "E2": lambda s, b: s.c2,
        },
        limit={"E1": lambda s: s.lam - s.c2},
    )

    # -- raising the second capacity (targets the E2-area) -------------------
    col(
        12, 1, lambda s: s.lam <= s.c2, "configs (7)/(9)",
        steps=[
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b),
        ],
        post=(_E1_MINUS_E2, lambda s, b: (1 - s.c1) * b / (1 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 + (1 - s.c1) * b) / (1 + b),
        },
        limit={"E2": lambda s: 1 - s.c1 if s.c1 >= Fraction(1, 2) else s.c1},
        b_cap=lambda s: None if s.c1 >= Fraction(1, 2) else (s.c1 - s.c2) / (1 - 2 * s.c1),
    )
    col(
        12, 2, "c", "configs (13)/(15)",
        steps=[
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c1) * b),
        ],
        post=(_F_MINUS_E1_E2, lambda s, b: s.c1 * b / (1 + b)),
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 + s.c1 * b) / (1 + b),
        },
        limit={"E2": lambda s: s.c1 if s.c1 <= Fraction(1, 2) else 1 - s.c1},
        b_cap=lambda s: None if s.c1 <= Fraction(1, 2) else (1 - s.c1 - s.c2) / (2 * s.c1 - 1),
    )
    col(
        13, 1, "a", "configs (8)/(10)",
        steps=[
            (_D(lambda s: 4 * s.ell), lambda s, b: (1 - s.c1) * b / s.c1),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: s.lam * b / s.c1),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * s.c1 + (1 - s.c1) * b) / (s.c1 + b),
        },
        limit={"E2": lambda s: 1 - s.c1},
    )
    col(
        13, 2, "c", "configs (14)/(16)",
        steps=[
            (_D(lambda s: 4 * s.ell + 2), lambda s, b: s.c1 * b / (1 - s.c1)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - s.c1) * b / (1 - s.c1)),
        ],
        post=None,
        final={
            # corrected substitution, see TABLE_ERRATA[(13, 2)]
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * (1 - s.c1) + s.c1 * b) / (1 - s.c1 + b),
        },
        limit={"E2": lambda s: s.c1},
    )
    col(
        14, 1, _and(_rng("b"), lambda s: s.lam >= 1 - s.c1), "configs (11)/(12), large lambda",
        steps=[
            (_D(lambda s: 4 * s.ell + 4), lambda s, b: (1 - s.c1) * b / s.c1),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - 1 + s.c1) * b / s.c1),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * s.c1 + (1 - s.c1) * b) / (s.c1 + b),
        },
        limit={"E2": lambda s: 1 - s.c1},
    )
    col(
        14, 2, _and(_rng("b"), lambda s: s.lam < 1 - s.c1), "configs (11)/(12), small lambda",
        steps=[
            (_D(lambda s: 4 * s.ell + 4), lambda s, b: s.lam * b / s.c1),
            (_D(lambda s: 4 * s.ell - 1), lambda s, b: b),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: (1 - s.lam - s.c1) * b / s.c1),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * s.c1 + s.lam * b) / (s.c1 + b),
        },
        limit={"E2": lambda s: s.lam},
    )
    col(
        15, 1, _and(_rng("d"), lambda s: s.lam <= 2 * s.c1), "configs (17)/(18), lambda <= 2*c1",
        steps=[
            (_D(lambda s: 4 * s.ell + 6), lambda s, b: (s.lam - s.c1) * b / (1 - s.lam + s.c1)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F_MINUS_E1, lambda s, b: (2 * s.c1 - s.lam) * b / (1 - s.lam + s.c1)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * (1 - s.lam + s.c1) + (s.lam - s.c1) * b) / (1 - s.lam + s.c1 + b),
        },
        limit={"E2": lambda s: s.lam - s.c1},
    )
    col(
        15, 2, _and(_rng("d"), lambda s: s.lam > 2 * s.c1), "configs (17)/(18), lambda > 2*c1",
        steps=[
            (_D(lambda s: 4 * s.ell + 6), lambda s, b: s.c1 * b / (1 - s.c1)),
            (_D(lambda s: 4 * s.ell + 1), lambda s, b: b),
            (_F, lambda s, b: (s.lam - 2 * s.c1) * b / (1 - s.c1)),
        ],
        post=None,
        final={
            "B": lambda s, b: s.mu, "F": one,
            "E1": lambda s, b: s.c1,
            "E2": lambda s, b: (s.c2 * (1 - s.c1) + s.c1 * b) / (1 - s.c1 + b),
        },
        limit={"E2": lambda s: s.c1},
    )
    return T


TABLES = _build_tables()


def table_ids() -> list[tuple[int, int]]:
    return sorted(TABLES)


def admissible_b(key: tuple[int, int], s: Shape, b: Fraction) -> bool:
    colspec = TABLES[key]
    cap = colspec.b_cap(s)
    return b >= 0 and (cap is None or b < cap)


def run_table(table_id: int, column: int, s: Shape, b) -> dict:
    """Execute one table column at the shape and check every recorded
    closed form; returns a report with all intermediate areas.

    Raises when the shape misses the column's lambda-range, when b is
    outside its admissible range, or when a negative-inflation bound is
    violated along the way.
    """
    b = Fraction(b)
    key = (table_id, column)
    if key not in TABLES:
        raise KeyError(f"no table column {key}")
    colspec = TABLES[key]
    if not s.is_generic:
        raise InadmissibleShape("table scripts are stated for generic shapes")
    if not colspec.lam_range(s):
        raise InadmissibleShape(
            f"shape with lambda={format_rational(s.lam)} misses the range of table "
            f"{table_id} column {column}"
        )
    if b < 0:
        raise InflationBoundError("b must be >= 0")
    cap = colspec.b_cap(s)
    if cap is not None and b >= cap:
        raise InflationBoundError(
            f"b = {format_rational(b)} violates the cap b < {format_rational(cap)} "
            f"of table {table_id} column {column}"
        )
    form = FormClass.of_shape(s)
    intermediates = [{"step": "start", "areas": form.to_json()}]
    for curve_of, sub in colspec.steps:
        z = curve_of(s)
        t = sub(s, b)
        if t < 0:
            raise InflationBoundError(f"negative parameter {t} for curve {z}")
        form = inflate(form, z, t, check_admissible=False)
        intermediates.append({"step": f"inflate {z} by {format_rational(t)}", "areas": form.to_json()})
    form = form.scale(1 / form.f)
    intermediates.append({"step": "normalize fiber area", "areas": form.to_json()})
    if colspec.post_step is not None:
        curve_of, sub = colspec.post_step
        z = curve_of(s)
        t = sub(s, b)
        form = inflate(form, z, t, check_admissible=False)
        intermediates.append({"step": f"inflate {z} by {format_rational(t)}", "areas": form.to_json()})
    got = {"B": form.b, "F": form.f, "E1": form.e1, "E2": form.e2}
    failures = []
    for name, fn in colspec.final.items():
        expected = fn(s, b)
        if got[name] != expected:
            failures.append(
                {
                    "area": name,
                    "got": format_rational(got[name]),
                    "expected": format_rational(expected),
                }
            )
    report = {
        "table": table_id,
        "column": column,
        "shape": s.to_json(),
        "b": format_rational(b),
        "intermediates": intermediates,
        "final": form.to_json(),
        "admissible": form.is_admissible(),
        "failures": failures,
        "passed": not failures,
    }
    if key in TABLE_ERRATA:
        report["erratum"] = TABLE_ERRATA[key]
    return report


def limit_check(table_id: int, column: int, s: Shape) -> dict:
    """Large-b behavior: the final-area closed forms are degree-(1,1)
    rational functions of b; their ratio of leading coefficients must
    match the recorded target.  For capped columns the target is instead
    attained at the cap and is checked there."""
    key = (table_id, column)
    colspec = TABLES[key]
    if not colspec.lam_range(s):
        raise InadmissibleShape(
            f"shape misses the range of table {table_id} column {column}"
        )
    results = []
    cap = colspec.b_cap(s)
    for name, target_fn in colspec.limit.items():
        target = target_fn(s)
        fn = colspec.final[name]
        if cap is None:
            # leading coefficient ratio via two large samples: a degree-
            # (1,1) rational function f(b) = (p + q b)/(r + u b) satisfies
            # f(b) -> q/u; solve q/u exactly from two exact evaluations
            b1, b2 = Fraction(10**9), Fraction(2 * 10**9)
            v1, v2 = fn(s, b1), fn(s, b2)
            # fit (p + q b)/(r + u b) through enough samples: use 3 points
            b3 = Fraction(3 * 10**9)
            v3 = fn(s, b3)
            lim = _limit_of_deg11(((b1, v1), (b2, v2), (b3, v3)))
            kind = "b_to_infinity"
        else:
            lim = fn(s, cap)
            kind = "at_b_cap"
        results.append(
            {
                "area": name,
                "kind": kind,
                "limit": format_rational(lim),
                "target": format_rational(target),
                "passed": lim == target,
            }
        )
    return {
        "table": table_id,
        "column": column,
        "results": results,
        "passed": all(r["passed"] for r in results),
    }


def _limit_of_deg11(samples) -> Fraction:
    """Exact large-b limit of f(b) = (A + B*b)/(C + b) from three exact
    samples: solve A + B*b_i - f(b_i)*C = f(b_i)*b_i for (A, B, C) and
    return B.  Every moving area of the tables has this shape (monic
    degree-1 denominator)."""
    rows = [
        [Fraction(1), Fraction(b), -v, v * b]
        for b, v in samples
    ]
    # Gaussian elimination on the 3x4 system
    for col in range(3):
        piv = next(i for i in range(col, 3) if rows[i][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for i in range(3):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return rows[1][3]  # the B-coefficient
