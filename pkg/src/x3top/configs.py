"""The eighteen configuration types of holomorphic sphere chains.

Each stratum of the space of compatible almost complex structures is
characterized by a configuration of embedded spheres.  Fifteen of the
types are invariant under a full torus action and their member classes
form the boundary cycle of a Delzant hexagon (six classes, listed in
cyclic order); the remaining three types (6, 8 and 14) only admit a
circle action, and their member classes form a star: a central sphere
of square -2 meeting three others.

Types 1-6 exist for every shape (m = 0); the others come in families
indexed by m >= 1 and exist precisely when every member class has
positive area.  On shapes with equal capacities the class E1-E2 is not
representable and every type containing it drops out; likewise for
F-E1-E2 when the capacities sum to 1.

The per-type class data below is fixed, validated data: the chain/cycle
adjacency, the defining negative section class, and (for toric types)
agreement of member areas with the lattice edge lengths of the matching
moment hexagon are all checked by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from x3top.homology import HClass, Shape, area, intersect

# sign conventions: HClass(p, q, r1, r2) is p*B + q*F - r1*E1 - r2*E2


def _cls(p, q, r1, r2):
    return HClass(p, q, r1, r2)


#: member classes of types 1-6 (m is irrelevant, fixed at 0):
#: toric types list the hexagon boundary cycle, star types the center last
_TYPES_M0 = {
    1: ("cycle", [_cls(0, 1, 0, 1), _cls(1, 0, 1, 0), _cls(0, 0, -1, 0),
                  _cls(0, 1, 1, 0), _cls(1, 0, 0, 1), _cls(0, 0, 0, -1)]),
    2: ("cycle", [_cls(0, 1, 0, 0), _cls(1, 0, 1, 0), _cls(0, 0, -1, 0),
                  _cls(0, 1, 1, 1), _cls(0, 0, 0, -1), _cls(1, 0, 0, 1)]),
    3: ("cycle", [_cls(0, 1, 0, 1), _cls(0, 0, 0, -1), _cls(1, 0, 1, 1),
                  _cls(0, 0, -1, 0), _cls(0, 1, 1, 0), _cls(1, 0, 0, 0)]),
    4: ("cycle", [_cls(0, 1, 0, 0), _cls(1, 0, 1, 0), _cls(0, 0, -1, 1),
                  _cls(0, 0, 0, -1), _cls(0, 1, 1, 1), _cls(1, 0, 0, 0)]),
    5: ("cycle", [_cls(0, 1, 0, 0), _cls(1, 0, 1, 1), _cls(0, 0, 0, -1),
                  _cls(0, 0, -1, 1), _cls(0, 1, 1, 0), _cls(1, 0, 0, 0)]),
    # star: leaves then center (E1-E2 meets all three leaves)
    6: ("star", [_cls(1, 0, 1, 0), _cls(0, 1, 1, 0), _cls(0, 0, 0, -1),
                 _cls(0, 0, -1, 1)]),
}

#: member classes of types 7-18 as functions of m >= 1
_TYPES_M = {
    # odd-torus hexagons (defining class B - mF or B - mF - E2)
    7: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 0, 0), _cls(0, 1, 1, 0),
                            _cls(0, 0, -1, 1), _cls(0, 0, 0, -1), _cls(1, m, 1, 1)]),
    8: ("star", lambda m: [_cls(1, -m, 0, 0), _cls(0, 0, -1, 0), _cls(0, 0, 0, -1),
                           _cls(0, 1, 1, 1)]),
    9: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 0, 0), _cls(0, 1, 1, 1),
                            _cls(0, 0, 0, -1), _cls(0, 0, -1, 1), _cls(1, m, 1, 0)]),
    10: ("cycle", lambda m: [_cls(0, 1, 0, 1), _cls(1, -m, 0, 0), _cls(0, 1, 1, 0),
                             _cls(0, 0, -1, 0), _cls(1, m, 1, 1), _cls(0, 0, 0, -1)]),
    11: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 0, 1), _cls(0, 0, 0, -1),
                             _cls(0, 1, 1, 1), _cls(0, 0, -1, 0), _cls(1, m, 1, 0)]),
    12: ("cycle", lambda m: [_cls(0, 1, 0, 1), _cls(0, 0, 0, -1), _cls(1, -m, 0, 1),
                             _cls(0, 1, 1, 0), _cls(0, 0, -1, 0), _cls(1, m, 1, 0)]),
    # even-torus hexagons (defining class B - mF - E1 or B - mF - E1 - E2)
    13: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 1, 0), _cls(0, 0, -1, 0),
                             _cls(0, 1, 1, 1), _cls(0, 0, 0, -1), _cls(1, m, 0, 1)]),
    14: ("star", lambda m: [_cls(1, -m, 1, 0), _cls(0, 1, 1, 0), _cls(0, 0, 0, -1),
                            _cls(0, 0, -1, 1)]),
    15: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 1, 0), _cls(0, 0, -1, 1),
                             _cls(0, 0, 0, -1), _cls(0, 1, 1, 1), _cls(1, m, 0, 0)]),
    16: ("cycle", lambda m: [_cls(0, 1, 0, 1), _cls(1, -m, 1, 0), _cls(0, 0, -1, 0),
                             _cls(0, 1, 1, 0), _cls(1, m, 0, 1), _cls(0, 0, 0, -1)]),
    17: ("cycle", lambda m: [_cls(0, 1, 0, 0), _cls(1, -m, 1, 1), _cls(0, 0, 0, -1),
                             _cls(0, 0, -1, 1), _cls(0, 1, 1, 0), _cls(1, m, 0, 0)]),
    18: ("cycle", lambda m: [_cls(0, 1, 0, 1), _cls(0, 0, 0, -1), _cls(1, -m, 1, 1),
                             _cls(0, 0, -1, 0), _cls(0, 1, 1, 0), _cls(1, m, 0, 0)]),
}

#: m -> stratum index of the defining class (see `defining_class`)
_STRATUM_OFFSET = {7: -1, 8: -1, 9: -1, 10: -1, 11: 0, 12: 0,
                   13: 1, 14: 1, 15: 1, 16: 1, 17: 2, 18: 2}

E1_MINUS_E2 = _cls(0, 0, -1, 1)
F_MINUS_E1_E2 = _cls(0, 1, 1, 1)


@dataclass(frozen=True)
class ConfigType:
    """One configuration: type id 1..18, family index m (0 for types
    1-6), and the member classes in adjacency order."""

    type_id: int
    m: int
    member_classes: tuple[HClass, ...]

    @property
    def shape_kind(self) -> str:
        return "star" if self.type_id in (6, 8, 14) else "cycle"

    def defining_class(self) -> HClass:
        """The negative section-type class characterizing the stratum."""
        if self.type_id in (1, 2, 4, 6):
            return _cls(1, 0, 1, 0)  # B - E1
        if self.type_id in (3, 5):
            return _cls(1, 0, 1, 1)  # B - E1 - E2
        base = {7: (0, 0), 8: (0, 0), 9: (0, 0), 10: (0, 0),
                11: (0, 1), 12: (0, 1),
                13: (1, 0), 14: (1, 0), 15: (1, 0), 16: (1, 0),
                17: (1, 1), 18: (1, 1)}[self.type_id]
        return _cls(1, -self.m, base[0], base[1])

    def stratum_index(self) -> int:
        """Index m' with D_{-m'} the defining class."""
        if self.type_id in (1, 2, 4, 6):
            return 1
        if self.type_id in (3, 5):
            return 2
        return 4 * self.m + _STRATUM_OFFSET[self.type_id]

    def to_json(self) -> dict:
        return {
            "type": self.type_id,
            "m": self.m,
            "shape": self.shape_kind,
            "classes": [c.to_json() for c in self.member_classes],
        }


def config_type(type_id: int, m: int = 0) -> ConfigType:
    if type_id in _TYPES_M0:
        if m:
            raise ValueError(f"type {type_id} has no family index")
        kind, classes = _TYPES_M0[type_id]
        return ConfigType(type_id, 0, tuple(classes))
    if type_id not in _TYPES_M:
        raise ValueError(f"no configuration type {type_id}")
    if m < 1:
        raise ValueError(f"type {type_id} needs m >= 1")
    kind, fn = _TYPES_M[type_id]
    return ConfigType(type_id, m, tuple(fn(m)))


def isometry_type(t: ConfigType | int) -> str:
    """Isometry group of the complex structures in this stratum:
    "S1" for types 6, 8 and 14, "T2" otherwise."""
    type_id = t.type_id if isinstance(t, ConfigType) else t
    if not 1 <= type_id <= 18:
        raise ValueError(f"no configuration type {type_id}")
    return "S1" if type_id in (6, 8, 14) else "T2"


def config_exists(s: Shape, t: ConfigType) -> bool:
    """A configuration is realizable iff every member class has positive
    area and no member class is forbidden by a capacity boundary."""
    forbidden = []
    if s.c1 == s.c2:
        forbidden.append(E1_MINUS_E2)
    if s.c1 + s.c2 == 1:
        forbidden.append(F_MINUS_E1_E2)
    for c in t.member_classes:
        if area(s, c) <= 0:
            return False
        if c in forbidden:
            return False
    return True


def enumerate_configurations(s: Shape) -> list[ConfigType]:
    """All configurations realizable at the shape, types 1-6 first and
    then the m >= 1 families in increasing (m, type) order."""
    out = []
    for tid in range(1, 7):
        t = config_type(tid)
        if config_exists(s, t):
            out.append(t)
    m = 1
    while s.mu - m > 0:
        for tid in range(7, 19):
            t = config_type(tid, m)
            if config_exists(s, t):
                out.append(t)
        m += 1
    return out


def validate_config(t: ConfigType) -> None:
    """Structural sanity of the stored data: distinct classes, pairwise
    intersections >= 0, adjacency pattern (cycle or star), and presence
    of the defining class."""
    cs = t.member_classes
    n = len(cs)
    if len(set(cs)) != n:
        raise AssertionError(f"type {t.type_id}: repeated member class")
    for i in range(n):
        for j in range(i + 1, n):
            if intersect(cs[i], cs[j]) < 0:
                raise AssertionError(
                    f"type {t.type_id}: classes {cs[i]} and {cs[j]} have negative pairing"
                )
    if t.shape_kind == "cycle":
        if n != 6:
            raise AssertionError(f"type {t.type_id}: toric cycle must have 6 classes")
        for i in range(n):
            for j in range(i + 1, n):
                expected = 1 if (j - i == 1 or (i == 0 and j == n - 1)) else 0
                if intersect(cs[i], cs[j]) != expected:
                    raise AssertionError(
                        f"type {t.type_id}: cycle adjacency broken at ({i},{j})"
                    )
    else:
        if n != 4:
            raise AssertionError(f"type {t.type_id}: star must have 4 classes")
        center = cs[-1]
        if intersect(center, center) != -2:
            raise AssertionError(f"type {t.type_id}: star center must have square -2")
        for leaf in cs[:-1]:
            if intersect(center, leaf) != 1:
                raise AssertionError(f"type {t.type_id}: star center misses a leaf")
        for i in range(3):
            for j in range(i + 1, 3):
                if intersect(cs[i], cs[j]) != 0:
                    raise AssertionError(f"type {t.type_id}: star leaves must be disjoint")
    if t.defining_class() not in cs:
        raise AssertionError(f"type {t.type_id}: defining class missing from members")
