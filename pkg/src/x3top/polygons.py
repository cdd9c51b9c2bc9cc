"""Moment polygons: trapezoids of the ruled surfaces, their corner-chop
blow-ups, and the five-fold family of hexagons.

Polygons are counterclockwise lists of rational points.  The Delzant
test at a vertex asks the primitive directions of the two incident
edges to span the lattice (determinant +-1); corner chopping replaces a
Delzant vertex by the two points at a given lattice distance along its
edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from x3top.core.rationals import format_rational, parse_rational
from x3top.homology import InadmissibleShape, Shape

Point = tuple[Fraction, Fraction]


def _pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def primitive_direction(v: Point) -> tuple[int, int]:
    """The primitive integer vector on the ray of v; v must have rational
    coordinates on a rational line through a lattice direction."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    ix, iy = int(x * den), int(y * den)
    g = gcd(abs(ix), abs(iy))
    return (ix // g, iy // g)


def lattice_length(a: Point, b: Point) -> Fraction:
    """Length of the segment a-b in lattice units of its primitive
    direction."""
    dx, dy = _sub(b, a)
    px, py = primitive_direction((dx, dy))
    return dx / px if px else dy / py


@dataclass(frozen=True)
class LatticePolygon:
    """Convex polygon with counterclockwise rational vertices, no three
    consecutive vertices collinear."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = tuple((Fraction(x), Fraction(y)) for (x, y) in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for i in range(n):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
            turn = _cross(_sub(b, a), _sub(c, b))
            if turn <= 0:
                raise ValueError(
                    f"vertices not strictly convex counterclockwise at {b}"
                )

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edge_directions_at(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Primitive directions of the two edges leaving vertex i."""
        vs = self.vertices
        n = len(vs)
        d_prev = primitive_direction(_sub(vs[i - 1], vs[i]))
        d_next = primitive_direction(_sub(vs[(i + 1) % n], vs[i]))
        return d_prev, d_next

    def is_delzant_at(self, i: int) -> bool:
        d1, d2 = self.edge_directions_at(i)
        return abs(d1[0] * d2[1] - d1[1] * d2[0]) == 1

    def is_delzant(self) -> bool:
        return all(self.is_delzant_at(i) for i in range(len(self)))

    def edge_lengths(self) -> list[Fraction]:
        return [lattice_length(a, b) for a, b in self.edges()]

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x), format_rational(y)] for x, y in self.vertices]


def hirzebruch_polygon(n: int, s: Shape) -> LatticePolygon:
    """Moment trapezoid of the n-th toric structure on the base surface:

    even n = 2k: hull{(0,0), (1,0), (1, mu+k), (0, mu-k)}, 0 <= k <= ell;
    odd n = 2k-1: hull{(0,0), (1,0), (1, mu'+k), (0, mu'-k+1)} with
    mu' = mu - c1, 1 <= k <= ell.
    """
    if n < 0:
        raise InadmissibleShape("n must be >= 0")
    if n % 2 == 0:
        k = n // 2
        if k > s.ell:
            raise InadmissibleShape(f"even torus needs k <= ell: k={k}, ell={s.ell}")
        mu = s.mu
        return LatticePolygon((_pt(0, 0), _pt(1, 0), _pt(1, mu + k), _pt(0, mu - k)))
    k = (n + 1) // 2
    if not 1 <= k <= s.ell:
        raise InadmissibleShape(f"odd torus needs 1 <= k <= ell: k={k}, ell={s.ell}")
    mu = s.mu - s.c1
    return LatticePolygon((_pt(0, 0), _pt(1, 0), _pt(1, mu + k), _pt(0, mu - k + 1)))


def corner_chop(poly: LatticePolygon, vertex_index: int, capacity) -> LatticePolygon:
    """Equivariant blow-up: replace a Delzant vertex by the two points at
    lattice distance `capacity` along its edges.

    The capacity must be positive and strictly smaller than both
    incident lattice edge lengths.
    """
    cap = parse_rational(capacity)
    if cap <= 0:
        raise InadmissibleShape(f"chop capacity must be positive, got {cap}")
    vs = list(poly.vertices)
    n = len(vs)
    i = vertex_index % n
    if not poly.is_delzant_at(i):
        raise InadmissibleShape(f"vertex {i} is not Delzant")
    len_prev = lattice_length(vs[i], vs[i - 1])
    len_next = lattice_length(vs[i], vs[(i + 1) % n])
    if cap >= len_prev or cap >= len_next:
        raise InadmissibleShape(
            f"chop capacity {cap} must be < incident edge lengths "
            f"{format_rational(len_prev)}, {format_rational(len_next)}"
        )
    d_prev, d_next = poly.edge_directions_at(i)
    p_prev = (vs[i][0] + cap * d_prev[0], vs[i][1] + cap * d_prev[1])
    p_next = (vs[i][0] + cap * d_next[0], vs[i][1] + cap * d_next[1])
    new_vs = vs[:i] + [p_prev, p_next] + vs[i + 1 :]
    return LatticePolygon(tuple(new_vs))


def apply_gl2z(poly: LatticePolygon, matrix) -> LatticePolygon:
    """Image under an integer matrix of determinant +-1, translated back
    into the nonnegative quadrant (min coordinates at 0), with vertex
    order flipped if needed to restore counterclockwise orientation."""
    (a, b), (c, d) = matrix
    det = a * d - b * c
    if det not in (1, -1):
        raise ValueError(f"matrix must have determinant +-1, got {det}")
    pts = [(a * x + b * y, c * x + d * y) for (x, y) in poly.vertices]
    if det == -1:
        pts.reverse()
    minx = min(x for x, _ in pts)
    miny = min(y for _, y in pts)
    pts = [(x - minx, y - miny) for x, y in pts]
    # rotate so the lexicographically smallest vertex comes first: keeps
    # output stable under the vertex-cycling ambiguity
    start = min(range(len(pts)), key=lambda i: pts[i])
    pts = pts[start:] + pts[:start]
    return LatticePolygon(tuple(pts))


def normalizing_matrix(n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The change of basis carrying the n-th trapezoid's torus to the
    maximal torus of the isometry group:

        C_0 = (-1 0; 0 1),  C_{2k} = (1 0; -k 1),  C_{2k-1} = (1-k 1; k -1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((-1, 0), (0, 1))
    if n % 2 == 0:
        k = n // 2
        return ((1, 0), (-k, 1))
    k = (n + 1) // 2
    return ((1 - k, 1), (k, -1))


def blowup_polygon(n: int, s: Shape) -> LatticePolygon:
    """Pentagon of the once-blown-up structure: the trapezoid with its
    (0,0) corner chopped, by c1 for even n and by 1-c1 for odd n.

    Vertices are listed in the conventional order: the two upper
    vertices first, then the chop pair, then (1,0)."""
    base = hirzebruch_polygon(n, s)
    cap = s.c1 if n % 2 == 0 else 1 - s.c1
    chopped = corner_chop(base, 0, cap)
    # base is ((0,0),(1,0),(1,*),(0,*)); chop of vertex 0 yields
    # (chop_a, chop_b, (1,0), (1,*), (0,*)); rotate to the listing order
    # ((1,*), (0,*), chop_on_y_axis, chop_on_x_axis, (1,0))
    vs = list(chopped.vertices)
    assert len(vs) == 5
    rotated = [vs[3], vs[4], vs[0], vs[1], vs[2]]
    return LatticePolygon(tuple(rotated))


def t_polygon(i: int, n: int, s: Shape) -> LatticePolygon:
    """Hexagon of the torus obtained by chopping vertex i (1-based, in
    the listing order of `blowup_polygon`) by c2, normalized by the
    change of basis of `normalizing_matrix`.

    Raises with the violated inequality when the chop is inadmissible,
    mirroring exactly which sphere configurations exist at the shape.
    """
    if not 1 <= i <= 5:
        raise ValueError("vertex index i must be in 1..5")
    penta = blowup_polygon(n, s)
    hexagon = corner_chop(penta, i - 1, s.c2)
    return apply_gl2z(hexagon, normalizing_matrix(n))
