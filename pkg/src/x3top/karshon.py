"""Fixed-point graphs of circle subactions and the resulting
fundamental-group identifications.

A Hamiltonian circle action on a compact symplectic four-manifold is
classified by its labeled graph: fixed surfaces with moment value and
area, isolated fixed points with their pair of isotropy weights, and
spheres of finite isotropy order k >= 2.  Two circle actions inside the
toric structures here are conjugate, hence equal in the fundamental
group of the symplectomorphism group, exactly when their graphs agree
after translating moment values so the minimum sits at 0.

The module also carries the identification table expressing every torus
generator through the six basic classes (x0, y0, x1, y1, z, t) and the
circle generators a_n of the three non-toric strata, whose graphs are
built from the corresponding pentagon by blowing up an interior point
of its fixed sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from x3top.core.rationals import format_rational
from x3top.homology import Shape
from x3top.polygons import (
    LatticePolygon,
    blowup_polygon,
    lattice_length,
    primitive_direction,
    t_polygon,
)

BASIS = ("x0", "y0", "x1", "y1", "z", "t")


@dataclass(frozen=True)
class CircleWeight:
    """A primitive integer vector: the subcircle of a two-torus whose
    moment map is the pairing with xi."""

    xi: tuple[int, int]

    def __post_init__(self):
        a, b = self.xi
        if gcd(abs(a), abs(b)) != 1:
            raise ValueError(f"subcircle vector must be primitive, got {self.xi}")


@dataclass(frozen=True)
class KarshonGraph:
    """Canonical fixed-point data: all moment values are normalized so
    the minimum is 0, and each label list is sorted."""

    fat_vertices: tuple[tuple[Fraction, Fraction, int], ...]  # (moment, area, genus)
    isolated_points: tuple[tuple[Fraction, tuple[int, int]], ...]
    zk_edges: tuple[tuple[Fraction, Fraction, int], ...]  # (moment lo, moment hi, k)

    def to_json(self) -> dict:
        return {
            "fat_vertices": [
                {"moment": format_rational(m), "area": format_rational(a), "genus": g}
                for m, a, g in self.fat_vertices
            ],
            "isolated_points": [
                {"moment": format_rational(m), "weights": list(w)}
                for m, w in self.isolated_points
            ],
            "zk_edges": [
                {"from": format_rational(lo), "to": format_rational(hi), "k": k}
                for lo, hi, k in self.zk_edges
            ],
        }


def _canonical(fat, isolated, zk) -> KarshonGraph:
    values = [m for m, _, _ in fat] + [m for m, _ in isolated]
    values += [v for lo, hi, _ in zk for v in (lo, hi)]
    base = min(values)
    fat = tuple(sorted((m - base, a, g) for m, a, g in fat))
    isolated = tuple(sorted((m - base, tuple(sorted(w))) for m, w in isolated))
    zk = tuple(sorted((lo - base, hi - base, k) for lo, hi, k in zk))
    return KarshonGraph(fat, isolated, zk)


def karshon_graph(poly: LatticePolygon, xi: CircleWeight | tuple[int, int]) -> KarshonGraph:
    """Graph of the subcircle xi acting through a Delzant polygon.

    Fixed surfaces are the edges whose direction pairs to zero with xi
    (moment value of the edge, area its lattice length, genus 0); every
    other vertex is an isolated fixed point whose weights are the
    pairings of xi with the two primitive edge directions leaving it;
    edges with |pairing| = k >= 2 carry Z_k isotropy.
    """
    if not isinstance(xi, CircleWeight):
        xi = CircleWeight(tuple(xi))
    if not poly.is_delzant():
        raise ValueError("polygon is not Delzant")
    a, b = xi.xi

    def pair(p) -> Fraction:
        return a * Fraction(p[0]) + b * Fraction(p[1])

    vs = poly.vertices
    n = len(vs)
    fat = []
    zk = []
    on_fixed_edge = [False] * n
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        d = primitive_direction((q[0] - p[0], q[1] - p[1]))
        k = a * d[0] + b * d[1]
        if k == 0:
            fat.append((pair(p), lattice_length(p, q), 0))
            on_fixed_edge[i] = True
            on_fixed_edge[(i + 1) % n] = True
        elif abs(k) >= 2:
            lo, hi = sorted((pair(p), pair(q)))
            zk.append((lo, hi, abs(k)))
    isolated = []
    for i in range(n):
        if on_fixed_edge[i]:
            continue
        d1, d2 = poly.edge_directions_at(i)
        w = (a * d1[0] + b * d1[1], a * d2[0] + b * d2[1])
        isolated.append((pair(vs[i]), w))
    return _canonical(fat, isolated, zk)


# ---------------------------------------------------------------------------
# the circle actions of the non-toric strata

def sphere_blowup_graph(n: int, s: Shape) -> KarshonGraph:
    """Graph of the circle action generated by a_n: take the pentagon's
    subcircle fixing its latest exceptional sphere pointwise (area c1
    for even n, 1-c1 for odd n, always the chopped edge of inward normal
    (1,1) sitting at the minimum moment value) and blow up an interior
    point of that sphere with capacity c2.

    The surgery subtracts c2 from the fixed sphere's area and adds an
    isolated fixed point at moment distance c2 above it with weights
    (-1, +1).
    """
    sphere_area = s.c1 if n % 2 == 0 else 1 - s.c1
    if s.c2 >= sphere_area:
        raise ValueError(
            f"interior blow-up needs c2 < {'c1' if n % 2 == 0 else '1-c1'}"
        )
    penta = blowup_polygon(n, s)
    g = karshon_graph(penta, CircleWeight((1, 1)))
    if (Fraction(0), Fraction(sphere_area), 0) not in g.fat_vertices:
        raise AssertionError("pentagon fixed sphere not at the minimum moment value")
    fat = [
        (m, a - s.c2 if (m == 0 and a == sphere_area) else a, genus)
        for m, a, genus in g.fat_vertices
    ]
    isolated = list(g.isolated_points) + [(Fraction(s.c2), (-1, 1))]
    return _canonical(fat, isolated, list(g.zk_edges))


# ---------------------------------------------------------------------------
# identification table

Expr = dict[str, int]


def _expr(**coeffs: int) -> Expr:
    return {k: v for k, v in coeffs.items() if v}


def generator_expression(n: int, which, k_override: int | None = None) -> Expr:
    """Expression of a torus generator (n, i, "x"|"y") or circle
    generator (n, "a") through the basis (x0, y0, x1, y1, z, t)."""
    if which == "a":
        if n == 0:
            return _expr(y1=1)
        if n % 2 == 1:
            k = (n + 1) // 2
            return _expr(t=k * k, x1=-k * k, z=1)
        k = n // 2
        return _expr(t=k * (k + 1), x1=-k * (k + 1), y1=1)
    i, comp = which
    if n == 0:
        table0 = {
            (1, "x"): _expr(x0=1), (1, "y"): _expr(y0=1),
            (2, "x"): _expr(x1=1), (2, "y"): _expr(y0=1),
            (3, "x"): _expr(x1=1), (3, "y"): _expr(x1=1, y1=1),
            (4, "x"): _expr(z=1, y1=-1), (4, "y"): _expr(z=1),
            (5, "x"): _expr(x0=1), (5, "y"): _expr(z=1),
        }
        return table0[(i, comp)]
    if n % 2 == 1:
        k = (n + 1) // 2
        odd = {
            (1, "x"): _expr(y0=1, x0=-k),
            (1, "y"): _expr(t=k, x1=1 - k, x0=k, y0=-1),
            (2, "x"): _expr(y0=1, x1=-k),
            (2, "y"): _expr(t=k, x0=1, y0=-1),
            (3, "x"): _expr(z=1, x0=-k),
            (3, "y"): _expr(t=k, x1=-k, x0=k + 1, z=-1),
            (4, "x"): _expr(y1=k, z=1 - k),
            (4, "y"): _expr(t=k, x1=-k, z=k, y1=-(k + 1)),
            (5, "x"): _expr(y1=1, x1=1 - k),
            (5, "y"): _expr(t=k, y1=-1),
        }
        return odd[(i, comp)]
    k = n // 2
    even = {
        (1, "x"): _expr(t=k, x1=-k, x0=-1),
        (1, "y"): _expr(x1=k, y0=1),
        (2, "x"): _expr(t=k, x1=-k - 1),
        (2, "y"): _expr(x0=k, y0=1),
        (3, "x"): _expr(t=k, x1=-k - 1),
        (3, "y"): _expr(x1=k + 1, y1=1),
        (4, "x"): _expr(t=k, x1=-k, y1=1, z=-1),
        (4, "y"): _expr(z=k + 1, y1=-k),
        (5, "x"): _expr(t=k, x1=-k, x0=-1),
        (5, "y"): _expr(x0=k, z=1),
    }
    return even[(i, comp)]


def identification_table(max_k: int) -> list[tuple[tuple, Expr]]:
    """The full table of torus and circle generators through the basis,
    for n = 0 and both parities at 1 <= k <= max_k."""
    out: list[tuple[tuple, Expr]] = []
    for i in range(1, 6):
        for comp in ("x", "y"):
            out.append(((0, i, comp), generator_expression(0, (i, comp))))
    out.append(((0, "a"), generator_expression(0, "a")))
    for k in range(1, max_k + 1):
        for n in (2 * k - 1, 2 * k):
            for i in range(1, 6):
                for comp in ("x", "y"):
                    out.append(((n, i, comp), generator_expression(n, (i, comp))))
            out.append(((n, "a"), generator_expression(n, "a")))
    return out


def _expr_sub(a: Expr, b: Expr) -> Expr:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def resolve_circle(expr: Expr, max_n: int = 6) -> list[tuple[int, int, tuple[int, int]]]:
    """All realizations of an integer expression over the basis as a
    primitive subcircle alpha*x_{n,i} + beta*y_{n,i} of one of the tori
    with n <= max_n.  Returns (n, i, (alpha, beta)) triples."""
    hits = []
    for n in range(0, max_n + 1):
        for i in range(1, 6):
            ex = generator_expression(n, (i, "x"))
            ey = generator_expression(n, (i, "y"))
            sol = _solve_two(ex, ey, expr)
            if sol is None:
                continue
            alpha, beta = sol
            if alpha.denominator != 1 or beta.denominator != 1:
                continue
            alpha, beta = int(alpha), int(beta)
            if gcd(abs(alpha), abs(beta)) != 1:
                continue
            hits.append((n, i, (alpha, beta)))
    return hits


def _solve_two(ex: Expr, ey: Expr, target: Expr):
    # solve alpha*ex + beta*ey == target over Q, or None
    keys = sorted(set(ex) | set(ey) | set(target))
    rows = [(Fraction(ex.get(k, 0)), Fraction(ey.get(k, 0)), Fraction(target.get(k, 0))) for k in keys]
    pivot = None
    for r1 in range(len(rows)):
        for r2 in range(r1 + 1, len(rows)):
            det = rows[r1][0] * rows[r2][1] - rows[r1][1] * rows[r2][0]
            if det:
                pivot = (r1, r2, det)
                break
        if pivot:
            break
    if pivot is None:
        return None
    r1, r2, det = pivot
    alpha = (rows[r1][2] * rows[r2][1] - rows[r1][1] * rows[r2][2]) / det
    beta = (rows[r1][0] * rows[r2][2] - rows[r1][2] * rows[r2][0]) / det
    for a, b, t in rows:
        if alpha * a + beta * b != t:
            return None
    return alpha, beta


# ---------------------------------------------------------------------------
# relation verification


class UnrealizableCircle(ValueError):
    pass


def circle_graph(side, s: Shape) -> KarshonGraph:
    """Graph of one side of a relation.

    A side is ("T", i, n, (alpha, beta)) naming a primitive subcircle of
    a torus, ("a", n) naming the circle generator of a non-toric
    stratum, or a plain expression dict over the basis, which is then
    resolved through the identification table.
    """
    if isinstance(side, dict):
        hits = resolve_circle(side, max_n=2 * s.ell + 2)
        if not hits:
            raise UnrealizableCircle(
                f"expression {side} is not a primitive subcircle of any torus with n <= {2 * s.ell + 2}"
            )
        for n, i, xi in hits:
            try:
                return karshon_graph(t_polygon(i, n, s), xi)
            except Exception:
                continue
        raise UnrealizableCircle(
            f"no torus realizing {side} is admissible at shape {s.to_json()}"
        )
    tag = side[0]
    if tag == "a":
        return sphere_blowup_graph(side[1], s)
    if tag == "T":
        _, i, n, xi = side
        return karshon_graph(t_polygon(i, n, s), xi)
    raise ValueError(f"unrecognized circle spec {side!r}")


def verify_relation(lhs, rhs, s: Shape) -> bool:
    """True iff the two circles have identical graphs at the shape,
    which certifies conjugacy and hence equality in the fundamental
    group of the (connected) symplectomorphism group."""
    return circle_graph(lhs, s) == circle_graph(rhs, s)


def basic_relations() -> list[tuple[str, object, object]]:
    """Named spot-check identifications between circles in different
    toric structures (each side realizable for mu > 1)."""
    return [
        ("x_{1,4} = y1", ("T", 4, 1, (1, 0)), ("T", 4, 0, (-1, 1))),
        ("x_{1,5} = y1", ("T", 5, 1, (1, 0)), ("T", 4, 0, (-1, 1))),
        ("x_{1,1} = y0 - x0", ("T", 1, 1, (1, 0)), ("T", 1, 0, (-1, 1))),
        ("x_{1,2} = y0 - x1", ("T", 2, 1, (1, 0)), ("T", 2, 0, (-1, 1))),
        ("a_0 = y1", ("a", 0), ("T", 4, 0, (-1, 1))),
        ("a_1 = 2x_{1,3} + y_{1,3}", ("a", 1), ("T", 3, 1, (2, 1))),
        ("a_1 = 2x_{1,4} + y_{1,4}", ("a", 1), ("T", 4, 1, (2, 1))),
        ("a_2 = 2x_{2,3} + y_{2,3}", ("a", 2), ("T", 3, 2, (2, 1))),
        ("a_2 = 2x_{2,4} + y_{2,4}", ("a", 2), ("T", 4, 2, (2, 1))),
    ]
