"""The acceptance suite: every headline computation re-run with its
stated tolerance (always: exact equality) and time bound.

Each criterion returns a report dict; `run_all` executes all ten and is
what the `verify-all` subcommand wraps.  The suite needs no network and
no external state; random sampling is seeded and deterministic.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from x3top.cohomology import (
    bg_infinity_ring,
    classifying_ring,
    induction_identity_check,
    mu1_ring,
    psi_map,
    r3_ring,
    stated_kernel,
    tautological_transpose_check,
    verify_kernel,
)
from x3top.configs import config_type, enumerate_configurations, validate_config
from x3top.core.series import (
    PowerSeries,
    loop_space_dims,
    loop_space_ranks,
    pbw_extract,
    pbw_extract_log,
)
from x3top.homology import (
    HClass,
    InadmissibleShape,
    Shape,
    adjunction_genus,
    area,
    chern,
    d_class,
    enumerate_d_strata,
    exceptional_classes,
    intersect,
    k_index,
    p0_classes,
    strata_count,
)
from x3top.inflation import InflationBoundError, TABLES, limit_check, run_table
from x3top.karshon import basic_relations, verify_relation
from x3top.lie import (
    CaseId,
    case_for_shape,
    enveloping_dims,
    expected_pi_ranks,
    pi_ranks,
    presentation_for,
)
from x3top.polygons import t_polygon

#: the degree-6 loop-space exponent: the value 352 sometimes quoted for
#: it fails the round-trip and logarithmic extractions, both of which
#: give 55; the toolkit uses 55 throughout.
R6_CONSISTENT = 55
R6_QUOTED_ELSEWHERE = 352


def _crit(idx, name, fn, bound_seconds):
    t0 = time.monotonic()
    try:
        passed, details = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = time.monotonic() - t0
    return {
        "id": idx,
        "name": name,
        "passed": bool(passed) and elapsed < bound_seconds,
        "elapsed_seconds": round(elapsed, 3),
        "bound_seconds": bound_seconds,
        "details": details,
    }


def _random_generic_shapes(per_range: int, seed: int = 20240) -> list[Shape]:
    rng = random.Random(seed)
    out: list[Shape] = []
    want = {1: per_range, 2: per_range, 3: per_range, 4: per_range}
    while any(v > 0 for v in want.values()):
        den = rng.randint(5, 60)
        c2 = Fraction(rng.randint(1, den // 3), den)
        c1 = Fraction(rng.randint(1, (2 * den) // 3), den)
        if not (0 < c2 < c1 and c1 + c2 < 1):
            continue
        ell = rng.randint(0, 4)
        lden = rng.randint(2, 60)
        lam = Fraction(rng.randint(1, lden), lden)
        if ell == 0 and lam != 1:
            continue
        try:
            s = Shape(ell + lam, c1, c2)
        except InadmissibleShape:
            continue
        if s.lam != lam:
            continue
        r = s.lam_range()
        if want.get(r, 0) > 0:
            want[r] -= 1
            out.append(s)
    return out


# ---------------------------------------------------------------------------


def criterion_1_pbw():
    series = loop_space_dims(8)
    odd, even = pbw_extract(series)
    got = {n: int((odd | even)[n]) for n in range(1, 7)}
    expected = {1: 3, 2: 5, 3: 5, 4: 10, 5: 24}
    ok = all(got[n] == expected[n] for n in expected)
    log_r = pbw_extract_log(series)
    r6_log = log_r[6]
    ok = ok and r6_log == got[6] == R6_CONSISTENT
    details = {
        "r": got,
        "r6_by_division": got[6],
        "r6_by_log_oracle": int(r6_log),
        "r6_note": (
            f"both extractions give {R6_CONSISTENT}; the figure "
            f"{R6_QUOTED_ELSEWHERE} often quoted for this exponent is "
            f"inconsistent with the recurrence and is not used"
        ),
    }
    return ok, details


def criterion_2_mu1():
    dims = enveloping_dims(presentation_for(CaseId.MU1), 6)
    h = loop_space_dims(6)
    ok = dims[0] == 1 and all(dims[n] == 5 * h[n - 1] for n in range(1, 7))
    ranks = pi_ranks(CaseId.MU1, maxdeg=6)
    r = loop_space_ranks(6)
    ok = ok and ranks[0] == 5 and all(ranks[n - 1] == r[n] for n in range(2, 7))
    return ok, {"enveloping_dims": dims, "ranks": ranks}


def criterion_3_ranks():
    details = {}
    ok = True
    # stabilizer regimes: the closed-form table must match the
    # presentations exactly through degree 6 at ell = 1
    s2_shape = Shape(Fraction(3, 2), Fraction(3, 5), Fraction(1, 4))  # lam=1/2 in (c2,c1]
    s4b_shape = Shape(Fraction(2), Fraction(3, 10), Fraction(1, 5))  # lam=1 > c1+c2
    pairs = [
        (CaseId.S2, 1, s2_shape),
        (CaseId.S4B, 1, s4b_shape),
    ]
    for case, ell, shape in pairs:
        got = pi_ranks(case, ell, 6)
        want = expected_pi_ranks(shape, 6)
        details[case.value] = {"ranks": got, "expected": want}
        ok = ok and got == want and case_for_shape(shape) == (case, ell)
    # the remaining ell = 1 regime has no closed form; its ranks are
    # checked against the classifying-space ring through the exact
    # duality sum_{j} dims[j] * (-1)^(d-j) * ring[2(d-j)] = 0
    s1_ranks = pi_ranks(CaseId.S1, 1, 6)
    s1_dims = enveloping_dims(presentation_for(CaseId.S1, 1), 6)
    ring = classifying_ring("a", 1).hilbert(12)
    dual_ok = _koszul_dual_check(s1_dims, ring)
    details["S1"] = {
        "ranks": s1_ranks,
        "dual_route": "enveloping dims are degree-wise inverse to the ring series",
        "dual_ok": dual_ok,
        "note": (
            "ranks 6, 7 at degrees 1, 2 are forced by the two extra degree-4 "
            "ring relations; beyond degree 2 the ranks grow (8, 18, 48, 124) "
            "and no bump-table applies in this regime"
        ),
    }
    ok = ok and dual_ok and s1_ranks[:2] == [6, 7]
    # same duality for the other quadratic rings
    for case, rng_id in ((CaseId.MU1, None), (CaseId.S2, "b"), (CaseId.GINF, None)):
        dims = enveloping_dims(presentation_for(case, 1 if case == CaseId.S2 else 0), 6)
        if case == CaseId.MU1:
            ring_dims = mu1_ring().hilbert(12)
        elif case == CaseId.GINF:
            ring_dims = bg_infinity_ring().hilbert(12)
        else:
            ring_dims = classifying_ring(rng_id, 1).hilbert(12)
        ok = ok and _koszul_dual_check(dims, ring_dims)
    return ok, details


def _koszul_dual_check(alg_dims: list[int], ring_dims_by_weight: list[int]) -> bool:
    # sum_{j<=d} alg[j] * (-1)^(d-j) * ring[2(d-j)] == 0 for 1 <= d <= maxdeg
    maxdeg = min(len(alg_dims) - 1, (len(ring_dims_by_weight) - 1) // 2)
    for d in range(1, maxdeg + 1):
        acc = 0
        for j in range(d + 1):
            acc += alg_dims[j] * ((-1) ** (d - j)) * ring_dims_by_weight[2 * (d - j)]
        if acc != 0:
            return False
    return True


def criterion_4_hilbert():
    bg = bg_infinity_ring().hilbert(12)
    details = {"bginf": bg}
    ok = True
    for ell in (1, 2):
        for rng_id in "abcd":
            ring = classifying_ring(rng_id, ell)
            dims = ring.hilbert(12)
            surj = all(dims[d] <= bg[d] for d in range(13))
            degs = ring.minimal_relation_degrees(4 * ell + 6)
            expected = [4] * 5 + {
                "a": [4 * ell, 4 * ell],
                "b": [4 * ell],
                "c": [4 * ell + 2, 4 * ell + 2],
                "d": [4 * ell + 2],
            }[rng_id]
            deg_ok = sorted(degs) == sorted(expected)
            details[f"case-{rng_id}-ell{ell}"] = {
                "dims": dims,
                "surjectivity_shadow": surj,
                "minimal_degrees": degs,
                "minimal_degrees_ok": deg_ok,
            }
            ok = ok and surj and deg_ok
    return ok, details


def criterion_5_kernels():
    ok = True
    details = {}
    for kind in ("zero", "odd1", "odd2", "even1", "even2"):
        ks = [0] if kind == "zero" else [1, 2, 3, 4]
        for k in ks:
            rep = verify_kernel(psi_map(kind, k), stated_kernel(kind, k))
            tp = tautological_transpose_check(kind, k)
            details[f"{kind}-k{k}"] = {"kernel": rep["passed"], "transpose": tp}
            ok = ok and rep["passed"] and tp
    for ell in (1, 2, 3, 4):
        holds, residual = induction_identity_check(ell)
        details[f"induction-ell{ell}"] = holds
        ok = ok and holds
    return ok, details


def criterion_6_strata(quick=False):
    shapes = _random_generic_shapes(12 if quick else 50)
    ok = True
    checked = 0
    for s in shapes:
        n = strata_count(s)
        entries = enumerate_d_strata(s)
        if len(entries) != n:
            ok = False
            break
        cfgs = enumerate_configurations(s)
        strata_touched = {t.stratum_index() for t in cfgs}
        if strata_touched != set(range(1, n + 1)):
            ok = False
            break
        # per-m filter consistency
        for t in cfgs:
            if area(s, t.defining_class()) <= 0:
                ok = False
        checked += 1
    mu1_types = [t.type_id for t in enumerate_configurations(Shape(1, Fraction(3, 10), Fraction(1, 5)))]
    ok = ok and mu1_types == [1, 2, 3, 4, 5, 6]
    return ok, {"shapes_checked": checked, "mu1_types": mu1_types}


def criterion_7_curve_lemmas():
    p0 = p0_classes()
    expected_p0 = {
        HClass(0, 1, 0, 0), HClass(0, 1, 1, 0), HClass(0, 1, 0, 1), HClass(0, 1, 1, 1),
        HClass(0, 0, -1, 0), HClass(0, 0, 0, -1), HClass(0, 0, -1, 1),
    }
    exc = exceptional_classes()
    expected_exc = {
        HClass(0, 0, 0, -1), HClass(0, 0, -1, 0), HClass(0, 1, 1, 0),
        HClass(0, 1, 0, 1), HClass(1, 0, 1, 0), HClass(1, 0, 0, 1),
    }
    ok = set(p0) == expected_p0 and set(exc) == expected_exc
    for i in range(-12, 13):
        c = d_class(i)
        square = i // 2 - 1 if i % 2 == 0 else (i - 1) // 2
        ch = i // 2 + 1 if i % 2 == 0 else (i + 1) // 2 + 1
        kk = Fraction(i, 2) if i % 2 == 0 else Fraction(i + 1, 2)
        ok = ok and intersect(c, c) == square and chern(c) == ch
        ok = ok and adjunction_genus(c) == 0 and k_index(c) == kk
    return ok, {"p0": [str(c) for c in p0], "exceptional": [str(c) for c in exc]}


def criterion_8_toric(quick=False):
    shapes = [
        Shape(Fraction(17, 10), Fraction(3, 10), Fraction(1, 5)),
        Shape(Fraction(19, 4), Fraction(1, 3), Fraction(1, 4)),
        Shape(Fraction(24, 5), Fraction(2, 5), Fraction(1, 5)),
    ]
    pairing = {
        0: {1: 1, 2: 3, 3: 5, 4: 4, 5: 2},
        "odd": {1: 10, 2: 12, 3: 11, 4: 9, 5: 7},
        "even": {1: 16, 2: 18, 3: 17, 4: 15, 5: 13},
    }
    ok = True
    polys_checked = 0
    for s in shapes:
        for n in range(0, 5):
            for i in range(1, 6):
                try:
                    poly = t_polygon(i, n, s)
                except InadmissibleShape:
                    continue
                if not poly.is_delzant():
                    ok = False
                if n == 0:
                    tid, m = pairing[0][i], 0
                else:
                    tid = pairing["odd" if n % 2 else "even"][i]
                    m = (n + 1) // 2 if n % 2 else n // 2
                cfg = config_type(tid, m)
                lens = sorted(poly.edge_lengths())
                areas = sorted(area(s, c) for c in cfg.member_classes)
                if lens != areas:
                    ok = False
                polys_checked += 1
    must_hold = [r for r in basic_relations() if r[0].startswith(("x_{1,4}", "x_{1,1}", "a_0"))]
    rel_results = {}
    for name, lhs, rhs in (basic_relations() if not quick else must_hold):
        oks = []
        for s in shapes:
            try:
                oks.append(verify_relation(lhs, rhs, s))
            except (InadmissibleShape, ValueError, AssertionError):
                oks.append(None)  # torus absent at this shape
        rel_results[name] = oks
        if not all(o is True for o in oks if o is not None) or not any(o is True for o in oks):
            ok = False
    return ok, {"polygons_checked": polys_checked, "relations": rel_results}


def criterion_9_inflation(quick=False):
    rng = random.Random(71)
    samples = 10 if quick else 100
    ok = True
    details = {}
    shape_pool = _random_generic_shapes(80, seed=5151)
    for key in sorted(TABLES):
        spec = TABLES[key]
        pool = [s for s in shape_pool if spec.lam_range(s)]
        if not pool:
            ok = False
            details[str(key)] = "no admissible shapes sampled"
            continue
        fails = 0
        for _ in range(samples):
            s = rng.choice(pool)
            cap = spec.b_cap(s)
            if cap is None:
                b = Fraction(rng.randint(0, 500), rng.randint(1, 50))
            else:
                b = cap * Fraction(rng.randint(0, 99), 100)
            rep = run_table(*key, s, b)
            if not rep["passed"]:
                fails += 1
        lim_ok = limit_check(*key, rng.choice(pool))["passed"]
        # Buse boundary: where a cap exists, the script must reject just above it
        boundary_ok = True
        for s in pool:
            cap = spec.b_cap(s)
            if cap is None:
                continue
            try:
                run_table(*key, s, cap + Fraction(1, 1000))
                boundary_ok = False
            except (InflationBoundError, InadmissibleShape):
                pass
            break
        details[str(key)] = {"failures": fails, "limit": lim_ok, "boundary": boundary_ok}
        ok = ok and fails == 0 and lim_ok and boundary_ok
    return ok, details


def criterion_10_boundary_cases():
    ok = True
    details = {}
    routes = [
        (Shape(Fraction(3, 2), Fraction(1, 4), Fraction(1, 4)), CaseId.R1),
        (Shape(Fraction(3, 2), Fraction(3, 5), Fraction(2, 5)), CaseId.R2),
        (Shape(Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)), CaseId.R3),
        (Shape(1, Fraction(1, 2), Fraction(1, 2)), CaseId.R3),
    ]
    for s, want in routes:
        got, _ = case_for_shape(s)
        details[f"{s.to_json()['mu']},{s.to_json()['c1']},{s.to_json()['c2']}"] = got.value
        ok = ok and got == want
    r3_shape = Shape(1, Fraction(1, 2), Fraction(1, 2))
    cfgs = enumerate_configurations(r3_shape)
    ok = ok and [t.type_id for t in cfgs] == [1]
    ring = r3_ring(ell=0)
    free_dims = [1, 0, 2, 0, 3, 0, 4]
    ok = ok and ring.hilbert(6) == free_dims and len(ring.ideal_gens) == 0
    details["r3-mu1-configs"] = [t.type_id for t in cfgs]
    details["r3-mu1-ring-dims"] = ring.hilbert(6)
    return ok, details


def run_all(quick: bool = False) -> dict:
    criteria = [
        _crit(1, "loop-space exponents by division and logarithm", criterion_1_pbw, 1.0),
        _crit(2, "five-generator enveloping dimensions and ranks", criterion_2_mu1, 60.0),
        _crit(3, "six-generator ranks against the closed-form table", criterion_3_ranks, 120.0),
        _crit(4, "ring dimensions and minimal relation degrees", criterion_4_hilbert, 30.0),
        _crit(5, "restriction-map kernels and the induction identity", criterion_5_kernels, 5.0),
        _crit(6, "stratum counts against configuration enumeration", lambda: criterion_6_strata(quick), 5.0),
        _crit(7, "fiber-degree and exceptional class enumerations", criterion_7_curve_lemmas, 1.0),
        _crit(8, "hexagon Delzant tests, areas and circle identities", lambda: criterion_8_toric(quick), 30.0),
        _crit(9, "deformation tables with bounds and limits", lambda: criterion_9_inflation(quick), 60.0),
        _crit(10, "boundary-case routing and the equal-capacity ring", criterion_10_boundary_cases, 1.0),
    ]
    return {
        "passed": all(c["passed"] for c in criteria),
        "quick": quick,
        "criteria": criteria,
    }
