"""Acceptance gate.

One test per criterion; each prints a single pass/fail line on the real
terminal (bypassing capture) and then asserts, so `pytest -v` shows both
the line and the verdict.  Expensive artifacts are memoized at module
scope; each criterion still times the work it is responsible for.
"""

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from descartes_oracle import gasket_bends

from packinglab import (
    QuadExt,
    bends_conjugate,
    bends_vector,
    certify_integral,
    dual_form,
    enumerate_decompositions,
    generate_packing,
    generate_superpacking,
    gram_from_diagram,
    gram_matrix,
    guess_walls,
    inversive_product,
    parse_diagram,
    plane_from_normal_offset,
    q_matrix,
    realize,
    reflection_matrix,
    residue_orbit,
    sphere_from_center_radius,
    verify_realization,
    vinberg_test,
)
from packinglab.fixtures import (
    COX6_DIAGRAM,
    EISENSTEIN_DIAGRAM,
    apollonian_system,
    cuboctahedron_target,
    hexpyr_expected_gram,
    hexpyr_system,
    tetrahedron_target,
)
from packinglab.linalg import identity, mat_mul, transpose

ZERO = QuadExt(0)
ONE = QuadExt(1)

_OCTET = None


def _octet_packing():
    """Apollonian packing to bend 1000, shared across criteria 4, 6, 9."""
    global _OCTET
    if _OCTET is None:
        _OCTET = generate_packing(apollonian_system(), QuadExt(1000), max_word=2000)
    return _OCTET


def _report(capfd, num, label, checks, elapsed, limit=None):
    ok = all(checks.values()) and (limit is None or elapsed < limit)
    with capfd.disabled():
        budget = "" if limit is None else f" / {limit:g}s"
        print(f"acceptance {num} {label}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s{budget})")
    failed = sorted(k for k, v in checks.items() if not v)
    assert not failed, f"failed checks: {failed}"
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.2f}s, budget {limit}s"


def test_criterion_1_hexpyr_gram_reproduction(capfd):
    t0 = time.perf_counter()
    computed = gram_matrix(list(hexpyr_system().walls))
    expected = hexpyr_expected_gram()
    elapsed = time.perf_counter() - t0
    checks = {
        "size": computed.size == 14,
        "entrywise": computed.entries == expected.entries,
    }
    _report(capfd, 1, "hexpyr gram reproduction", checks, elapsed, limit=1.0)


def test_criterion_2_non_arithmeticity_witness(capfd):
    gram = hexpyr_expected_gram()
    t0 = time.perf_counter()
    verdict = vinberg_test(gram)
    elapsed = time.perf_counter() - t0
    i, j = verdict.witness_cycle if verdict.witness_cycle else (-1, -1)
    checks = {
        "non_arithmetic": verdict.non_arithmetic,
        "cycle_length_2": verdict.witness_cycle == (0, 13),
        "through_2_over_sqrt3": gram.entries[i][j] == QuadExt.parse("2/3*sqrt(3)"),
        "product_16_3": verdict.product == QuadExt.parse("16/3"),
        "printed_form": str(verdict) == "NonArithmetic(cycle=(1,14), product=16/3)",
    }
    _report(capfd, 2, "non-arithmeticity witness", checks, elapsed, limit=1.0)


def test_criterion_3_structure_decompositions(capfd):
    t0 = time.perf_counter()
    cox6 = enumerate_decompositions(gram_from_diagram(parse_diagram(COX6_DIAGRAM)))
    eis = enumerate_decompositions(gram_from_diagram(parse_diagram(EISENSTEIN_DIAGRAM)))
    elapsed = time.perf_counter() - t0
    cox6_clusters = [set(d.cluster) for d in cox6]
    eis_singletons = sorted(
        tuple(d.cluster) for d in eis if len(d.cluster) == 1
    )
    checks = {
        "cox6_has_first_wall_cluster": {0} in cox6_clusters,
        "eisenstein_singletons_exact": eis_singletons == [(0,), (2,)],
    }
    _report(capfd, 3, "structure decompositions", checks, elapsed, limit=1.0)


def test_criterion_4_apollonian_oracle_at_bound_1000(capfd):
    t0 = time.perf_counter()
    packing = _octet_packing()
    report = certify_integral(packing)
    got = Counter(b.rat for b in packing.bends_list())
    want = Counter(gasket_bends(Fraction(1000)))
    elapsed = time.perf_counter() - t0
    checks = {
        "saturated": packing.saturated,
        "integral": report.integral,
        "bends_match_oracle": got == want,
    }
    _report(capfd, 4, "apollonian bends vs oracle", checks, elapsed, limit=30.0)


def test_criterion_5_integral_not_superintegral(capfd):
    system = hexpyr_system()
    t0 = time.perf_counter()
    packing = generate_packing(system, QuadExt(60), max_word=400)
    packing_report = certify_integral(packing)
    superpacking = generate_superpacking(system, QuadExt(30), max_word=3)
    super_report = certify_integral(superpacking)
    elapsed = time.perf_counter() - t0
    checks = {
        "packing_saturated": packing.saturated,
        "packing_integral": packing_report.integral,
        "superpacking_witness": not super_report.integral and len(super_report.witnesses) > 0,
    }
    _report(capfd, 5, "integral but not superintegral", checks, elapsed, limit=60.0)


def test_criterion_6_dual_form_cone(capfd):
    t0 = time.perf_counter()
    system = apollonian_system()
    gram = gram_matrix(system.cluster_walls())
    form = dual_form(gram)
    rational = all(e.is_rational() for row in form.entries for e in row)
    inverse_ok = mat_mul(form.entries, gram.entries) == identity(4)

    packing = _octet_packing()
    n = 110
    vecs = [s.vector for s in packing.spheres[:n]]
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if inversive_product(vecs[i], vecs[j]) == ONE:
                adj[i][j] = adj[j][i] = True
    quadruples = []
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i][j]:
                continue
            for k in range(j + 1, n):
                if not (adj[i][k] and adj[j][k]):
                    continue
                for l in range(k + 1, n):
                    if adj[i][l] and adj[j][l] and adj[k][l]:
                        quadruples.append((i, j, k, l))
    on_cone = 0
    for quad in quadruples:
        b = [vecs[t].bend for t in quad]
        val = sum(
            (b[r] * form.entries[r][c] * b[c] for r in range(4) for c in range(4)),
            ZERO,
        )
        if val == ZERO:
            on_cone += 1
    elapsed = time.perf_counter() - t0
    checks = {
        "form_rational": rational,
        "form_is_inverse": inverse_ok,
        "at_least_100_quadruples": len(quadruples) >= 100,
        "all_on_cone": on_cone == len(quadruples),
    }
    _report(capfd, 6, "dual form cone", checks, elapsed, limit=10.0)


def _random_rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_exact(rng, d):
    if d == 0:
        return QuadExt(_random_rational(rng))
    return QuadExt(_random_rational(rng)) + QuadExt.sqrt(d) * _random_rational(rng)


def _random_wall(rng, d):
    if d == 0 and rng.random() < 0.1:
        nx, ny = rng.choice([(0, 1), (1, 0), (Fraction(3, 5), Fraction(4, 5))])
        return plane_from_normal_offset((nx, ny), _random_rational(rng))
    while True:
        r = _random_exact(rng, d)
        if r != ZERO:
            return sphere_from_center_radius(
                (_random_exact(rng, d), _random_exact(rng, d)), r
            )


def test_criterion_7_invariance_suite(capfd):
    rng = random.Random(20260815)
    q = q_matrix(2)
    eye = identity(4)
    failures = 0
    checks_run = 0
    t0 = time.perf_counter()
    for round_no in range(2500):
        d = (0, 0, 0, 0, 2, 3, 5)[round_no % 7]
        s = _random_wall(rng, d)
        u = _random_wall(rng, d)
        v = _random_wall(rng, d)
        m = reflection_matrix(s)
        results = (
            inversive_product(m.apply(u), m.apply(v)) == inversive_product(u, v),
            inversive_product(m.apply(u), m.apply(s)) == inversive_product(u, s),
            mat_mul(m.entries, m.entries) == eye,
            mat_mul(mat_mul(m.entries, q), transpose(m.entries)) == q,
        )
        checks_run += len(results)
        failures += sum(1 for r in results if not r)
    elapsed = time.perf_counter() - t0
    checks = {
        "ten_thousand_checks": checks_run == 10_000,
        "zero_failures": failures == 0,
    }
    _report(capfd, 7, "reflection invariance suite", checks, elapsed)


def test_criterion_8_geometrize_pipeline(capfd):
    t0 = time.perf_counter()
    ok = {}
    for label, spec, d in (
        ("tetrahedron", tetrahedron_target(), 0),
        ("cuboctahedron", cuboctahedron_target(), 6),
    ):
        numeric = realize(spec, seed=0)
        walls = guess_walls(numeric, d, 64, 1e-18)
        ok[label] = verify_realization(walls, spec).ok
    elapsed = time.perf_counter() - t0
    _report(capfd, 8, "geometrize pipeline", ok, elapsed, limit=60.0)


def test_criterion_9_local_global_soundness(capfd):
    t0 = time.perf_counter()
    system = apollonian_system()
    cluster = system.cluster_walls()
    gens = [bends_conjugate(reflection_matrix(w), cluster) for w in system.cocluster_walls()]
    start = bends_vector(cluster)
    bends = [int(b.rat) for b in _octet_packing().bends_list()]
    violations = 0
    for modulus in (2, 3, 8, 24):
        orbit = residue_orbit(gens, start, modulus)
        violations += sum(1 for b in bends if not orbit.admits(b))
    elapsed = time.perf_counter() - t0
    checks = {"zero_violations": violations == 0}
    _report(capfd, 9, "local-global soundness", checks, elapsed)
