"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible even under
output capture) before asserting.
"""

import random

import pytest

from hilbcurves import reference
from hilbcurves.bounds import LinearSeries, chi_expected, pi, pi_1, residual_series
from hilbcurves.cohomology import h_hirzebruch, h_plane, h_quadric, scrollar_invariant
from hilbcurves.hilbert import analyze, moduli_image_dim, scroll_sublocus
from hilbcurves.lattice import (BlowupClass, EllipticRuledClass, HirzebruchClass, QuadricClass,
                                ScrollClass, arithmetic_genus, blown_plane, hirzebruch, intersect,
                                quadric)
from hilbcurves.surfaces import (CONTRACTED_CURVE, VERY_AMPLE_CANDIDATE, contraction_obstruction,
                                 del_pezzo_classes, elliptic_cone_classes, fixed_part,
                                 scroll_classes)
from hilbcurves.zeroscheme import (PlanePoint, ZeroScheme, h_ideal, plane_model_genus,
                                   random_general_configuration, random_point, residual_line,
                                   trace_degree_line)


@pytest.fixture
def verdict(capsys):
    def report(n, failures):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            detail = "" if not failures else ": " + "; ".join(failures)
            print(f"\ncriterion {n}: {status}{detail}")
        assert not failures, failures
    return report


def _mismatches(pairs):
    return [f"{name}: expected {want!r}, got {got!r}" for name, got, want in pairs if got != want]


def test_criterion_1_castelnuovo_bounds(verdict):
    table = {(15, 5): 18, (15, 6): 13, (13, 4): 18, (12, 4): 15, (16, 7): 12, (5, 4): 1, (6, 4): 2}
    verdict(1, _mismatches((f"pi{dr}", pi(*dr), want) for dr, want in table.items()))


def test_criterion_2_second_bound(verdict):
    failures = []
    sb = pi_1(15, 5)
    failures += _mismatches([("pi_1(15,5)", sb.value, 16)])
    if BlowupClass(9, (3, 3, 3, 3)) not in {s.cls for s in sb.attained_by}:
        failures.append("(9;3^4) does not attain pi_1(15,5)")
    sb = pi_1(13, 4)
    failures += _mismatches([("pi_1(13,4)", sb.value, 15)])
    witnesses = {s.cls for s in sb.attained_by}
    if not {BlowupClass(11, (4,) * 5), EllipticRuledClass(4, 3, 13)} <= witnesses:
        failures.append(f"pi_1(13,4) witnesses {sorted(map(str, witnesses))}")
    verdict(2, failures)


def test_criterion_3_cohomology_spot_values(verdict):
    verdict(3, _mismatches([
        ("h1(Q,(0,-3))", h_quadric(0, -3).h1, 2),
        ("h1(F2,-3f)", h_hirzebruch(2, 0, -3).h1, 2),
        ("h1(F2,h)", h_hirzebruch(2, 1, 0).h1, 1),
        ("h0(Q,(2,4))", h_quadric(2, 4).h0, 15),
        ("h0(F2,2h+6f)", h_hirzebruch(2, 2, 6).h0, 15),
    ]))


def test_criterion_4_scrollar_invariants(verdict):
    verdict(4, _mismatches([
        ("F0 (4,7)", scrollar_invariant(0, QuadricClass(4, 7)), (7, 11)),
        ("F2 4h+11f", scrollar_invariant(2, HirzebruchClass(2, 4, 11)), (5, 7)),
    ]))


def test_criterion_5_class_enumeration(verdict):
    scroll = lambda g: {(s.cls.a, s.cls.b) for s in scroll_classes(15, g, 5)}
    dp = {s.cls for s in del_pezzo_classes(13, 15, 15, 4)}
    ell = {(s.cls.a, s.vertex_multiplicity, s.genus) for s in elliptic_cone_classes(13, 4)}
    verdict(5, _mismatches([
        ("scroll g=16", scroll(16), {(3, 3), (5, -5)}),
        ("scroll g=17", scroll(17), set()),
        ("scroll g=18", scroll(18), {(4, -1)}),
        ("del Pezzo s=5", dp, {BlowupClass(9, (3, 3, 3, 3, 2)), BlowupClass(10, (4, 4, 3, 3, 3)),
                               BlowupClass(11, (4, 4, 4, 4, 4))}),
        ("elliptic cone", ell, {(3, 1, 15), (2, 5, 10)}),
    ]))


def test_criterion_6_obstructions(verdict):
    v1 = contraction_obstruction(4, BlowupClass(9, (5, 2, 2, 2)), BlowupClass(4, (3, 1, 1, 1)))
    v2 = contraction_obstruction(5, BlowupClass(11, (4,) * 5), BlowupClass(5, (2,) * 5))
    v3 = contraction_obstruction(4, BlowupClass(8, (3, 2, 2, 2)), BlowupClass(3, (1,) * 4))
    verdict(6, _mismatches([
        ("(9;5,2^3)", (v1.status, v1.witness), (CONTRACTED_CURVE, BlowupClass(1, (1, 1, 0, 0)))),
        ("(11;4^5)", (v2.status, v2.witness), (CONTRACTED_CURVE, BlowupClass(2, (1,) * 5))),
        ("(8;3,2^3)", v3.status, VERY_AMPLE_CANDIDATE),
        ("fixed part F1 3h+2f", fixed_part(1, HirzebruchClass(1, 3, 2)),
         (HirzebruchClass(1, 1, 0), HirzebruchClass(1, 2, 2))),
    ]))


def test_criterion_7_dimension_table(verdict):
    rows = {g: analyze(15, g, 5) for g in (13, 15, 16, 17, 18)}
    verdict(7, _mismatches([
        ("g=13 dims", set(rows[13].dims), {66, 68}),
        ("g=15 dims", rows[15].dims, [64]),
        ("g=16 dims", set(rows[16].dims), {68, 64, 65}),
        ("g=17 verdict", (rows[17].verdict, rows[17].dims), (reference.EMPTY, [])),
        ("g=18 dims", rows[18].dims, [68]),
        ("chi", [chi_expected(15, g, 5) for g in (13, 15, 16)], [66, 62, 60]),
    ]))


def test_criterion_8_moduli_dims(verdict):
    by_label = lambda g: {c.label: c for c in analyze(15, g, 5).components}
    g16 = by_label(16)
    trigonal = g16["scroll 3H+3L"]
    # the trigonal component splits by the Hirzebruch model: F_0 (general) and F_2
    special = scroll_sublocus(ScrollClass(5, 3, 3), 2, 15, 16)
    fiber = reference.MODULI_FIBERS[(15, 16, 5, "scroll 3H+3L")]
    split = {trigonal.moduli_image_dim, moduli_image_dim(special, fiber)}
    verdict(8, _mismatches([
        ("g=18", by_label(18)["scroll 4H-1L"].moduli_image_dim, 33),
        ("g=16 trigonal split", split, {33, 31}),
        ("g=16 scroll 5H-5L", g16["scroll 5H-5L"].moduli_image_dim, 29),
        ("g=13 projection base", by_label(13)["projection trigonal"].moduli_image_dim, 33),
    ]))


def test_criterion_9_zero_schemes(verdict):
    rng = random.Random(20240915)
    failures = []
    for _ in range(20):
        Z = random_general_configuration(rng)
        got = (h_ideal(Z, 2)[:2], h_ideal(Z, 4)[:2])
        if got != ((0, 0), (9, 0)):
            failures.append(f"{Z.to_json()}: {got}")
    line = ZeroScheme.reduced([PlanePoint(1, k, 3 * k + 1) for k in range(6)])
    failures += _mismatches([("collinear h1(I(4))", h_ideal(line, 4).h1, 1)])
    for _ in range(100):
        Z = ZeroScheme.reduced(list({random_point(rng, 3) for _ in range(rng.randint(1, 8))}))
        form = [rng.randint(-2, 2) for _ in range(3)]
        if not any(form):
            form[0] = 1
        if residual_line(Z, form).degree + trace_degree_line(Z, form) != Z.degree:
            failures.append(f"residual additivity fails for {form}")
    verdict(9, failures)


def _check_bundle(h, chi, dual, name, failures):
    if h.chi != chi:
        failures.append(f"Riemann-Roch {name}: {h} vs chi {chi}")
    if (h.h0, h.h1, h.h2) != (dual.h2, dual.h1, dual.h0):
        failures.append(f"Serre duality {name}: {h} vs {dual}")


def test_criterion_10_property_suites(verdict):
    rng = random.Random(10)
    failures = []
    n = lambda: rng.randint(-25, 25)
    for _ in range(1000):
        e, a, b = rng.randint(0, 6), n(), n()
        L, K = HirzebruchClass(e, a, b), hirzebruch(e).canonical
        _check_bundle(h_hirzebruch(e, a, b), 1 + intersect(L, L - K) // 2,
                      h_hirzebruch(e, -2 - a, -e - 2 - b), f"F_{e}({a},{b})", failures)
    for _ in range(1000):
        a, b = n(), n()
        L, K = QuadricClass(a, b), quadric().canonical
        _check_bundle(h_quadric(a, b), 1 + intersect(L, L - K) // 2,
                      h_quadric(-2 - a, -2 - b), f"Q({a},{b})", failures)
    for _ in range(1000):
        m = n()
        _check_bundle(h_plane(m), (m + 1) * (m + 2) // 2, h_plane(-3 - m), f"P2({m})", failures)

    for _ in range(100):
        g = rng.randint(1, 40)
        d = rng.randint(0, 2 * g - 2)
        r = rng.randint(max(0, d - g + 1), max(0, d - g + 1, d // 2))
        series = LinearSeries(d, r, g)
        if residual_series(residual_series(series)) != series:
            failures.append(f"residual involution fails for {series}")

    for _ in range(500):
        kind = rng.randrange(3)
        if kind == 0:
            e, a, b = rng.randint(0, 6), n(), n()
            got = arithmetic_genus(hirzebruch(e), HirzebruchClass(e, a, b))
            want = h_hirzebruch(e, -a, -b).chi
        elif kind == 1:
            a, b = n(), n()
            got = arithmetic_genus(quadric(), QuadricClass(a, b))
            want = h_quadric(-a, -b).chi
        else:
            deg = rng.randint(2, 20)
            mults = [rng.randint(1, deg - 1) for _ in range(rng.randint(1, 8))]
            got = arithmetic_genus(blown_plane(len(mults)), BlowupClass(deg, tuple(mults)))
            want = plane_model_genus(deg, mults)
        if got != want:
            failures.append(f"adjunction mismatch kind {kind}: {got} vs {want}")
    verdict(10, failures)
