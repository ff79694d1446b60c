import json

import pytest
from hypothesis import given, strategies as st

from hilbcurves import reference
from hilbcurves.bounds import aut_dim_projective, chi_expected
from hilbcurves.hilbert import (ClassificationTable, analyze, classification_table,
                                curve_moduli_dim, elliptic_cone_family_dim, family_dim_delpezzo,
                                family_dim_scroll, grassmannian_dim, moduli_image_dim,
                                row_markdown, scroll_family_dim, scroll_ideal_h1,
                                scroll_sublocus, severi_family_dim, severi_plane_dim,
                                table_markdown)
from hilbcurves.lattice import BlowupClass, QuadricClass, ScrollClass, quadric


def test_scroll_family_dims():
    assert scroll_family_dim(5) == 29
    assert [family_dim_scroll(5, *ab) for ab in ((3, 3), (5, -5), (4, -1))] == [68, 64, 68]
    with pytest.raises(ValueError, match="empty"):
        family_dim_scroll(5, 0, -3)


def test_scroll_family_dim_is_orbit_dimension():
    # balanced scrolls are a single PGL(r+1) orbit with a 6-dimensional stabiliser (F_0 or F_1)
    for r in range(4, 12):
        assert scroll_family_dim(r) == aut_dim_projective(r) - 6


def test_delpezzo_and_cone_dims():
    assert family_dim_delpezzo(5, BlowupClass(9, (3, 3, 3, 3))) == 65
    assert family_dim_delpezzo(5, BlowupClass(8, (3, 2, 2, 2))) == 64
    with pytest.raises(ValueError):
        family_dim_delpezzo(4, BlowupClass(9, (3, 3, 3, 3, 3)))
    with pytest.raises(ValueError):
        family_dim_delpezzo(5, BlowupClass(9, (3, 3, 3)))
    assert elliptic_cone_family_dim(5, 3) == 60


def test_severi_counts():
    assert severi_family_dim(quadric(), QuadricClass(3, 9), 4) == (35, 29)
    assert severi_plane_dim(9, 13) == 39
    with pytest.raises(ValueError):
        severi_plane_dim(4, 4)
    with pytest.raises(ValueError):
        severi_family_dim(quadric(), QuadricClass(1, 1), 5)


@given(st.integers(1, 10), st.integers(0, 10))
def test_grassmannian_dim(r, extra):
    n = r + extra
    # dimension of subspaces of dimension r in P^n is (r + 1)(n - r)
    assert grassmannian_dim(r, n) == (r + 1) * (n - r)


def test_rows_for_degree_15_in_p5():
    dims = {g: analyze(15, g, 5).dims for g in range(10, 19)}
    assert dims == {10: [72], 11: [70], 12: [68], 13: [66, 68], 14: [], 15: [64],
                    16: [64, 65, 68], 17: [], 18: [68]}
    for g in range(10, 19):
        row = analyze(15, g, 5)
        verdict, count = reference.CLASSIFICATION[(15, 5)][g]
        assert (row.verdict, row.n_components, row.verdict_source) == (verdict, count, "paper")
        assert row.expected_dim == chi_expected(15, g, 5)


def test_genus_16_components():
    row = analyze(15, 16, 5)
    by_label = {c.label: c for c in row.components}
    assert set(by_label) == {"scroll 3H+3L", "scroll 5H-5L", "del Pezzo (9;3^4)"}
    assert [by_label[k].acm for k in ("scroll 3H+3L", "scroll 5H-5L", "del Pezzo (9;3^4)")] == [False, False, True]
    assert by_label["scroll 3H+3L"].moduli_image_dim == 33
    assert by_label["scroll 5H-5L"].moduli_image_dim == 29
    assert [c.label for c in row.absorbed] == ["elliptic cone k=3"]


def test_scroll_ideal_cohomology():
    for c in (ScrollClass(5, 3, 3), ScrollClass(5, 5, -5)):
        assert [scroll_ideal_h1(c, t) for t in range(0, 8)] == [0, 0, 0, 2, 0, 0, 0, 0]
    assert all(scroll_ideal_h1(ScrollClass(5, 4, -1), t) == 0 for t in range(10))
    # the answer does not depend on which Hirzebruch model of the scroll is used
    assert scroll_ideal_h1(ScrollClass(5, 3, 3), 3, e=2) == 2


def test_maroni_sublocus():
    # trigonal curves with Maroni invariant e > 0 form a locus of dimension 2g + 2 - e in moduli
    g = 16
    sub = scroll_sublocus(ScrollClass(5, 3, 3), 2, 15, g)
    assert sub.family_dim == 67
    assert sub.family_dim - aut_dim_projective(5) == 2 * g + 2 - 2


def test_projection_route_cross_check():
    row = analyze(15, 13, 5)
    trig = next(c for c in row.components if c.label == "projection trigonal")
    # curves on a scroll in P^6, projected from a point: 75 + 6 - (48 - 35)
    via_p6 = family_dim_scroll(6, 3, 0) + 6 - (aut_dim_projective(6) - aut_dim_projective(5))
    assert trig.family_dim == via_p6 == 68
    assert not trig.linearly_normal
    fiber = reference.MODULI_FIBERS[(15, 13, 5, "projection trigonal")]
    assert moduli_image_dim(trig, fiber) == 33
    # the trigonal locus has dimension 2g + 1
    assert curve_moduli_dim(trig, fiber) == 2 * 13 + 1


def test_moduli_dim_rejects_unknown_fiber():
    row = analyze(15, 18, 5)
    with pytest.raises(TypeError):
        moduli_image_dim(row.components[0], object())


def test_out_of_range_rows():
    row = analyze(15, 19, 5)
    assert row.verdict == reference.EMPTY
    assert any("Castelnuovo" in n for n in row.notes)
    row = analyze(13, 15, 4)
    assert row.verdict_source == "engine"
    assert any("best effort" in n for n in row.notes)


def test_json_schema():
    data = analyze(15, 16, 5).to_json()
    assert data["schema_version"] == 1
    assert set(data) == {"schema_version", "d", "g", "r", "verdict", "n_components", "verdict_source",
                         "expected_dim", "components", "absorbed", "notes"}
    comp = data["components"][0]
    assert set(comp) == {"label", "surface_kind", "class", "family_dim", "expected_dim", "gonality",
                         "gonality_source", "linearly_normal", "acm", "moduli_image_dim", "notes"}
    json.dumps(data)


def test_table_and_markdown():
    table = classification_table(15, 5, range(16, 19))
    assert isinstance(table, ClassificationTable)
    assert [row.g for row in table.rows] == [16, 17, 18]
    md = table_markdown(table)
    assert md.splitlines()[2].startswith("| g | verdict")
    assert "| 17 | Empty | 58 | none | paper |" in md
    assert "Reducible (3)" in row_markdown(table.rows[0])
    assert table.to_json()["rows"][2]["g"] == 18


def test_external_only_row_is_not_computed():
    row = analyze(15, 14, 5)
    assert row.components == ()
    assert row.n_components is None
    assert "see notes" in row_markdown(row)
    assert "Reducible (?)" in row_markdown(row)
