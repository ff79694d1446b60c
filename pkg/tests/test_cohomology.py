import pytest
from hypothesis import given, strategies as st

from hilbcurves.cohomology import (PreconditionError, dim_linear_system_scroll,
                                   expected_dim_blowup, h0_restricted, h_hirzebruch, h_p1,
                                   h_plane, h_quadric, scrollar_invariant)
from hilbcurves.lattice import (BlowupClass, HirzebruchClass, QuadricClass, blown_plane,
                                hirzebruch, intersect, quadric)

small = st.integers(-15, 15)


def _lattice_points(e, a, b):
    # sections of O(a h + b f) on the toric surface F_e
    return sum(1 for j in range(a + 1) for i in range(b - e * j + 1)) if a >= 0 else 0


def test_spot_values():
    assert h_quadric(0, -3).h1 == 2
    assert h_hirzebruch(2, 0, -3).h1 == 2
    assert h_hirzebruch(2, 1, 0).h1 == 1
    assert h_quadric(2, 4).h0 == 15
    assert h_hirzebruch(2, 2, 6).h0 == 15
    assert h_hirzebruch(2, -3, -4).h1 == 1
    assert h_quadric(-1, -5) == (0, 0, 0)


def test_p1_and_plane():
    assert h_p1(3) == (4, 0, 0)
    assert h_p1(-3) == (0, 2, 0)
    assert h_plane(2) == (6, 0, 0)
    assert h_plane(-4) == (0, 0, 3)


def test_negative_e_rejected():
    with pytest.raises(ValueError):
        h_hirzebruch(-1, 0, 0)


@given(st.integers(0, 5), small, small)
def test_riemann_roch_hirzebruch(e, a, b):
    L = HirzebruchClass(e, a, b)
    K = hirzebruch(e).canonical
    assert h_hirzebruch(e, a, b).chi == 1 + intersect(L, L - K) // 2


@given(st.integers(0, 5), small, small)
def test_serre_duality_hirzebruch(e, a, b):
    h = h_hirzebruch(e, a, b)
    d = h_hirzebruch(e, -2 - a, -(e + 2) - b)
    assert (h.h0, h.h1, h.h2) == (d.h2, d.h1, d.h0)


@given(st.integers(0, 5), st.integers(0, 12), small)
def test_sections_count_lattice_points(e, a, b):
    assert h_hirzebruch(e, a, b).h0 == _lattice_points(e, a, b)


@given(small, small)
def test_quadric_is_f0(a, b):
    assert h_quadric(a, b) == h_hirzebruch(0, a, b)
    L, K = QuadricClass(a, b), quadric().canonical
    assert h_quadric(a, b).chi == 1 + intersect(L, L - K) // 2


@pytest.mark.parametrize("r,a,b,dim", [(5, 3, 3, 39), (5, 5, -5, 35), (5, 4, -1, 39), (4, 3, -4, 5)])
def test_dim_linear_system_scroll(r, a, b, dim):
    assert dim_linear_system_scroll(r, a, b) == dim


def test_empty_scroll_system():
    assert dim_linear_system_scroll(5, 0, -3) == -1


@given(st.integers(0, 10), st.integers(-25, 25), st.sampled_from([0, 2]))
def test_scroll_dimension_matches_hirzebruch_when_nonspecial(a, b, e):
    # the closed formula is chi - 1; it is h0 - 1 exactly when h1 = h2 = 0
    shift = (4 + e) // 2
    h = h_hirzebruch(e, a, a * shift + b)
    formula = a * (a + 1) * 2 + (a + 1) * (b + 1) - 1
    assert h.chi - 1 == formula
    if h.h1 == 0 and h.h2 == 0 and formula >= 0:
        assert dim_linear_system_scroll(5, a, b) + 1 == h.h0


@pytest.mark.parametrize("c,dim", [("9;3,3,3,3", 30), ("8;3", 38), ("3;1,1,1,1", 5)])
def test_expected_dim_blowup(c, dim):
    a, b = c.split(";")
    v = expected_dim_blowup(BlowupClass(int(a), tuple(map(int, b.split(",")))))
    assert v.dim == dim
    assert v.assumes_nonspecial


@given(st.integers(0, 20), st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_expected_dim_is_riemann_roch(a, b):
    c = BlowupClass(a, tuple(b))
    K = blown_plane(len(b)).canonical
    assert expected_dim_blowup(c).dim == intersect(c, c - K) // 2


@pytest.mark.parametrize("S,M,C,h0", [
    (quadric(), QuadricClass(2, 4), QuadricClass(3, 9), 15),
    (hirzebruch(2), HirzebruchClass(2, 2, 6), HirzebruchClass(2, 5, 10), 16),
    (hirzebruch(2), HirzebruchClass(2, 0, 5), HirzebruchClass(2, 4, 11), 7),
])
def test_h0_restricted(S, M, C, h0):
    assert h0_restricted(S, M, C) == h0


def test_h0_restricted_precondition_reports_values():
    with pytest.raises(PreconditionError, match=r"h0\(M-C\)=1"):
        h0_restricted(quadric(), QuadricClass(3, 9), QuadricClass(3, 9))


def test_scrollar_invariants():
    assert scrollar_invariant(0, QuadricClass(4, 7)) == (7, 11)
    assert scrollar_invariant(2, HirzebruchClass(2, 4, 11)) == (5, 7)
    with pytest.raises(ValueError):
        scrollar_invariant(1, HirzebruchClass(2, 4, 11))


@given(st.integers(2, 6), st.integers(1, 12))
def test_scrollar_invariant_closed_form_on_quadric(a, b):
    # on F_0, h0(O_C(t f)) = t + 1 for t < b and jumps to a + b at t = b
    assert scrollar_invariant(0, HirzebruchClass(0, a, b)) == (b, a + b)
