"""Enumerate curve classes of given degree and genus on surfaces of small degree.

Each enumerator solves the degree and adjunction equations exactly over a
finite window of the leading coefficient and returns a lexicographically
sorted list of :class:`ClassSolution`.  The obstruction checks at the end
test whether an adjoint-type series can be very ample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cohomology import h_hirzebruch
from .lattice import (BlowupClass, DivisorClass, EllipticRuledClass, HirzebruchClass,
                      ScrollClass, SurfaceModel, arithmetic_genus, blown_plane,
                      elliptic_cone, intersect, neg_one_curves, rational_cone, scroll)


@dataclass(frozen=True)
class ClassSolution:
    surface: SurfaceModel
    cls: DivisorClass
    degree: int
    genus: int
    vertex_multiplicity: int | None = None
    pencil_degree: int | None = None
    smooth: bool | None = None

    def to_json(self) -> dict:
        out = {"surface": self.surface.name, "class": str(self.cls),
               "class_data": self.cls.to_json(), "degree": self.degree, "genus": self.genus}
        for key in ("vertex_multiplicity", "pencil_degree", "smooth"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def _key(sol: ClassSolution):
    return (sol.cls.a, sol.cls.b)


def scroll_classes(d: int, g: int, r: int) -> list[ClassSolution]:
    """Classes a*H + b*L of degree d and genus g on a scroll in P^r, a >= 1.

    An irreducible curve other than a ruling satisfies b >= -a(r-1)/2 on the
    most balanced model, so a ranges up to 2d/(r-1).
    """
    if r < 3 or d < 1:
        raise ValueError(f"need r >= 3 and d >= 1, got d={d}, r={r}")
    S = scroll(r)
    out = []
    for a in range(1, 2 * d // (r - 1) + 1):
        c = ScrollClass(r, a, d - (r - 1) * a)
        if arithmetic_genus(S, c) == g:
            out.append(ClassSolution(S, c, d, g, pencil_degree=a))
    return sorted(out, key=_key)


def rational_cone_classes(d: int, r: int) -> list[ClassSolution]:
    """Strict transforms k*h + d*f on F_{r-1} of degree-d curves on a rational cone in P^r.

    The vertex multiplicity is m = d - (r-1)k; the curve is smooth at the
    vertex exactly when m <= 1.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    e = r - 1
    S = rational_cone(e)
    out = []
    for k in range(1, d // e + 1):
        m = d - e * k
        c = HirzebruchClass(e, k, d)
        out.append(ClassSolution(S, c, d, arithmetic_genus(S, c), vertex_multiplicity=m,
                                 pencil_degree=k, smooth=m <= 1))
    return sorted(out, key=_key)


def elliptic_cone_classes(d: int, r: int) -> list[ClassSolution]:
    """Covers k*h + d*f of the elliptic normal curve on the cone over it in P^r.

    Genus is (k-1)(d - kr/2) + 1 with vertex multiplicity m = d - rk.  Sections
    (k = 1) are kept only in the hyperplane-section case m = 0; a section
    through the vertex is an elliptic curve, not a cover.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    S = elliptic_cone(r)
    out = []
    for k in range(1, d // r + 1):
        m = d - r * k
        if k == 1 and m:
            continue
        genus = (k - 1) * (Fraction(d) - Fraction(k * r, 2)) + 1
        if genus.denominator != 1:
            continue
        c = EllipticRuledClass(r, k, d)
        assert arithmetic_genus(S, c) == genus
        out.append(ClassSolution(S, c, d, int(genus), vertex_multiplicity=m,
                                 pencil_degree=2 * k, smooth=m <= 1))
    return sorted(out, key=_key)


def _multiplicity_vectors(length: int, total: int, squares: int, cap: int):
    """Non-increasing non-negative vectors with given sum and sum of squares."""
    if length == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if total < 0 or squares < 0:
        return
    # the head is at least the mean and at most min(cap, sqrt(squares))
    lo = -(-total // length)
    for head in range(min(cap, isqrt(squares)), lo - 1, -1):
        rest_total, rest_sq = total - head, squares - head * head
        if rest_total < 0:
            continue
        for tail in _multiplicity_vectors(length - 1, rest_total, rest_sq, head):
            yield (head,) + tail


def _plane_degree_window(d: int, g: int, s: int) -> range:
    """Range of a allowed by Cauchy-Schwarz: (3a-d)^2 <= s(a^2 - C^2)."""
    c2 = 2 * g - 2 + d
    # (9-s) a^2 - 6d a + d^2 + s c2 <= 0
    A, B, C = 9 - s, -6 * d, d * d + s * c2
    disc = B * B - 4 * A * C
    if disc < 0:
        return range(0)
    root = isqrt(disc)
    lo = max(1, (-B - root) // (2 * A))
    hi = (-B + root) // (2 * A) + 1
    return range(lo, hi + 1)


def del_pezzo_classes(d: int, g_lo: int, g_hi: int, r: int) -> list[ClassSolution]:
    """Classes (a; b) with a >= 1, non-increasing b >= 0 of degree d on the degree-r del Pezzo.

    The surface is the plane blown up at s = 9 - r points and embedded by
    (3; 1^s).  Every genus in [g_lo, g_hi] is searched.
    """
    if not 4 <= r <= 8:
        raise ValueError(f"del Pezzo degree r must be in 4..8, got {r}")
    if g_lo > g_hi:
        return []
    s = 9 - r
    S = blown_plane(s)
    out = []
    for g in range(max(g_lo, 0), g_hi + 1):
        c2 = 2 * g - 2 + d
        for a in _plane_degree_window(d, g, s):
            total, squares = 3 * a - d, a * a - c2
            if total < 0 or squares < 0:
                continue
            for b in _multiplicity_vectors(s, total, squares, a):
                c = BlowupClass(a, b)
                out.append(ClassSolution(S, c, d, g))
    return sorted(out, key=lambda sol: (sol.genus, sol.cls.a, sol.cls.b))


def cremona(c: BlowupClass, i: int = 0, j: int = 1, k: int = 2) -> BlowupClass:
    """Quadratic transformation centred at points i, j, k."""
    b = list(c.b)
    bi, bj, bk = b[i], b[j], b[k]
    b[i], b[j], b[k] = c.a - bj - bk, c.a - bi - bk, c.a - bi - bj
    return BlowupClass(2 * c.a - bi - bj - bk, tuple(b))


def cremona_normal_form(c: BlowupClass) -> BlowupClass:
    """Representative of minimal plane degree in the orbit under quadratic transformations."""
    c = c.sorted()
    if c.s < 3:
        return c
    while True:
        nxt = cremona(c).sorted()
        if nxt.a >= c.a:
            return c
        c = nxt


# ---------------------------------------------------------------- obstructions

VERY_AMPLE_CANDIDATE = "VeryAmpleCandidate"
FIXED_COMPONENT = "FixedComponent"
CONTRACTED_CURVE = "ContractedCurve"
MULTISECANT_FIBER = "MultisecantFiber"


@dataclass(frozen=True)
class ObstructionVerdict:
    status: str
    witness: DivisorClass | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"status": self.status,
                "witness": None if self.witness is None else str(self.witness),
                "detail": self.detail}


def fixed_part(e: int, c: HirzebruchClass) -> tuple[HirzebruchClass, HirzebruchClass]:
    """Split |c| on F_e into (fixed part, moving part) along h and f."""
    if c.e != e:
        raise ValueError(f"class {c} does not live on F_{e}")
    h0 = h_hirzebruch(e, c.a, c.b).h0
    if h0 == 0:
        raise ValueError(f"|{c}| is empty")
    fixed = HirzebruchClass(e, 0, 0)
    moving = c
    steps = (HirzebruchClass(e, 1, 0), HirzebruchClass(e, 0, 1))
    changed = True
    while changed:
        changed = False
        for step in steps:
            smaller = moving - step
            if h_hirzebruch(e, smaller.a, smaller.b).h0 == h0:
                fixed, moving = fixed + step, smaller
                changed = True
                break
    return fixed, moving


def contraction_obstruction(s: int, C: BlowupClass, M: BlowupClass) -> ObstructionVerdict:
    """Check the series |M| restricted to C against every (-1)-curve E.

    M.E = 0 with C.E >= 2 means E is contracted while the curve meets it in
    two or more points; M.E < 0 forces E into the base locus.
    """
    if C.s != s or M.s != s:
        raise ValueError(f"classes must live on BP[{s}]")
    curves = neg_one_curves(s)
    for E in curves:
        if intersect(M, E) == 0 and intersect(C, E) >= 2:
            return ObstructionVerdict(CONTRACTED_CURVE, E,
                                      f"M.E=0 and C.E={intersect(C, E)} for E={E.run_length()}")
    for E in curves:
        if intersect(M, E) < 0:
            return ObstructionVerdict(FIXED_COMPONENT, E,
                                      f"M.E={intersect(M, E)} for E={E.run_length()}")
    return ObstructionVerdict(VERY_AMPLE_CANDIDATE, None, "no (-1)-curve obstruction")


def multisecant_fiber_check(e: int, C: HirzebruchClass, M: HirzebruchClass) -> ObstructionVerdict:
    """A fiber mapped to a line by |M| that meets C in 3 or more points."""
    f = HirzebruchClass(e, 0, 1)
    mf, cf = intersect(M, f), intersect(C, f)
    if mf == 1 and cf >= 3:
        return ObstructionVerdict(MULTISECANT_FIBER, f, f"C.f={cf} > M.f+1={mf + 1}")
    return ObstructionVerdict(VERY_AMPLE_CANDIDATE, None, f"C.f={cf}, M.f={mf}")
