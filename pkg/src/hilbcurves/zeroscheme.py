"""Zero-dimensional schemes in P^2 built from fat points, and plane curve models.

All coordinates are :class:`fractions.Fraction`; ranks are computed by exact
Gaussian elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import NamedTuple, Sequence


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PlanePoint:
    """Projective point, normalised so its first nonzero coordinate is 1."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, x, y, z):
        coords = [_frac(x), _frac(y), _frac(z)]
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a point of P^2")
        coords = [c / lead for c in coords]
        for name, c in zip("xyz", coords):
            object.__setattr__(self, name, c)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    @property
    def chart(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c != 0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class FatPoint:
    point: PlanePoint
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"fat point multiplicity must be >= 1, got {self.m}")

    @property
    def degree(self) -> int:
        return self.m * (self.m + 1) // 2


@dataclass(frozen=True)
class ZeroScheme:
    points: tuple[FatPoint, ...]

    def __init__(self, points):
        pts = tuple(points)
        support = [p.point for p in pts]
        if len(set(support)) != len(support):
            raise ValueError("fat points of a zero scheme must have distinct supports")
        object.__setattr__(self, "points", pts)

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self.points)

    @classmethod
    def reduced(cls, pts: Sequence[PlanePoint]) -> ZeroScheme:
        return cls(FatPoint(p, 1) for p in pts)

    def to_json(self) -> list[dict]:
        return [{"point": p.point.to_json(), "m": p.m} for p in self.points]

    @classmethod
    def from_json(cls, data) -> ZeroScheme:
        return cls(FatPoint(PlanePoint(*(Fraction(c) for c in item["point"])), int(item.get("m", 1)))
                   for item in data)


# ---------------------------------------------------------- linear algebra

def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-exact row reduction."""
    m = [list(map(_frac, row)) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                factor = m[i][col] / pr[col]
                row = m[i]
                for j in range(col, ncols):
                    row[j] -= factor * pr[j]
        r += 1
        if r == len(m):
            break
    return r


def monomials(t: int) -> list[tuple[int, int, int]]:
    """Exponent vectors of degree-t monomials in x, y, z, in a fixed order."""
    return [(i, j, t - i - j) for i in range(t, -1, -1) for j in range(t - i, -1, -1)]


def _falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


def conditions_matrix(Z: ZeroScheme, t: int, chart: int | None = None) -> list[list[Fraction]]:
    """Rows: vanishing of all derivatives of order < m at each fat point.

    Each point is read in the affine chart where coordinate ``chart`` is 1
    (the point's own normalising coordinate by default, or whenever the
    requested coordinate vanishes there).  Columns follow :func:`monomials`.
    """
    if t < 0:
        raise ValueError(f"degree must be >= 0, got {t}")
    mons = monomials(t)
    rows = []
    for fp in Z.points:
        c = chart if chart is not None and fp.point.coords[chart] != 0 else fp.point.chart
        scale = fp.point.coords[c]
        u_idx, v_idx = [i for i in range(3) if i != c]
        u0, v0 = fp.point.coords[u_idx] / scale, fp.point.coords[v_idx] / scale
        for order in range(fp.m):
            for i in range(order + 1):
                j = order - i
                row = []
                for mon in mons:
                    p, q = mon[u_idx], mon[v_idx]
                    coeff = _falling(p, i) * _falling(q, j)
                    row.append(coeff * u0 ** (p - i) * v0 ** (q - j) if coeff else Fraction(0))
                rows.append(row)
    return rows


class IdealCohomology(NamedTuple):
    h0: int
    h1: int
    rank: int
    deg: int

    def to_json(self) -> dict:
        return self._asdict()


def h_ideal(Z: ZeroScheme, t: int) -> IdealCohomology:
    """(h^0, h^1) of I_Z(t) on P^2, with the rank of the condition matrix."""
    rk = rank(conditions_matrix(Z, t))
    return IdealCohomology(comb(t + 2, 2) - rk, Z.degree - rk, rk, Z.degree)


# ---------------------------------------------------------------- residuals

def _eval_linear(form: Sequence, p: PlanePoint) -> Fraction:
    return sum(_frac(a) * c for a, c in zip(form, p.coords))


def _check_linear(form):
    if len(form) != 3 or all(_frac(a) == 0 for a in form):
        raise ValueError(f"not a linear form: {form!r}")


def residual_line(Z: ZeroScheme, form: Sequence) -> ZeroScheme:
    """Residual of Z with respect to the line ``form = 0``: points on it lose one multiplicity."""
    _check_linear(form)
    out = []
    for fp in Z.points:
        m = fp.m - 1 if _eval_linear(form, fp.point) == 0 else fp.m
        if m:
            out.append(FatPoint(fp.point, m))
    return ZeroScheme(out)


def trace_degree_line(Z: ZeroScheme, form: Sequence) -> int:
    """Length of Z intersected with the line."""
    _check_linear(form)
    return sum(fp.m for fp in Z.points if _eval_linear(form, fp.point) == 0)


def _quadratic_value(q, p: PlanePoint) -> Fraction:
    x = p.coords
    return sum(_frac(q[i][j]) * x[i] * x[j] for i in range(3) for j in range(3))


def _det3(q) -> Fraction:
    q = [[_frac(v) for v in row] for row in q]
    return (q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1])
            - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
            + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]))


def residual_conic(Z: ZeroScheme, conic) -> ZeroScheme:
    """Residual with respect to a conic.

    ``conic`` is either a pair of linear forms (a line pair) or a symmetric
    3x3 matrix of a smooth conic.  Double lines are not supported.
    """
    if len(conic) == 2:
        first, second = conic
        return residual_line(residual_line(Z, second), first)
    if len(conic) != 3 or any(len(row) != 3 for row in conic):
        raise ValueError("conic must be a pair of linear forms or a 3x3 matrix")
    if any(_frac(conic[i][j]) != _frac(conic[j][i]) for i in range(3) for j in range(3)):
        raise ValueError("conic matrix must be symmetric")
    if _det3(conic) == 0:
        raise ValueError("singular conic: pass it as a pair of linear forms")
    out = []
    for fp in Z.points:
        m = fp.m - 1 if _quadratic_value(conic, fp.point) == 0 else fp.m
        if m:
            out.append(FatPoint(fp.point, m))
    return ZeroScheme(out)


# ------------------------------------------------------------- plane models

def plane_model_genus(d: int, mults: Sequence[int]) -> int:
    """Geometric genus of a degree-d plane curve with ordinary singular points of the given multiplicities."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if any(m < 1 or m >= d for m in mults):
        raise ValueError(f"multiplicities must lie in 1..{d - 1}, got {list(mults)}")
    return (d - 1) * (d - 2) // 2 - sum(m * (m - 1) // 2 for m in mults)


class Pencil(NamedTuple):
    kind: str
    degree: int
    through: tuple[int, ...]


def singular_point_pencils(d: int, mults: Sequence[int]) -> list[Pencil]:
    """Pencils cut by lines through each singular point, and by conics through exactly four."""
    plane_model_genus(d, mults)
    out = [Pencil("line", d - m, (i,)) for i, m in enumerate(mults)]
    if len(mults) == 4:
        out.append(Pencil("conic", 2 * d - sum(mults), tuple(range(4))))
    return out


def _collinear(p: PlanePoint, q: PlanePoint, s: PlanePoint) -> bool:
    return _det3([p.coords, q.coords, s.coords]) == 0


def is_contained_in_line(Z: ZeroScheme) -> bool:
    """True when Z lies on a line (only possible for reduced points)."""
    if any(fp.m > 1 for fp in Z.points):
        return False
    pts = [fp.point for fp in Z.points]
    if len(pts) <= 2:
        return True
    p, q = pts[0], pts[1]
    return all(_collinear(p, q, s) for s in pts[2:])


def collinearity_h1_criterion(Z: ZeroScheme) -> bool:
    """For a length-6 scheme: h^1(I_Z(4)) > 0, cross-checked against Z lying on a line."""
    if Z.degree != 6:
        raise ValueError(f"criterion applies to schemes of length 6, got {Z.degree}")
    special = h_ideal(Z, 4).h1 > 0
    if special != is_contained_in_line(Z):
        raise AssertionError(f"h^1 test ({special}) disagrees with the collinearity test for {Z}")
    return special


def random_point(rng: random.Random, box: int = 20) -> PlanePoint:
    while True:
        coords = [rng.randint(-box, box) for _ in range(3)]
        if any(coords):
            return PlanePoint(*coords)


def random_general_configuration(rng: random.Random, box: int = 20) -> ZeroScheme:
    """Three non-collinear simple points A plus a double point p off the lines through pairs of A."""
    while True:
        a = [random_point(rng, box) for _ in range(3)]
        p = random_point(rng, box)
        if len({*a, p}) < 4 or _collinear(*a):
            continue
        if any(_collinear(u, v, p) for u, v in combinations(a, 2)):
            continue
        return ZeroScheme([FatPoint(x, 1) for x in a] + [FatPoint(p, 2)])
