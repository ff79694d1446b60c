"""Genus bounds and Brill-Noether bookkeeping for curves in projective space."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .surfaces import ClassSolution, del_pezzo_classes, elliptic_cone_classes


def pi(d: int, r: int) -> int:
    """Castelnuovo's bound on the genus of a non-degenerate degree-d curve in P^r."""
    if r < 2 or d < r:
        raise ValueError(f"Castelnuovo bound needs d >= r >= 2, got d={d}, r={r}")
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) // 2 * (r - 1) + m * eps


# Reference values of the second bound, checked against the enumeration on every call.
KNOWN_PI1 = {(15, 5): 16, (13, 4): 15}


class ConsistencyError(RuntimeError):
    """An enumerated value disagrees with a tabulated reference value."""


class SecondBound(NamedTuple):
    value: int
    attained_by: tuple[ClassSolution, ...]


def pi_1(d: int, r: int) -> SecondBound:
    """Largest genus of a degree-d curve on a degree-r surface in P^r other than a scroll.

    Candidates are cones over elliptic normal curves and del Pezzo surfaces
    of degree r; supported for r in {4, 5}.
    """
    if r not in (4, 5):
        raise ValueError(f"second bound is only supported for r in {{4, 5}}, got {r}")
    if d < r:
        raise ValueError(f"need d >= r, got d={d}, r={r}")
    candidates = elliptic_cone_classes(d, r) + del_pezzo_classes(d, 0, pi(d, r), r)
    if not candidates:
        raise ValueError(f"no candidate classes of degree {d} in P^{r}")
    best = max(c.genus for c in candidates)
    known = KNOWN_PI1.get((d, r))
    if known is not None and known != best:
        raise ConsistencyError(f"pi_1({d},{r}): enumeration gives {best}, reference value {known}")
    return SecondBound(best, tuple(c for c in candidates if c.genus == best))


def rho(d: int, g: int, r: int) -> int:
    return g - (r + 1) * (g - d + r)


def lam(d: int, g: int, r: int) -> int:
    """Expected dimension 3g - 3 + rho of the space of g^r_d's over moduli."""
    return 3 * g - 3 + rho(d, g, r)


def aut_dim_projective(r: int) -> int:
    return r * r + 2 * r


def chi_expected(d: int, g: int, r: int) -> int:
    """Expected dimension of the Hilbert scheme of degree-d genus-g curves in P^r."""
    return lam(d, g, r) + aut_dim_projective(r)


def speciality(d: int, g: int, r: int) -> int:
    """h^1 of the hyperplane series if it is complete: g - d + r."""
    return g - d + r


def castelnuovo_severi(n1: int, g1: int, n2: int, g2: int) -> int:
    """Genus bound for a curve with independent covers of degrees n1, n2 onto genus g1, g2."""
    if min(n1, n2) < 1 or min(g1, g2) < 0:
        raise ValueError("cover degrees must be >= 1 and genera >= 0")
    return n1 * g1 + n2 * g2 + (n1 - 1) * (n2 - 1)


def max_birational_dim(d: int, g: int) -> int:
    """Largest r for which a birationally very ample g^r_d can exist on a genus-g curve."""
    if d < g:
        raise ValueError(f"bound requires d >= g, got d={d}, g={g}")
    return (2 * d - g + 1) // 3


@dataclass(frozen=True)
class LinearSeries:
    d: int
    r: int
    g: int

    def __post_init__(self):
        if self.r < 0 or self.d < 0 or self.g < 0:
            raise ValueError(f"invalid linear series g^{self.r}_{self.d} on genus {self.g}")


def residual_series(series: LinearSeries) -> LinearSeries:
    """The complete series |K - D| for a complete g^r_d on a genus-g curve."""
    d, r, g = series.d, series.r, series.g
    if d > 2 * g - 2:
        raise ValueError(f"degree {d} exceeds 2g-2 = {2 * g - 2}; residual series is empty")
    rr = r + g - d - 1
    if rr < 0:
        raise ValueError(f"g^{r}_{d} is non-special on genus {g}; residual series is empty")
    return LinearSeries(2 * g - 2 - d, rr, g)


def gonality_bn(g: int) -> int:
    """Gonality of a general curve of genus g."""
    return (g + 3) // 2


def dim_pencil_locus(g: int, k: int) -> int:
    """Dimension of the locus of k-gonal curves in moduli, 2g + 2k - 5."""
    return 2 * g + 2 * k - 5


@dataclass(frozen=True)
class BoundsReport:
    d: int
    r: int
    pi: int
    pi1: int | None
    g: int | None = None
    rho: int | None = None
    lam: int | None = None
    chi: int | None = None
    alpha: int | None = None

    def to_json(self) -> dict:
        return {"d": self.d, "r": self.r, "g": self.g, "pi": self.pi, "pi1": self.pi1,
                "rho": self.rho, "lambda": self.lam, "chi": self.chi, "alpha": self.alpha}


def bounds_report(d: int, r: int, g: int | None = None) -> BoundsReport:
    p1 = pi_1(d, r).value if r in (4, 5) else None
    if g is None:
        return BoundsReport(d, r, pi(d, r), p1)
    return BoundsReport(d, r, pi(d, r), p1, g, rho(d, g, r), lam(d, g, r),
                        chi_expected(d, g, r), speciality(d, g, r))
