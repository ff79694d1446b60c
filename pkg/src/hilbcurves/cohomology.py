"""Line bundle cohomology on P^1, P^2, quadrics and Hirzebruch surfaces."""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from .lattice import (BlowupClass, HirzebruchClass, QuadricClass, SurfaceModel,
                      arithmetic_genus, hirzebruch, intersect)


class Cohomology(NamedTuple):
    h0: int
    h1: int
    h2: int = 0

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def to_json(self) -> dict:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "chi": self.chi}


class PreconditionError(ValueError):
    pass


def h_p1(n: int) -> Cohomology:
    return Cohomology(max(n + 1, 0), max(-n - 1, 0))


def h_plane(n: int) -> Cohomology:
    return Cohomology(comb(n + 2, 2) if n >= 0 else 0, 0, comb(-n - 1, 2) if n <= -3 else 0)


def h_hirzebruch(e: int, a: int, b: int) -> Cohomology:
    """Cohomology of O(a*h + b*f) on F_e.

    For a >= 0 the pushforward to P^1 splits as the sum of O(b - k*e),
    k = 0..a; a = -1 has no cohomology; a <= -2 goes through Serre duality.
    """
    if e < 0:
        raise ValueError(f"Hirzebruch invariant must be >= 0, got {e}")
    if a >= 0:
        parts = [h_p1(b - k * e) for k in range(a + 1)]
        return Cohomology(sum(p.h0 for p in parts), sum(p.h1 for p in parts), 0)
    if a == -1:
        return Cohomology(0, 0, 0)
    dual = h_hirzebruch(e, -2 - a, -(e + 2) - b)
    return Cohomology(dual.h2, dual.h1, dual.h0)


def h_quadric(a: int, b: int) -> Cohomology:
    x, y = h_p1(a), h_p1(b)
    return Cohomology(x.h0 * y.h0, x.h0 * y.h1 + x.h1 * y.h0, x.h1 * y.h1)


def cohomology(c) -> Cohomology:
    """Dispatch on the class type (Hirzebruch or quadric)."""
    if isinstance(c, HirzebruchClass):
        return h_hirzebruch(c.e, c.a, c.b)
    if isinstance(c, QuadricClass):
        return h_quadric(c.a, c.b)
    raise TypeError(f"no cohomology routine for classes on {c.lattice}")


def dim_linear_system_scroll(r: int, a: int, b: int) -> int:
    """Projective dimension of |a*H + b*L| on a scroll in P^r, or -1 if empty.

    This is the Euler characteristic minus one, which is the true dimension
    whenever the higher cohomology vanishes.
    """
    value = a * (a + 1) * (r - 1) // 2 + (a + 1) * (b + 1) - 1
    return value if value >= 0 else -1


class VirtualDimension(NamedTuple):
    dim: int
    assumes_nonspecial: bool = True


def expected_dim_blowup(c: BlowupClass) -> VirtualDimension:
    """a(a+3)/2 - sum b(b+1)/2: the dimension when the points impose independent conditions."""
    if c.a < 0:
        raise ValueError(f"plane degree must be >= 0, got {c.a}")
    return VirtualDimension(c.a * (c.a + 3) // 2 - sum(x * (x + 1) // 2 for x in c.b))


def h0_restricted(surface: SurfaceModel, M, C) -> int:
    """h^0(O_C(M)) for a curve C on a surface with computable cohomology.

    Uses the restriction sequence, valid when h^0(M - C) = 0 and h^1(M) = 0.
    """
    diff = M - C
    hm, hd = cohomology(M), cohomology(diff)
    if hd.h0 or hm.h1:
        raise PreconditionError(
            f"restriction sequence needs h0(M-C)=0 and h1(M)=0 on {surface.name}; "
            f"got h0(M-C)={hd.h0}, h1(M)={hm.h1}")
    return hm.h0 + hd.h1


def _h0_on_curve(surface: SurfaceModel, M, C, genus: int) -> int:
    try:
        return h0_restricted(surface, M, C)
    except PreconditionError:
        # Riemann-Roch on C with K_C = (K + C)|_C
        residual = surface.canonical + C - M
        return intersect(M, C) - genus + 1 + h0_restricted(surface, residual, C)


def scrollar_invariant(e: int, C) -> tuple[int, int]:
    """Smallest t with h^0(O_C(t*f)) >= t + 2, together with that h^0.

    ``C`` is a class on F_e; a quadric class is read as a*h + b*f on F_0.
    """
    if isinstance(C, QuadricClass):
        C = HirzebruchClass(0, C.a, C.b)
    if C.e != e:
        raise ValueError(f"class {C} does not live on F_{e}")
    S = hirzebruch(e)
    g = arithmetic_genus(S, C)
    # once t(C.f - 1) >= g + 1 Riemann-Roch alone forces h0 >= t + 2
    limit = max(2 * g, g + 2)
    for t in range(1, limit + 1):
        h0 = _h0_on_curve(S, HirzebruchClass(e, 0, t), C, g)
        if h0 >= t + 2:
            return t, h0
    raise ValueError(f"no scrollar invariant found for {C} up to t = {limit}")
