"""Divisor classes on the rational and ruled surfaces that carry space curves.

Every class is an immutable integer vector tagged with the lattice it lives
in.  Pairings, canonical classes and text/JSON forms are defined here; nothing
in this module does cohomology.

Lattices and their bases:

* ``F[e]``      Hirzebruch surface, negative section ``h`` and fiber ``f``
                (h^2 = -e, h.f = 1, f^2 = 0).
* ``E[r]``      decomposable ruled surface over an elliptic curve with a
                section of self-intersection -r; same pairing as ``F[r]``,
                different canonical class.
* ``Q``         smooth quadric, bidegrees (a, b).
* ``BP[s]``     plane blown up at s points, ``(a; b1..bs) = a*l - sum bi*ei``.
* ``Scroll[r]`` rational normal scroll of degree r-1 in P^r in the basis
                hyperplane ``H`` and ruling ``L``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Union


class LatticeMismatchError(ValueError):
    """Two classes from different Picard lattices were combined."""


@dataclass(frozen=True)
class HirzebruchClass:
    e: int
    a: int
    b: int

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"Hirzebruch invariant must be >= 0, got {self.e}")

    @property
    def lattice(self) -> str:
        return f"F[{self.e}]"

    def _dot(self, other: HirzebruchClass) -> int:
        return -self.e * self.a * other.a + self.a * other.b + self.b * other.a

    def _combine(self, other, sa, sb):
        return HirzebruchClass(self.e, sa(self.a, other.a), sb(self.b, other.b))

    def scaled(self, k: int) -> HirzebruchClass:
        return HirzebruchClass(self.e, k * self.a, k * self.b)

    def __str__(self):
        return f"F[{self.e}]:{_lin(self.a, 'h', self.b, 'f')}"

    def to_json(self) -> dict:
        return {"kind": "F", "e": self.e, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class EllipticRuledClass:
    """Class ``a*h + b*f`` on the elliptic ruled surface with h^2 = -r."""

    r: int
    a: int
    b: int

    @property
    def lattice(self) -> str:
        return f"E[{self.r}]"

    def _dot(self, other: EllipticRuledClass) -> int:
        return -self.r * self.a * other.a + self.a * other.b + self.b * other.a

    def _combine(self, other, sa, sb):
        return EllipticRuledClass(self.r, sa(self.a, other.a), sb(self.b, other.b))

    def scaled(self, k: int) -> EllipticRuledClass:
        return EllipticRuledClass(self.r, k * self.a, k * self.b)

    def __str__(self):
        return f"E[{self.r}]:{_lin(self.a, 'h', self.b, 'f')}"

    def to_json(self) -> dict:
        return {"kind": "E", "r": self.r, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class QuadricClass:
    a: int
    b: int

    @property
    def lattice(self) -> str:
        return "Q"

    def _dot(self, other: QuadricClass) -> int:
        return self.a * other.b + self.b * other.a

    def _combine(self, other, sa, sb):
        return QuadricClass(sa(self.a, other.a), sb(self.b, other.b))

    def scaled(self, k: int) -> QuadricClass:
        return QuadricClass(k * self.a, k * self.b)

    def __str__(self):
        return f"Q:({self.a},{self.b})"

    def to_json(self) -> dict:
        return {"kind": "Q", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class BlowupClass:
    """``a*l - sum(b[i]*e_i)`` on the plane blown up at ``len(b)`` points.

    Multiplicities are kept in point order because pairing two classes only
    makes sense with a common labelling of the points.  Use :meth:`sorted`
    for the symmetric normal form (non-increasing multiplicities).
    """

    a: int
    b: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.b) > 8:
            raise ValueError(f"at most 8 blown-up points supported, got {len(self.b)}")

    @property
    def s(self) -> int:
        return len(self.b)

    @property
    def lattice(self) -> str:
        return f"BP[{self.s}]"

    def _dot(self, other: BlowupClass) -> int:
        return self.a * other.a - sum(x * y for x, y in zip(self.b, other.b))

    def _combine(self, other, sa, sb):
        return BlowupClass(sa(self.a, other.a),
                           tuple(sb(x, y) for x, y in zip(self.b, other.b)))

    def scaled(self, k: int) -> BlowupClass:
        return BlowupClass(k * self.a, tuple(k * x for x in self.b))

    def sorted(self) -> BlowupClass:
        return BlowupClass(self.a, tuple(sorted(self.b, reverse=True)))

    def run_length(self) -> str:
        """Compact form such as ``(9;3^4,2)``."""
        parts = []
        i = 0
        while i < len(self.b):
            j = i
            while j < len(self.b) and self.b[j] == self.b[i]:
                j += 1
            n = j - i
            parts.append(f"{self.b[i]}^{n}" if n > 1 else f"{self.b[i]}")
            i = j
        return f"({self.a};{','.join(parts)})"

    def __str__(self):
        return f"BP[{self.s}]:({self.a};{','.join(map(str, self.b))})"

    def to_json(self) -> dict:
        return {"kind": "BP", "s": self.s, "a": self.a, "b": list(self.b)}


@dataclass(frozen=True)
class ScrollClass:
    """``a*H + b*L`` on a rational normal scroll in P^r.

    Pairing: H^2 = r-1 (the scroll degree), H.L = 1, L^2 = 0.
    """

    r: int
    a: int
    b: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"scroll surfaces need r >= 3, got {self.r}")

    @property
    def lattice(self) -> str:
        return f"Scroll[{self.r}]"

    def _dot(self, other: ScrollClass) -> int:
        return (self.r - 1) * self.a * other.a + self.a * other.b + self.b * other.a

    def _combine(self, other, sa, sb):
        return ScrollClass(self.r, sa(self.a, other.a), sb(self.b, other.b))

    def scaled(self, k: int) -> ScrollClass:
        return ScrollClass(self.r, k * self.a, k * self.b)

    def __str__(self):
        return f"Scroll[{self.r}]:({_lin(self.a, 'H', self.b, 'L')})"

    def to_json(self) -> dict:
        return {"kind": "Scroll", "r": self.r, "a": self.a, "b": self.b}


DivisorClass = Union[HirzebruchClass, EllipticRuledClass, QuadricClass, BlowupClass, ScrollClass]


def _same_lattice(c1, c2):
    if c1.lattice != c2.lattice:
        raise LatticeMismatchError(f"cannot combine classes from {c1.lattice} and {c2.lattice}")


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    _same_lattice(c1, c2)
    return c1._dot(c2)


def add(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    _same_lattice(c1, c2)
    return c1._combine(c2, int.__add__, int.__add__)


def sub(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    _same_lattice(c1, c2)
    return c1._combine(c2, int.__sub__, int.__sub__)


def zero_like(c: DivisorClass) -> DivisorClass:
    return c.scaled(0)


for _cls in (HirzebruchClass, EllipticRuledClass, QuadricClass, BlowupClass, ScrollClass):
    _cls.__add__ = add
    _cls.__sub__ = sub
    _cls.__neg__ = lambda self: self.scaled(-1)
    _cls.__rmul__ = lambda self, k: self.scaled(k) if isinstance(k, int) else NotImplemented


# ---------------------------------------------------------------- surfaces

_HIRZEBRUCH_AUT = {0: 6, 1: 6, 2: 7, 3: 8, 4: 9}


@dataclass(frozen=True)
class SurfaceModel:
    """A smooth surface (or the smooth model of a cone) with its canonical class.

    ``embedding`` is the hyperplane class when the surface is considered in a
    projective space; ``aut_dim`` is the dimension of its automorphism group
    when that number is needed for moduli counts.
    """

    kind: str
    param: int | None
    canonical: DivisorClass
    embedding: DivisorClass | None = None
    aut_dim: int | None = None

    @property
    def lattice(self) -> str:
        return self.canonical.lattice

    @property
    def name(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"


def hirzebruch(e: int, embedding: HirzebruchClass | None = None) -> SurfaceModel:
    return SurfaceModel("Hirzebruch", e, HirzebruchClass(e, -2, -(e + 2)),
                        embedding, _HIRZEBRUCH_AUT.get(e))


def quadric(embedding: QuadricClass | None = QuadricClass(1, 1)) -> SurfaceModel:
    return SurfaceModel("Quadric", None, QuadricClass(-2, -2), embedding, 6)


def blown_plane(s: int, anticanonical: bool = True) -> SurfaceModel:
    """Plane blown up at s general points; embedded anticanonically when s <= 6."""
    if not 0 <= s <= 8:
        raise ValueError(f"number of blown-up points must be in 0..8, got {s}")
    K = BlowupClass(-3, (-1,) * s)
    emb = -K if anticanonical and s <= 6 else None
    return SurfaceModel("BlownPlane", s, K, emb, max(8 - 2 * s, 0))


def rational_cone(e: int) -> SurfaceModel:
    """Resolution F_e of the cone over a rational normal curve of degree e."""
    return SurfaceModel("RationalCone", e, HirzebruchClass(e, -2, -(e + 2)),
                        HirzebruchClass(e, 1, e), _HIRZEBRUCH_AUT.get(e))


def elliptic_cone(r: int) -> SurfaceModel:
    """Resolution of the cone over an elliptic normal curve of degree r."""
    return SurfaceModel("EllipticCone", r, EllipticRuledClass(r, -2, -r),
                        EllipticRuledClass(r, 1, r), None)


def scroll(r: int) -> SurfaceModel:
    return SurfaceModel("Scroll", r, ScrollClass(r, -2, r - 3), ScrollClass(r, 1, 0), None)


def arithmetic_genus(surface: SurfaceModel, c: DivisorClass) -> int:
    """Adjunction: 1 + C.(C+K)/2."""
    twice = intersect(c, c) + intersect(c, surface.canonical)
    if twice % 2:
        raise ValueError(f"C.(C+K) = {twice} is odd for {c}; class is inconsistent with {surface.name}")
    return 1 + twice // 2


def degree(surface: SurfaceModel, c: DivisorClass) -> int:
    if surface.embedding is None:
        raise ValueError(f"{surface.name} has no embedding class, degree undefined")
    return intersect(c, surface.embedding)


def scroll_to_hirzebruch(c: ScrollClass, e: int) -> HirzebruchClass:
    """Rewrite a scroll class on the model F_e, where H = h + ((r-1+e)/2) f and L = f."""
    twice = c.r - 1 + e
    if twice % 2:
        raise ValueError(f"a scroll in P^{c.r} cannot be F_{e}: r-1+e must be even")
    shift = twice // 2
    if e > 0 and shift <= e:
        raise ValueError(f"F_{e} does not embed as a scroll in P^{c.r}")
    return HirzebruchClass(e, c.a, c.a * shift + c.b)


def neg_one_curves(s: int) -> list[BlowupClass]:
    """All (-1)-curves on the plane blown up at 1 <= s <= 5 general points.

    Order: exceptional curves e_i, then lines l - e_i - e_j in lexicographic
    (i, j), then the conic through five points.
    """
    if not 1 <= s <= 5:
        raise ValueError(f"(-1)-curve list supported for 1 <= s <= 5, got {s}")
    out = []
    for i in range(s):
        b = [0] * s
        b[i] = -1
        out.append(BlowupClass(0, tuple(b)))
    for i, j in combinations(range(s), 2):
        b = [0] * s
        b[i] = b[j] = 1
        out.append(BlowupClass(1, tuple(b)))
    if s == 5:
        out.append(BlowupClass(2, (1,) * 5))
    return out


# ------------------------------------------------------------ text and JSON

def _lin(a, x, b, y):
    return f"{a}*{x}{b:+d}*{y}"


_INT = r"([+-]?\d+)"
_LIN = rf"{_INT}\*(\w)\s*\+?\s*{_INT}\*(\w)"


def _parse_multiplicities(body: str) -> tuple[int, ...]:
    out = []
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "^" in part:
            val, rep = part.split("^")
            out.extend([int(val)] * int(rep))
        else:
            out.append(int(part))
    return tuple(out)


def parse_class(text: str) -> DivisorClass:
    """Inverse of ``str()`` for every class type; BP also accepts run-length."""
    t = text.replace(" ", "")
    if m := re.fullmatch(rf"([FE])\[(\d+)\]:{_LIN}", t):
        kind, p, a, x, b, y = m.groups()
        if (x, y) != ("h", "f"):
            raise ValueError(f"expected h and f in {text!r}")
        return (HirzebruchClass if kind == "F" else EllipticRuledClass)(int(p), int(a), int(b))
    if m := re.fullmatch(rf"Scroll\[(\d+)\]:\(?{_LIN}\)?", t):
        r, a, x, b, y = m.groups()
        if (x, y) != ("H", "L"):
            raise ValueError(f"expected H and L in {text!r}")
        return ScrollClass(int(r), int(a), int(b))
    if m := re.fullmatch(rf"Q:\({_INT},{_INT}\)", t):
        return QuadricClass(int(m.group(1)), int(m.group(2)))
    if m := re.fullmatch(rf"(?:BP\[(\d+)\]:)?\({_INT};([^)]*)\)", t):
        s, a, body = m.groups()
        b = _parse_multiplicities(body)
        if s is not None and int(s) != len(b):
            raise ValueError(f"BP[{s}] given {len(b)} multiplicities in {text!r}")
        return BlowupClass(int(a), b)
    raise ValueError(f"unrecognised divisor class {text!r}")


def class_from_json(obj: dict) -> DivisorClass:
    kind = obj["kind"]
    if kind == "F":
        return HirzebruchClass(obj["e"], obj["a"], obj["b"])
    if kind == "E":
        return EllipticRuledClass(obj["r"], obj["a"], obj["b"])
    if kind == "Q":
        return QuadricClass(obj["a"], obj["b"])
    if kind == "BP":
        c = BlowupClass(obj["a"], tuple(obj["b"]))
        if "s" in obj and obj["s"] != c.s:
            raise ValueError(f"BP class declares s={obj['s']} but has {c.s} multiplicities")
        return c
    if kind == "Scroll":
        return ScrollClass(obj["r"], obj["a"], obj["b"])
    raise ValueError(f"unknown class kind {kind!r}")
