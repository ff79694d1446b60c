"""Imported classification results that cannot be derived by computation.

Irreducibility of a family and the fiber structure of the map to moduli are
theorems; they are recorded here as metadata and the engine only checks that
its candidate lists and dimensions are consistent with them.
"""

from __future__ import annotations

from dataclasses import dataclass

IRREDUCIBLE = "Irreducible"
REDUCIBLE = "Reducible"
EMPTY = "Empty"

# (d, r) -> genus -> (verdict, number of components or None when not stated)
CLASSIFICATION = {
    (15, 5): {
        10: (IRREDUCIBLE, 1),
        11: (IRREDUCIBLE, 1),
        12: (IRREDUCIBLE, 1),
        13: (REDUCIBLE, 2),
        14: (REDUCIBLE, None),
        15: (IRREDUCIBLE, 1),
        16: (REDUCIBLE, 3),
        17: (EMPTY, 0),
        18: (IRREDUCIBLE, 1),
    },
}

# Rows whose verdict rests entirely on an external result; the engine has no
# derivation for them.
EXTERNAL_ONLY = {(15, 14, 5): "external citation: reducibility proved elsewhere"}


@dataclass(frozen=True)
class OrbitOnly:
    """Fibers of the moduli map are single projective-automorphism orbits."""


@dataclass(frozen=True)
class GrassmannianBundle:
    """Fibers are orbits times the Grassmannian of (r+1)-subspaces of an (n+1)-dim space."""

    r: int
    n: int

    def __post_init__(self):
        if not 0 < self.r < self.n:
            raise ValueError(f"need 0 < r < n, got r={self.r}, n={self.n}")

    @property
    def grassmannian_dim(self) -> int:
        return (self.r + 1) * (self.n - self.r)


# (d, g, r, component label) -> declared fiber structure of the moduli map
MODULI_FIBERS = {
    (15, 18, 5, "scroll 4H-1L"): OrbitOnly(),
    (15, 16, 5, "scroll 3H+3L"): OrbitOnly(),
    (15, 16, 5, "scroll 5H-5L"): OrbitOnly(),
    (15, 13, 5, "projection trigonal"): GrassmannianBundle(5, 6),
}
