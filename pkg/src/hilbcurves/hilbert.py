"""Components of Hilbert schemes of space curves: dimension counts and classification rows.

``analyze(d, g, r)`` collects candidate families from three sources:

* linear-series routes (general curves when rho >= 0, plane models and
  pencils read off the residual of the hyperplane series, and projections
  from P^{r+1} for curves that are not linearly normal);
* curves on surfaces of degree r-1 and r found by the enumerators in
  :mod:`hilbcurves.surfaces`;
* imported verdicts from :mod:`hilbcurves.reference`.

A family whose dimension is below the expected dimension cannot be a
component and is reported as absorbed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from . import reference
from .bounds import (aut_dim_projective, chi_expected, dim_pencil_locus, gonality_bn,
                     max_birational_dim, pi, pi_1, rho, speciality)
from .cohomology import dim_linear_system_scroll, expected_dim_blowup, h_hirzebruch, h_quadric
from .lattice import (BlowupClass, DivisorClass, HirzebruchClass, QuadricClass, ScrollClass,
                      SurfaceModel, hirzebruch, intersect, neg_one_curves, scroll_to_hirzebruch)
from .surfaces import (ClassSolution, cremona_normal_form, del_pezzo_classes,
                       elliptic_cone_classes, rational_cone_classes, scroll_classes)
from .zeroscheme import singular_point_pencils

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ComponentReport:
    label: str
    surface_kind: str | None
    cls: DivisorClass | None
    family_dim: int
    expected_dim: int
    gonality: int | None = None
    gonality_source: str | None = None
    linearly_normal: bool | None = None
    acm: bool | None = None
    moduli_image_dim: int | None = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "surface_kind": self.surface_kind,
            "class": None if self.cls is None else str(self.cls),
            "family_dim": self.family_dim,
            "expected_dim": self.expected_dim,
            "gonality": self.gonality,
            "gonality_source": self.gonality_source,
            "linearly_normal": self.linearly_normal,
            "acm": self.acm,
            "moduli_image_dim": self.moduli_image_dim,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ClassificationRow:
    d: int
    g: int
    r: int
    verdict: str
    n_components: int | None
    verdict_source: str
    expected_dim: int
    components: tuple[ComponentReport, ...]
    absorbed: tuple[ComponentReport, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def dims(self) -> list[int]:
        return sorted(c.family_dim for c in self.components)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "d": self.d, "g": self.g, "r": self.r,
            "verdict": self.verdict,
            "n_components": self.n_components,
            "verdict_source": self.verdict_source,
            "expected_dim": self.expected_dim,
            "components": [c.to_json() for c in self.components],
            "absorbed": [c.to_json() for c in self.absorbed],
            "notes": list(self.notes),
        }


# ------------------------------------------------------------ dimension counts

def scroll_family_dim(r: int) -> int:
    """Dimension of the family of rational normal scroll surfaces in P^r."""
    return (r + 3) * (r - 1) - 3


def family_dim_scroll(r: int, a: int, b: int) -> int:
    dim = dim_linear_system_scroll(r, a, b)
    if dim < 0:
        raise ValueError(f"|{a}H{b:+d}L| is empty on a scroll in P^{r}")
    return dim + scroll_family_dim(r)


def family_dim_delpezzo(r: int, c: BlowupClass) -> int:
    """Curves of class c on del Pezzo surfaces of degree r in P^r, counted with moving surface.

    The surfaces form a family of dimension dim PGL(r+1) + 2s - 8 (moduli of
    the s = 9 - r points minus automorphisms of the plane).
    """
    if r != 5:
        raise ValueError(f"del Pezzo family count is supported for r = 5 only, got {r}")
    if c.s != 9 - r:
        raise ValueError(f"class {c} does not live on the degree-{r} del Pezzo")
    return aut_dim_projective(r) + 2 * c.s - 8 + expected_dim_blowup(c).dim


def severi_family_dim(ambient: SurfaceModel, M: DivisorClass, delta: int) -> tuple[int, int]:
    """(dim |M| - delta, same minus dim Aut of the ambient surface) for delta-nodal members."""
    if isinstance(M, HirzebruchClass):
        dim = h_hirzebruch(M.e, M.a, M.b).h0 - 1
    elif isinstance(M, QuadricClass):
        dim = h_quadric(M.a, M.b).h0 - 1
    elif isinstance(M, BlowupClass):
        dim = expected_dim_blowup(M).dim
    else:
        raise TypeError(f"no linear system count for {M.lattice}")
    if delta < 0 or delta > dim:
        raise ValueError(f"delta = {delta} outside 0..dim|M| = {dim}")
    if ambient.aut_dim is None:
        raise ValueError(f"{ambient.name} has no tabulated automorphism dimension")
    return dim - delta, dim - delta - ambient.aut_dim


def severi_plane_dim(deg: int, g: int) -> int:
    """Dimension of the variety of irreducible nodal plane curves of degree deg and genus g."""
    if not 0 <= g <= (deg - 1) * (deg - 2) // 2:
        raise ValueError(f"no nodal plane curve of degree {deg} and genus {g}")
    return 3 * deg + g - 1


def grassmannian_dim(r: int, n: int) -> int:
    return (r + 1) * (n - r)


def elliptic_cone_family_dim(r: int, k: int) -> int:
    """Curves cut on cones over elliptic normal curves in P^r by hypersurfaces of degree k."""
    cones = r + r * r
    return cones + r * k * (k + 1) // 2


def rational_cone_family_dim(sol: ClassSolution) -> int:
    r = sol.surface.param + 1
    c = sol.cls
    return r * r + r - 4 + h_hirzebruch(c.e, c.a, c.b).h0 - 1


def moduli_image_dim(report: ComponentReport, fiber, r: int = 5) -> int:
    """Dimension of the image in moduli (of curves, or of curves with their series for Grassmannian fibers)."""
    if isinstance(fiber, (reference.OrbitOnly, reference.GrassmannianBundle)):
        return report.family_dim - aut_dim_projective(r)
    raise TypeError(f"unknown fiber structure {fiber!r}")


def curve_moduli_dim(report: ComponentReport, fiber, r: int = 5) -> int:
    """Image in M_g proper: the Grassmannian fibers are also quotiented out."""
    base = moduli_image_dim(report, fiber, r)
    if isinstance(fiber, reference.GrassmannianBundle):
        return base - fiber.grassmannian_dim
    return base


# ------------------------------------------------------------- surface routes

def _balanced_e(r: int) -> int:
    return (r - 1) % 2


def scroll_label(c: ScrollClass) -> str:
    return f"scroll {c.a}H{c.b:+d}L"


def _scroll_realizable(c: ScrollClass) -> list[int]:
    """Models F_e of the scroll on which |c| contains irreducible curves."""
    out = []
    for e in range(_balanced_e(c.r), c.r - 2, 2):
        f = scroll_to_hirzebruch(c, e)
        if f.a >= 1 and (f.b >= f.a * e or e == 0 and f.b >= 0):
            out.append(e)
    return out


def scroll_ideal_h1(c: ScrollClass, t: int, e: int | None = None) -> int:
    """h^1(I_X(t)) for X in |c|, read off h^1(O_S(tH - X)) on the model F_e."""
    e = _balanced_e(c.r) if e is None else e
    twist = scroll_to_hirzebruch(ScrollClass(c.r, t - c.a, -c.b), e)
    return h_hirzebruch(e, twist.a, twist.b).h1


def scroll_sublocus(c: ScrollClass, e: int, d: int, g: int) -> ComponentReport:
    """Curves of class c lying on scrolls isomorphic to F_e."""
    f = scroll_to_hirzebruch(c, e)
    dim = h_hirzebruch(e, f.a, f.b).h0 - 1 + aut_dim_projective(c.r) - hirzebruch(e).aut_dim
    return ComponentReport(f"{scroll_label(c)} on F_{e}", "Hirzebruch", f, dim,
                           chi_expected(d, g, c.r), c.a, "ruling")


def _scroll_component(sol: ClassSolution, d: int, g: int, r: int) -> ComponentReport:
    c = sol.cls
    acm = all(scroll_ideal_h1(c, t) == 0 for t in range(0, c.a + 3))
    return ComponentReport(scroll_label(c), "Scroll", c, family_dim_scroll(r, c.a, c.b),
                           chi_expected(d, g, r), c.a, "ruling", g > pi(d, r + 1), acm)


def _plane_pencil_gonality(c: BlowupClass) -> int:
    mults = [m for m in c.b if m > 0]
    return min(p.degree for p in singular_point_pencils(c.a, mults))


def _delpezzo_components(sols, d: int, g: int, r: int):
    kept, absorbed = [], []
    by_orbit: dict[BlowupClass, list[BlowupClass]] = {}
    for sol in sols:
        by_orbit.setdefault(cremona_normal_form(sol.cls), []).append(sol.cls)
    for rep, members in sorted(by_orbit.items(), key=lambda kv: (kv[0].a, kv[0].b)):
        notes = []
        if min(rep.b, default=0) < 0:
            # reduction exposed a (-1)-curve in the base locus; label by an input class
            rep = min(members, key=lambda m: (m.a, m.b))
        if len(members) > 1:
            notes.append("same family as " + ", ".join(m.run_length() for m in members if m != rep))
        anticanonical_multiple = rep.a % 3 == 0 and all(x == rep.a // 3 for x in rep.b)
        report = ComponentReport(f"del Pezzo {rep.run_length()}", "BlownPlane", rep,
                                 family_dim_delpezzo(r, rep), chi_expected(d, g, r),
                                 _plane_pencil_gonality(rep), "plane model pencils",
                                 g > pi(d, r + 1), True if anticanonical_multiple else None,
                                 notes=tuple(notes))
        if any(intersect(rep, E) < 0 for E in neg_one_curves(rep.s)):
            absorbed.append(replace(report, notes=report.notes + ("contains a (-1)-curve",)))
        else:
            kept.append(report)
    return kept, absorbed


def _elliptic_cone_report(sol: ClassSolution, d: int, g: int, r: int) -> ComponentReport | None:
    k, m = sol.cls.a, sol.vertex_multiplicity
    if m != 0:
        return None
    return ComponentReport(f"elliptic cone k={k}", "EllipticCone", sol.cls,
                           elliptic_cone_family_dim(r, k), chi_expected(d, g, r),
                           2 * k, "double cover of elliptic curve", g > pi(d, r + 1), True,
                           notes=("complete intersection of the cone with a degree-"
                                  f"{k} hypersurface",))


def _surface_candidates(d: int, g: int, r: int):
    """Run the enumerators concurrently; returns (components, absorbed, notes)."""
    tasks = {"scroll": lambda: scroll_classes(d, g, r)}
    restricted = r not in (4, 5) or g > pi_1(d, r).value
    if not restricted:
        tasks["delpezzo"] = lambda: del_pezzo_classes(d, g, g, r) if r == 5 else []
        tasks["elliptic"] = lambda: [s for s in elliptic_cone_classes(d, r) if s.genus == g]
        tasks["rational"] = lambda: [s for s in rational_cone_classes(d, r) if s.genus == g]
    with ThreadPoolExecutor(max_workers=len(tasks)) as pool:
        futures = {name: pool.submit(fn) for name, fn in tasks.items()}
        found = {name: fut.result() for name, fut in futures.items()}

    kept, absorbed, notes = [], [], []
    if restricted:
        notes.append("genus above the second bound: only surfaces of minimal degree")
    for sol in found["scroll"]:
        report = _scroll_component(sol, d, g, r)
        if _scroll_realizable(sol.cls):
            kept.append(report)
        else:
            absorbed.append(replace(report, notes=("no irreducible member on any scroll model",)))
    if restricted:
        return kept, absorbed, notes

    dp_kept, dp_absorbed = _delpezzo_components(found["delpezzo"], d, g, r)
    kept += dp_kept
    absorbed += dp_absorbed
    for sol in found["elliptic"]:
        report = _elliptic_cone_report(sol, d, g, r)
        if report is None:
            notes.append(f"elliptic cone k={sol.cls.a} with vertex multiplicity "
                         f"{sol.vertex_multiplicity}: family not counted")
            continue
        k = sol.cls.a
        limit = BlowupClass(3 * k, (k,) * (9 - r))
        if any(c.cls == limit and c.family_dim >= report.family_dim for c in dp_kept):
            absorbed.append(replace(report, notes=report.notes + (
                f"flat limit of curves of class {limit.run_length()} on del Pezzo surfaces",)))
        else:
            kept.append(report)
    for sol in found["rational"]:
        if not sol.smooth:
            continue
        kept.append(ComponentReport(f"rational cone k={sol.cls.a}", "RationalCone", sol.cls,
                                    rational_cone_family_dim(sol), chi_expected(d, g, r),
                                    sol.cls.a, "ruling", g > pi(d, r + 1)))
    return kept, absorbed, notes


# ------------------------------------------------------- linear-series routes

def _series_candidates(d: int, g: int, r: int):
    """Families read off the hyperplane series and its residual."""
    out, notes = [], []
    chi = chi_expected(d, g, r)
    aut = aut_dim_projective(r)
    alpha = speciality(d, g, r)
    if rho(d, g, r) >= 0:
        out.append(ComponentReport("general", None, None, chi, chi, gonality_bn(g),
                                   "general curve", alpha >= 0))
    elif alpha == 3:
        plane = 2 * g - 2 - d
        try:
            base = severi_plane_dim(plane, g) - 8
        except ValueError:
            base = None
        if base is not None:
            out.append(ComponentReport(
                f"plane model degree {plane}", None, None, base + aut, chi, plane - 2,
                "node pencil of nodal plane model", True,
                notes=(f"residual series is a birational net of degree {plane}",)))
    elif alpha == 2:
        k = 2 * g - 2 - d
        out.append(ComponentReport(f"residual pencil k={k}", None, None,
                                   dim_pencil_locus(g, k) + aut, chi, k, "residual pencil", True))

    if d >= g:
        top = max_birational_dim(d, g)
        for n in range(r + 1, top + 1):
            report = _projection_candidate(d, g, r, n)
            if report is not None:
                out.append(report)
    return out, notes


def _projection_candidate(d: int, g: int, r: int, n: int) -> ComponentReport | None:
    """Curves in P^r projected from a complete g^n_d, n > r."""
    beta = g - d + n
    if beta < 1:
        return None
    aut = aut_dim_projective(r)
    chi = chi_expected(d, g, r)
    residual_deg, residual_dim = 2 * g - 2 - d, beta - 1
    grass = grassmannian_dim(r, n)
    if g > pi(d, n):
        return None
    if g == pi(d, n):
        sols = scroll_classes(d, g, n)
        if not sols:
            return None
        k = min(s.cls.a for s in sols)
        base, how = dim_pencil_locus(g, k), "extremal curve on a scroll"
        label = {3: "projection trigonal"}.get(k, f"projection {k}-gonal")
    elif residual_dim == 0:
        k = None
        base, how = 3 * g - 3 + residual_deg, "effective residual divisor"
        label = "projection special divisor"
    elif residual_dim == 1:
        k = residual_deg
        base, how = dim_pencil_locus(g, k), "residual pencil"
        label = f"projection residual pencil k={k}"
    elif residual_dim == 2:
        k = residual_deg - 2
        try:
            base = severi_plane_dim(residual_deg, g) - 8
        except ValueError:
            return None
        how, label = "residual nodal plane model", f"projection plane model degree {residual_deg}"
    else:
        return None
    return ComponentReport(label, None, None, base + grass + aut, chi, k, how, False,
                           notes=(f"projection of a g^{n}_{d}; base {base} + Grassmannian {grass}",))


# ------------------------------------------------------------------ analysis

def analyze(d: int, g: int, r: int) -> ClassificationRow:
    chi = chi_expected(d, g, r)
    notes = []
    if (d, r) != (15, 5):
        notes.append("outside the fully supported case d=15, r=5: best effort")
    if g > pi(d, r):
        candidates, absorbed = [], []
        notes.append(f"genus exceeds the Castelnuovo bound {pi(d, r)}")
    elif (d, g, r) in reference.EXTERNAL_ONLY:
        candidates, absorbed = [], []
        notes.append(reference.EXTERNAL_ONLY[(d, g, r)])
    else:
        series, series_notes = _series_candidates(d, g, r)
        surf, absorbed, surf_notes = _surface_candidates(d, g, r)
        notes += series_notes + surf_notes
        candidates = []
        for report in series + surf:
            if report.family_dim < chi:
                absorbed.append(replace(report, notes=report.notes + (
                    f"dimension {report.family_dim} below expected {chi}",)))
            else:
                candidates.append(report)

    candidates = [_attach_moduli(c, d, g, r) for c in candidates]
    n = len(candidates)
    engine_verdict = (reference.EMPTY if n == 0 else
                      reference.IRREDUCIBLE if n == 1 else reference.REDUCIBLE)
    known = reference.CLASSIFICATION.get((d, r), {}).get(g)
    if known is not None:
        verdict, count = known
        source = "paper"
        if (d, g, r) not in reference.EXTERNAL_ONLY and (verdict, count) != (
                engine_verdict, n if verdict != reference.EMPTY else 0):
            notes.append(f"engine finds {n} candidate families")
    else:
        verdict, count, source = engine_verdict, n, "engine"
    return ClassificationRow(d, g, r, verdict, count, source, chi,
                             tuple(sorted(candidates, key=lambda c: (-c.family_dim, c.label))),
                             tuple(absorbed), tuple(notes))


def _attach_moduli(report: ComponentReport, d: int, g: int, r: int) -> ComponentReport:
    fiber = reference.MODULI_FIBERS.get((d, g, r, report.label))
    if fiber is None:
        return report
    return replace(report, moduli_image_dim=moduli_image_dim(report, fiber, r),
                   notes=report.notes + (f"moduli fiber structure imported: {fiber!r}",))


@dataclass(frozen=True)
class ClassificationTable:
    d: int
    r: int
    rows: tuple[ClassificationRow, ...] = field(default=())

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "d": self.d, "r": self.r,
                "rows": [row.to_json() for row in self.rows]}


def classification_table(d: int, r: int, genera) -> ClassificationTable:
    return ClassificationTable(d, r, tuple(analyze(d, g, r) for g in genera))


def _gon(c: ComponentReport) -> str:
    return "?" if c.gonality is None else str(c.gonality)


def row_markdown(row: ClassificationRow) -> str:
    if row.components:
        comps = "; ".join(f"{c.label} (dim {c.family_dim}, gon {_gon(c)})" for c in row.components)
    else:
        comps = "none" if row.verdict == reference.EMPTY else "see notes"
    verdict = row.verdict
    if row.verdict == reference.REDUCIBLE:
        verdict += f" ({row.n_components if row.n_components is not None else '?'})"
    return f"| {row.g} | {verdict} | {row.expected_dim} | {comps} | {row.verdict_source} |"


def table_markdown(table: ClassificationTable) -> str:
    lines = [f"Hilbert schemes of degree {table.d} curves in P^{table.r}", "",
             "| g | verdict | expected dim | components | source |",
             "|---|---|---|---|---|"]
    lines += [row_markdown(row) for row in table.rows]
    return "\n".join(lines) + "\n"
