"""Energy comparisons: reference values, classification, sweep tables.

The complete graph K_n is the yardstick: its energy is 2*(n-1)*(1-a).
A graph on n vertices is borderenergetic when it matches that value
within tolerance without being K_n itself, and hyperenergetic when it
exceeds it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Optional, Sequence

from .graphs import Graph, complete, complete_bipartite, cycle
from .ops import (closed_shadow_graph, closed_splitting_graph, duplicate_graph,
                  ebd_graph, shadow_graph, splitting_graph)
from .spectra import AlphaValue, EnergyReport, alpha_energy

DEFAULT_TOL = 1e-6


def reference_energy(n: int, a: AlphaValue) -> float:
    """Energy of K_n: 2*(n-1)*(1-a)."""
    if n < 1:
        raise ValueError(f"reference needs n >= 1, got {n}")
    return 2.0 * (n - 1) * (1.0 - a.numeric)


@dataclass(frozen=True)
class ClassificationResult:
    graph_id: str
    alpha: float
    energy: float
    reference: float
    verdict: str                      # "borderenergetic" | "hyperenergetic" | "neither"
    equal_partners: tuple[str, ...]   # peers with energy within tolerance


def classify(g: Graph, a: AlphaValue,
             peers: Sequence[tuple[str, Graph]] = (),
             tol: float = DEFAULT_TOL,
             graph_id: Optional[str] = None) -> ClassificationResult:
    """Compare a graph's energy against K_n on the same order and against peers.

    Borderenergetic takes precedence over hyperenergetic when the energy
    sits within tolerance of the reference.
    """
    rep = alpha_energy(g, a, graph_id=graph_id)
    ref = reference_energy(g.p, a)
    if abs(rep.energy - ref) <= tol:
        verdict = "borderenergetic"
    elif rep.energy > ref + tol:
        verdict = "hyperenergetic"
    else:
        verdict = "neither"
    partners = tuple(
        label for label, peer in peers
        if abs(alpha_energy(peer, a).energy - rep.energy) <= tol)
    return ClassificationResult(
        graph_id=rep.graph_id, alpha=a.numeric, energy=rep.energy,
        reference=ref, verdict=verdict, equal_partners=partners)


# ----------------------------------------------------------------------
# sweep tables

@dataclass(frozen=True)
class SweepTable:
    """Energies of several graphs over a shared weight grid."""

    row_labels: tuple[str, ...]
    alphas: tuple[AlphaValue, ...]
    cells: tuple[tuple[float, ...], ...]   # cells[row][col], full precision


def sweep_table(rows: Sequence[tuple[str, Graph]],
                alphas: Sequence[AlphaValue]) -> SweepTable:
    cells = tuple(
        tuple(alpha_energy(g, a, graph_id=label).energy for a in alphas)
        for label, g in rows)
    return SweepTable(row_labels=tuple(label for label, _ in rows),
                      alphas=tuple(alphas), cells=cells)


def tenth_grid() -> tuple[AlphaValue, ...]:
    """The standard weight grid 0.0, 0.1, ..., 0.9."""
    return tuple(AlphaValue.from_fraction(Fraction(k, 10)) for k in range(10))


def table1_rows() -> list[tuple[str, Graph]]:
    """Row families for the headline energy table."""
    rows: list[tuple[str, Graph]] = []
    for label, g, n in (("C4", cycle(4), 8), ("C5", cycle(5), 10),
                        ("C6", cycle(6), 12), ("K3,3", complete_bipartite(3, 3), 12)):
        kn = ("K%d" % n, complete(n))
        if kn[0] not in {lbl for lbl, _ in rows}:
            rows.append(kn)
        rows.append((f"Spl({label})", splitting_graph(g, 1)))
        rows.append((f"Lambda({label})", closed_splitting_graph(g)))
        rows.append((f"D2[{label}]", closed_shadow_graph(g)))
        rows.append((f"Ebd({label})", ebd_graph(g)))
        rows.append((f"D2({label})", shadow_graph(g, 2)))
        rows.append((f"D({label})", duplicate_graph(g, 1)))
    return rows


def table1(alphas: Optional[Sequence[AlphaValue]] = None) -> SweepTable:
    """Headline energy sweep: splitting/closed-splitting/closed-shadow/ebd/
    shadow/duplicate of C4, C5, C6 and K3,3 next to matching complete graphs."""
    return sweep_table(table1_rows(), tuple(alphas) if alphas else tenth_grid())


def _fmt4(x: float) -> str:
    """Fixed 4-decimal formatting, ties away from zero."""
    return str(Decimal(repr(x)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def _alpha_label(a: AlphaValue) -> str:
    return f"alpha_{a.numeric!r}"


def format_csv(table: SweepTable) -> str:
    """CSV rendering: header 'graph,alpha_...', cells at 4 decimals."""
    lines = ["graph," + ",".join(_alpha_label(a) for a in table.alphas)]
    for label, row in zip(table.row_labels, table.cells):
        lines.append(label + "," + ",".join(_fmt4(x) for x in row))
    return "\n".join(lines) + "\n"


def format_table_json(table: SweepTable) -> str:
    out = {
        "alphas": [a.numeric for a in table.alphas],
        "rows": [{"graph": label, "energies": list(row)}
                 for label, row in zip(table.row_labels, table.cells)],
    }
    return json.dumps(out, indent=2) + "\n"


def energy_report_json(rep: EnergyReport, regular: Optional[int]) -> str:
    out = {
        "graph": {"id": rep.graph_id, "p": rep.p, "q": rep.q, "regular": regular},
        "alpha": rep.alpha.numeric,
        "offset": rep.offset,
        "eigenvalues": [{"value": v, "multiplicity": m}
                        for v, m in rep.eigenvalues.groups],
        "energy": rep.energy,
    }
    return json.dumps(out, indent=2) + "\n"


# ----------------------------------------------------------------------
# observation battery

@dataclass(frozen=True)
class BulletResult:
    key: str
    description: str
    passed: bool
    failures: tuple[str, ...] = ()


@dataclass(frozen=True)
class ObservationsReport:
    tol: float
    bullets: tuple[BulletResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(b.passed for b in self.bullets)


def _energy(g: Graph, a: AlphaValue) -> float:
    return alpha_energy(g, a).energy


def observations_report(tol: float = DEFAULT_TOL) -> ObservationsReport:
    """Check the headline equienergetic/borderenergetic/hyperenergetic claims
    over the 0.0..0.9 weight grid."""
    grid = tenth_grid()
    bases = [("C4", cycle(4)), ("C5", cycle(5)), ("C6", cycle(6)),
             ("K3,3", complete_bipartite(3, 3))]
    bullets: list[BulletResult] = []

    fails: list[str] = []
    for label, g in bases:
        d2 = shadow_graph(g, 2)
        dup = duplicate_graph(g, 1)
        for a in grid:
            gap = abs(_energy(d2, a) - _energy(dup, a))
            if gap > tol:
                fails.append(f"{label} alpha={a.numeric}: gap {gap:.3e}")
    bullets.append(BulletResult(
        key="shadow2-equals-duplicate",
        description="two-fold shadow and duplicate are equienergetic for every weight",
        passed=not fails, failures=tuple(fails)))

    fails = []
    d2c4 = closed_shadow_graph(cycle(4))
    for a in grid:
        gap = abs(_energy(d2c4, a) - reference_energy(8, a))
        if gap > tol:
            fails.append(f"alpha={a.numeric}: gap {gap:.3e}")
    bullets.append(BulletResult(
        key="closed-shadow-c4-borderenergetic",
        description="closed shadow of C4 matches the K8 energy for every weight",
        passed=not fails, failures=tuple(fails)))

    fails = []
    d2c6 = closed_shadow_graph(cycle(6))
    d2k33 = closed_shadow_graph(complete_bipartite(3, 3))
    for a in grid:
        e1, e2 = _energy(d2c6, a), _energy(d2k33, a)
        ref = reference_energy(12, a)
        if abs(e1 - e2) > tol:
            fails.append(f"alpha={a.numeric}: pair gap {abs(e1 - e2):.3e}")
        if abs(e1 - ref) > tol or abs(e2 - ref) > tol:
            fails.append(f"alpha={a.numeric}: reference gap")
    bullets.append(BulletResult(
        key="closed-shadow-c6-k33",
        description="closed shadows of C6 and K3,3 are equienergetic and both match K12",
        passed=not fails, failures=tuple(fails)))

    fails = []
    ebd_c6 = ebd_graph(cycle(6))
    d2_c6 = shadow_graph(cycle(6), 2)
    dup_c6 = duplicate_graph(cycle(6), 1)
    for a in grid:
        e = _energy(ebd_c6, a)
        if abs(e - _energy(d2_c6, a)) > tol or abs(e - _energy(dup_c6, a)) > tol:
            fails.append(f"alpha={a.numeric}")
    bullets.append(BulletResult(
        key="ebd-c6-equienergetic",
        description="extended bipartite double of C6 matches shadow and duplicate of C6",
        passed=not fails, failures=tuple(fails)))

    fails = []
    for p in range(2, 6):
        d2kpp = closed_shadow_graph(complete_bipartite(p, p))
        for a in grid:
            gap = abs(_energy(d2kpp, a) - reference_energy(4 * p, a))
            if gap > tol:
                fails.append(f"p={p} alpha={a.numeric}: gap {gap:.3e}")
    bullets.append(BulletResult(
        key="closed-shadow-kpp-borderenergetic",
        description="closed shadow of K_{p,p} matches the K_{4p} energy (p=2..5)",
        passed=not fails, failures=tuple(fails)))

    fails = []
    for label, g in bases:
        spl = splitting_graph(g, 1)
        for a in grid:
            if a.numeric < 0.3:
                continue
            e = _energy(spl, a)
            ref = reference_energy(spl.p, a)
            if not e > ref + tol:
                fails.append(f"Spl({label}) alpha={a.numeric}: "
                             f"energy {e:.4f} <= reference {ref:.4f}")
    bullets.append(BulletResult(
        key="splitting-hyperenergetic",
        description="one-fold splitting is hyperenergetic for weights >= 0.3",
        passed=not fails, failures=tuple(fails)))

    return ObservationsReport(tol=tol, bullets=tuple(bullets))
