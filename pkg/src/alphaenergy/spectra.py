"""Convex degree/adjacency matrix pencils and their energies.

For a graph G and weight a in [0, 1] the matrix is

    M_a(G) = a*D(G) + (1-a)*A(G)

and for a < 1 the energy is sum_i |lambda_i(M_a) - 2*a*q/p|, i.e.
deviations are measured from the average diagonal value.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import Graph, adjacency_matrix, degree_info
from .linalg import Spectrum, SymMatrix, sym_eigenvalues

_DECIMAL_RE = re.compile(r"^\d+(\.\d+)?$")


@dataclass(frozen=True)
class AlphaValue:
    """Weight in [0, 1]; carries an exact rational when one is known."""

    numeric: float
    exact: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.numeric <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.numeric}")
        if self.exact is not None and float(self.exact) != self.numeric:
            raise ValueError("exact alpha disagrees with numeric value")

    @classmethod
    def parse(cls, text: str) -> "AlphaValue":
        """Parse a decimal string; exact when it has at most 6 decimal digits."""
        text = text.strip()
        if not _DECIMAL_RE.match(text):
            raise ValueError(f"alpha must be a plain decimal, got {text!r}")
        _, _, frac_part = text.partition(".")
        exact = Fraction(text) if len(frac_part) <= 6 else None
        return cls(numeric=float(text), exact=exact)

    @classmethod
    def from_fraction(cls, fr: Fraction | int) -> "AlphaValue":
        fr = Fraction(fr)
        return cls(numeric=float(fr), exact=fr)


def alpha(x: "AlphaValue | Fraction | str | float | int") -> AlphaValue:
    """Coerce to AlphaValue: str parses, Fraction/int stay exact, float is numeric."""
    if isinstance(x, AlphaValue):
        return x
    if isinstance(x, str):
        return AlphaValue.parse(x)
    if isinstance(x, (Fraction, int)):
        return AlphaValue.from_fraction(x)
    return AlphaValue(numeric=float(x))


def a_alpha_matrix(g: Graph, a: AlphaValue) -> SymMatrix:
    deg = np.array(degree_info(g).degrees, dtype=float)
    m = (1.0 - a.numeric) * adjacency_matrix(g)
    m[np.diag_indices(g.p)] += a.numeric * deg
    return SymMatrix(m)


def a_alpha_exact(g: Graph, a: AlphaValue) -> list[list[Fraction]]:
    """Same matrix over exact rationals; needs an exact alpha."""
    if a.exact is None:
        raise ValueError("exact matrix needs a rational alpha")
    al = a.exact
    deg = degree_info(g).degrees
    rows = [[Fraction(0)] * g.p for _ in range(g.p)]
    for v in range(g.p):
        rows[v][v] = al * deg[v]
    w = 1 - al
    for i, j in g.edges:
        rows[i][j] = w
        rows[j][i] = w
    return rows


def alpha_spectrum(g: Graph, a: AlphaValue) -> Spectrum:
    return sym_eigenvalues(a_alpha_matrix(g, a))


@dataclass(frozen=True)
class EnergyReport:
    graph_id: str
    alpha: AlphaValue
    p: int
    q: int
    offset: float
    eigenvalues: Spectrum
    energy: float


def alpha_energy(g: Graph, a: AlphaValue, graph_id: Optional[str] = None) -> EnergyReport:
    """Energy report for one graph and one weight; rejects a = 1."""
    if a.numeric >= 1.0:
        raise ValueError("energy is defined for alpha < 1 only")
    if g.p < 1:
        raise ValueError("energy needs at least one vertex")
    spec = alpha_spectrum(g, a)
    offset = 2.0 * a.numeric * g.q / g.p
    energy = math.fsum(abs(v - offset) for v in spec.values)
    return EnergyReport(
        graph_id=graph_id if graph_id is not None else f"graph(p={g.p},q={g.q})",
        alpha=a, p=g.p, q=g.q, offset=offset,
        eigenvalues=spec, energy=energy)


def energy_sweep(g: Graph, alphas: Sequence[AlphaValue],
                 graph_id: Optional[str] = None) -> list[EnergyReport]:
    return [alpha_energy(g, a, graph_id=graph_id) for a in alphas]
