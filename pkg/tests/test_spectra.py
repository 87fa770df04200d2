"""Matrix pencil construction, spectra, and energy reports."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from alphaenergy import (AlphaValue, Graph, a_alpha_exact, a_alpha_matrix,
                         adjacency_matrix, alpha, alpha_energy,
                         alpha_spectrum, complete, complete_bipartite, cycle,
                         energy_sweep, multiset_deviation, petersen)
from conftest import graphs


class TestAlphaValue:
    def test_parse_exact(self):
        a = AlphaValue.parse("0.25")
        assert a.numeric == 0.25
        assert a.exact == Fraction(1, 4)
        assert AlphaValue.parse("0.3").exact == Fraction(3, 10)
        assert AlphaValue.parse("1").exact == 1

    def test_parse_long_decimal_loses_exactness(self):
        a = AlphaValue.parse("0.1234567")
        assert a.exact is None
        assert a.numeric == 0.1234567

    @pytest.mark.parametrize("text", ["-0.1", "1.5", "abc", "1e-2", ".5"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            AlphaValue.parse(text)

    def test_exact_must_match_numeric(self):
        with pytest.raises(ValueError):
            AlphaValue(numeric=0.5, exact=Fraction(1, 3))

    def test_coercions(self):
        assert alpha("0.5").exact == Fraction(1, 2)
        assert alpha(Fraction(1, 3)).exact == Fraction(1, 3)
        assert alpha(0).exact == 0
        assert alpha(0.5).exact is None
        assert alpha(alpha("0.1")) == alpha("0.1")

    def test_range(self):
        with pytest.raises(ValueError):
            AlphaValue(numeric=1.2)
        with pytest.raises(ValueError):
            alpha(Fraction(7, 5))


class TestMatrixPencil:
    def test_alpha_zero_is_adjacency(self):
        g = cycle(5)
        assert np.array_equal(a_alpha_matrix(g, alpha("0")).data,
                              adjacency_matrix(g))

    def test_alpha_one_is_degree_diagonal(self):
        g = complete_bipartite(2, 3)
        m = a_alpha_matrix(g, alpha("1")).data
        assert np.array_equal(m, np.diag([3.0, 3.0, 2.0, 2.0, 2.0]))

    def test_entries_at_alpha_03(self):
        m = a_alpha_matrix(cycle(4), alpha("0.3")).data
        assert m[0, 0] == pytest.approx(0.6)
        assert m[0, 1] == pytest.approx(0.7)
        assert m[0, 2] == 0.0

    def test_exact_matches_float(self):
        g = petersen()
        a = alpha("0.25")
        exact = a_alpha_exact(g, a)
        num = a_alpha_matrix(g, a).data
        assert max(abs(float(exact[i][j]) - num[i, j])
                   for i in range(g.p) for j in range(g.p)) == 0.0

    def test_exact_requires_rational_alpha(self):
        with pytest.raises(ValueError, match="rational"):
            a_alpha_exact(cycle(3), AlphaValue(numeric=0.5 ** 0.5 / 2))


class TestSpectrum:
    def test_k33_at_half(self):
        # regular shift: eigenvalues are a*r + (1-a)*lambda
        s = alpha_spectrum(complete_bipartite(3, 3), alpha("0.5"))
        assert multiset_deviation(s.values, [3.0, 1.5, 1.5, 1.5, 1.5, 0.0]) < 1e-10

    @given(graphs(max_p=9))
    @settings(max_examples=30, deadline=None)
    def test_trace(self, g):
        if g.p == 0:
            return
        for text in ("0", "0.3", "0.75", "1"):
            a = alpha(text)
            s = alpha_spectrum(g, a)
            assert abs(math.fsum(s.values) - 2 * a.numeric * g.q) < 1e-9

    @given(graphs(max_p=8))
    @settings(max_examples=20, deadline=None)
    def test_pencil_is_affine_in_alpha(self, g):
        if g.p == 0:
            return
        m0 = a_alpha_matrix(g, alpha("0")).data
        m1 = a_alpha_matrix(g, alpha("1")).data
        mid = a_alpha_matrix(g, alpha("0.25")).data
        assert np.abs(0.75 * m0 + 0.25 * m1 - mid).max() < 1e-12


class TestEnergy:
    def test_complete_graph_values(self):
        # 2(n-1)(1-a) for K_n
        assert alpha_energy(complete(8), alpha("0")).energy == pytest.approx(14.0)
        assert alpha_energy(complete(8), alpha("0.5")).energy == pytest.approx(7.0)

    def test_offset_uses_average_degree(self):
        rep = alpha_energy(cycle(4), alpha("0.25"))
        assert rep.offset == pytest.approx(0.5)
        assert (rep.p, rep.q) == (4, 4)

    def test_edgeless_graph_has_zero_energy(self):
        assert alpha_energy(Graph(5), alpha("0.5")).energy == 0.0

    def test_rejects_alpha_one(self):
        with pytest.raises(ValueError, match="alpha < 1"):
            alpha_energy(cycle(3), alpha("1"))

    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError):
            alpha_energy(Graph(0), alpha("0"))

    def test_graph_id_default_and_override(self):
        assert alpha_energy(cycle(3), alpha("0")).graph_id == "graph(p=3,q=3)"
        assert alpha_energy(cycle(3), alpha("0"), graph_id="C3").graph_id == "C3"

    def test_regular_identity(self, bases):
        # (1-a) times the adjacency energy, for regular graphs
        for _, g in bases:
            e0 = alpha_energy(g, alpha("0")).energy
            for text in ("0.1", "0.5", "0.9"):
                a = alpha(text)
                got = alpha_energy(g, a).energy
                assert abs(got - (1 - a.numeric) * e0) < 1e-9

    def test_energy_sweep(self):
        grid = [alpha(t) for t in ("0", "0.5")]
        reps = energy_sweep(petersen(), grid, graph_id="petersen")
        assert [r.alpha for r in reps] == grid
        assert all(r.graph_id == "petersen" for r in reps)
        assert reps[0].energy == pytest.approx(16.0)
        assert reps[1].energy == pytest.approx(8.0)

    @given(graphs(min_p=1, max_p=8))
    @settings(max_examples=30, deadline=None)
    def test_energy_positive_iff_edges(self, g):
        e = alpha_energy(g, alpha("0.5")).energy
        if g.q == 0:
            assert e == 0.0
        else:
            assert e > 1e-12
