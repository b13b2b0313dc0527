import math

import pytest

from zetaforge.catalog import ade_graph, dimer_graph
from zetaforge.graphs import MixedGraph, normalize
from zetaforge.intpoly import IntPoly
from zetaforge.zeta import (STRONG, TRIVIAL, VIOLATED, adjacency_spectrum,
                            analyze, directed_zeta_inverse, is_ramanujan,
                            xi_functional_check, zeta_inverse)


def P(*coeffs):
    return IntPoly(coeffs)


def cycle_zeta(n):
    expect = [0] * (2 * n + 3)
    expect[0], expect[n + 1], expect[2 * n + 2] = 1, -2, 1
    return IntPoly(expect)


DP0 = MixedGraph(3, arrows=tuple([(0, 1)] * 3 + [(1, 2)] * 3 + [(2, 0)] * 3))
SINGLE_EDGE = MixedGraph(2, edges=((0, 1),))


class TestZetaInverse:
    def test_cycles_match_closed_form(self):
        for n in range(2, 12):
            assert zeta_inverse(ade_graph("A", n)) == cycle_zeta(n)

    def test_triple_arrow_cycle(self):
        assert zeta_inverse(DP0) == P(1, 0, 0, -27)

    def test_three_loops(self):
        clover = MixedGraph(1, edges=((0, 0),) * 3)
        assert zeta_inverse(clover) == P(1, 0, -1) ** 2 * P(1, -6, 5)

    def test_tree_is_unit(self):
        assert zeta_inverse(SINGLE_EDGE) == P(1)
        path4 = MixedGraph(4, edges=((0, 1), (1, 2), (2, 3)))
        assert zeta_inverse(path4) == P(1)

    def test_constant_term_one_on_samples(self):
        for g in (DP0, ade_graph("A", 3), dimer_graph([3, 4]),
                  ade_graph("D", 5, with_loops=True)):
            assert zeta_inverse(g).constant_term == 1

    def test_disconnected_graph_multiplies(self):
        two_triangles = MixedGraph(6, edges=((0, 1), (1, 2), (0, 2),
                                             (3, 4), (4, 5), (3, 5)))
        assert zeta_inverse(two_triangles) == \
            zeta_inverse(ade_graph("A", 2)) ** 2


class TestDirectedShortcut:
    def test_doubled_arrow_cycles(self):
        h1 = MixedGraph(4, arrows=tuple([(0, 1)] * 2 + [(1, 2)] * 2
                                        + [(2, 3)] * 2 + [(3, 0)] * 2))
        assert directed_zeta_inverse(h1) == P(1, 0, 0, 0, -16)
        assert zeta_inverse(h1) == P(1, 0, 0, 0, -16)

    def test_second_phase(self):
        h2 = MixedGraph(4, arrows=tuple([(0, 1)] * 2 + [(0, 3)] * 2
                                        + [(1, 2)] * 2 + [(2, 0)] * 4
                                        + [(3, 2)] * 2))
        assert directed_zeta_inverse(h2) == P(1, 0, 0, -32)

    def test_isolated_nodes(self):
        assert directed_zeta_inverse(MixedGraph(3)) == P(1)

    def test_rejects_edges(self):
        with pytest.raises(ValueError):
            directed_zeta_inverse(SINGLE_EDGE)

    def test_agrees_with_general_formula(self):
        for g in (DP0,
                  MixedGraph(2, arrows=((0, 1), (0, 1), (1, 0))),
                  MixedGraph(3, arrows=((0, 1), (1, 2), (2, 0), (0, 2)))):
            g = normalize(g)
            if g.edges:
                continue
            assert directed_zeta_inverse(g) == zeta_inverse(g)


class TestAnalyze:
    def test_triple_arrow_cycle_strong(self):
        report = analyze(DP0)
        assert report.classification == STRONG
        assert abs(report.r_g - 1 / 3) < 1e-10
        assert report.ramanujan is None  # chiral graph

    def test_mixed_valency_dimer_violates(self):
        assert analyze(dimer_graph([3, 4])).classification == VIOLATED

    def test_double_edge_strong_with_unit_radius(self):
        report = analyze(MixedGraph(2, edges=((0, 1), (0, 1))))
        assert report.classification == STRONG
        assert abs(report.r_g - 1.0) < 1e-10

    def test_forest_is_trivial(self):
        report = analyze(SINGLE_EDGE)
        assert report.classification == TRIVIAL
        assert report.r_g == math.inf
        assert report.kotani_sunada_ok

    def test_pole_moduli_bounded_by_one_on_undirected(self):
        for g in (ade_graph("A", 5), dimer_graph([3, 4]),
                  ade_graph("E", 6, with_loops=True),
                  MixedGraph(2, edges=((0, 1), (1, 1), (1, 1)))):
            report = analyze(g)
            for mod in report.poles.moduli():
                assert report.r_g - 1e-8 <= mod <= 1 + 1e-8

    def test_chiral_poles_may_leave_unit_disc(self):
        # the [R, 1] pole bound is an undirected-graph fact: this chiral
        # quiver (two cycles of coprime lengths sharing structure) has a
        # real pole beyond 1
        from zetaforge.rootfind import find_roots
        chiral = normalize(MixedGraph(
            5, arrows=((0, 1), (0, 4), (1, 2), (1, 2), (2, 3), (2, 0),
                       (3, 0), (3, 4), (4, 1), (4, 2))))
        report = analyze(chiral)
        assert max(report.poles.moduli()) > 1 + 1e-8
        assert find_roots(report.zeta_inverse).total_multiplicity == \
            report.zeta_inverse.degree

    def test_regular_graphs_never_weak(self):
        for g in (ade_graph("A", 4), dimer_graph([3, 3]),
                  ade_graph("A", 7, with_loops=True)):
            profile_ok = analyze(g).classification
            assert profile_ok != "Weak"

    def test_kotani_sunada_on_undirected(self):
        report = analyze(dimer_graph([3, 3, 3, 5]))
        assert report.kotani_sunada_ok
        assert 1 / report.q - 1e-8 <= report.r_g <= 1 / report.p + 1e-8

    def test_json_round_trip_fields(self):
        doc = analyze(DP0).to_json_dict()
        assert doc["classification"] == "Strong"
        assert doc["zeta_inverse"] == ["1", "0", "0", "-27"]
        assert doc["ramanujan"] is None
        assert doc["connected"] is True


class TestRamanujan:
    def test_plain_cycles(self):
        for n in (2, 5, 9):
            assert is_ramanujan(ade_graph("A", n))

    def test_single_loop_node(self):
        assert is_ramanujan(ade_graph("A", 0))

    def test_loop_decorated_cycle_fails_for_large_n(self):
        assert not is_ramanujan(ade_graph("A", 10, with_loops=True))

    def test_rejects_irregular(self):
        with pytest.raises(ValueError):
            is_ramanujan(MixedGraph(2, edges=((0, 1), (1, 1))))

    def test_rejects_chiral(self):
        with pytest.raises(ValueError):
            is_ramanujan(DP0)

    def test_matches_strong_classification_on_regular(self):
        for g in (ade_graph("A", 3), dimer_graph([4]),
                  ade_graph("A", 8, with_loops=True)):
            assert is_ramanujan(g) == (analyze(g).classification == STRONG)


class TestXiFunctionalEquation:
    def test_cycles(self):
        for n in (2, 3, 6):
            assert xi_functional_check(ade_graph("A", n))

    def test_single_loop_node(self):
        assert xi_functional_check(ade_graph("A", 0))

    def test_degenerate_tree_rejected(self):
        with pytest.raises(ValueError):
            xi_functional_check(SINGLE_EDGE)

    def test_rejects_irregular(self):
        with pytest.raises(ValueError):
            xi_functional_check(dimer_graph([3, 4]))

    def test_loop_decorated_cycles(self):
        assert xi_functional_check(ade_graph("A", 4, with_loops=True))


class TestSpectrum:
    def test_triangle(self):
        spec = sorted((round(lam.real, 9), m)
                      for lam, m in adjacency_spectrum(ade_graph("A", 2)))
        assert spec == [(-1.0, 2), (2.0, 1)]

    def test_parallel_edge_dimer(self):
        spec = sorted((round(lam.real, 9), m)
                      for lam, m in adjacency_spectrum(dimer_graph([4])))
        assert spec == [(-4.0, 1), (4.0, 1)]

    def test_isolated_nodes(self):
        spec = list(adjacency_spectrum(MixedGraph(3)))
        assert spec == [(0j, 3)]

    def test_chiral_spectrum_complex(self):
        spec = adjacency_spectrum(DP0)
        assert any(abs(lam.imag) > 0.1 for lam, _ in spec)
