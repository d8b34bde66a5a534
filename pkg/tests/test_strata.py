from itertools import combinations

import pytest

from rspinrel.cohft import RSpinTheory
from rspinrel.strata import (
    StabilityError,
    StableGraph,
    UnsupportedGenusError,
    Vertex,
    automorphism_order,
    canonical_divisor,
    delta_irr,
    delta_sep,
    divisor_class_of,
    divisor_generators,
    enumerate_contributing_graphs,
    excluded_contributions,
    kappa1,
    placement_count,
    psi,
)


class TestCanonicalDivisor:
    def test_genus_swap(self):
        got = canonical_divisor(delta_sep(2, ()), 2, 2)
        assert got == delta_sep(0, {1, 2})

    def test_higher_genus_identification(self):
        assert canonical_divisor(delta_sep(2, ()), 3, 0) == delta_sep(1, ())

    def test_psi_unchanged(self):
        assert canonical_divisor(psi(1), 1, 2) == psi(1)

    def test_idempotent_and_orbit_constant(self):
        g, n = 2, 3
        marks = set(range(1, n + 1))
        for h in range(g + 1):
            for size in range(n + 1):
                for S in combinations(sorted(marks), size):
                    try:
                        c1 = canonical_divisor(delta_sep(h, S), g, n)
                    except StabilityError:
                        continue
                    assert canonical_divisor(c1, g, n) == c1
                    partner = delta_sep(g - h, marks - set(S))
                    assert canonical_divisor(partner, g, n) == c1

    def test_unstable_rejected(self):
        with pytest.raises(StabilityError):
            canonical_divisor(delta_sep(0, {1}), 1, 2)
        with pytest.raises(StabilityError):
            canonical_divisor(delta_sep(0, ()), 2, 0)

    def test_bad_marking(self):
        with pytest.raises(ValueError):
            canonical_divisor(delta_sep(0, {5}), 1, 2)


class TestDivisorGenerators:
    def test_two_marked_genus_one(self):
        gens = divisor_generators(1, 2)
        assert gens == [psi(1), psi(2), kappa1(), delta_irr(), delta_sep(0, {1, 2})]

    def test_counts_follow_two_power_formula(self):
        for n in range(1, 7):
            assert len(divisor_generators(1, n)) == 2**n + 1

    def test_unmarked_genus_two(self):
        assert divisor_generators(2, 0) == [kappa1(), delta_irr(), delta_sep(1, ())]

    def test_genus_zero_rejected(self):
        with pytest.raises(UnsupportedGenusError):
            divisor_generators(0, 5)

    def test_unstable_rejected(self):
        with pytest.raises(StabilityError):
            divisor_generators(1, 0)

    def test_render_strings(self):
        assert psi(1).render() == "psi_1"
        assert kappa1().render() == "kappa_1"
        assert delta_irr().render() == "delta_irr"
        assert delta_sep(0, {1, 3}).render() == "delta_{0,{1,3}}"
        assert delta_sep(1, ()).render() == "delta_{1,{}}"


class TestEnumeration:
    def test_two_marked_genus_one(self):
        contribs = enumerate_contributing_graphs(1, 2, RSpinTheory(3))
        kinds = [c.kind for c in contribs]
        assert sorted(kinds) == [
            "dilaton_kappa",
            "leg_psi",
            "loop_edge",
            "separating_edge",
        ]
        assert placement_count(contribs) == 5

    def test_unmarked_genus_two(self):
        contribs = enumerate_contributing_graphs(2, 0, RSpinTheory(3))
        assert sorted(c.kind for c in contribs) == [
            "dilaton_kappa",
            "loop_edge",
            "separating_edge",
        ]
        assert placement_count(contribs) == 3

    def test_loop_automorphism_order(self):
        contribs = enumerate_contributing_graphs(1, 2, RSpinTheory(3))
        loop = next(c for c in contribs if c.kind == "loop_edge")
        assert loop.automorphism_order == 2
        assert loop.pushforward_degree == 2

    def test_symmetric_separating_graph(self):
        contribs = enumerate_contributing_graphs(2, 0, RSpinTheory(3))
        sep = next(c for c in contribs if c.kind == "separating_edge")
        assert sep.automorphism_order == 2
        assert sep.pushforward_degree == 2

    def test_asymmetric_separating_graph(self):
        contribs = enumerate_contributing_graphs(2, 1, RSpinTheory(3))
        seps = [c for c in contribs if c.kind == "separating_edge"]
        assert all(c.automorphism_order == 1 for c in seps)

    def test_genus_and_stability_of_all_graphs(self):
        theory = RSpinTheory(3)
        for g in (1, 2, 3):
            for n in range(0, 5):
                if 2 * g - 2 + n <= 0:
                    continue
                for contrib in enumerate_contributing_graphs(g, n, theory):
                    graph = contrib.graph
                    graph.validate()
                    # Independent recomputation of the genus formula.
                    betti = len(graph.edges) - len(graph.vertices) + 1
                    assert sum(v.genus for v in graph.vertices) + betti == g
                    for v in graph.vertices:
                        assert 2 * v.genus - 2 + v.valence > 0

    def test_unsupported_genus(self):
        with pytest.raises(UnsupportedGenusError):
            enumerate_contributing_graphs(4, 0, RSpinTheory(3))

    def test_exclusions_recorded(self):
        excluded = excluded_contributions(1, 2)
        assert len(excluded) >= 3
        assert all(f.reason for f in excluded)

    def test_brute_force_one_edge_match(self):
        # Independent oracle: enumerate one-edge stable graphs by direct
        # partition of genus and markings, compare canonical classes.
        theory = RSpinTheory(3)
        for n in (1, 2, 3):
            brute = set()
            marks = set(range(1, n + 1))
            if n > 0:  # loop vertex: genus 0 with n markings and two branches
                brute.add(delta_irr())
            for h in (0, 1):
                for size in range(n + 1):
                    for S in combinations(sorted(marks), size):
                        try:
                            brute.add(canonical_divisor(delta_sep(h, S), 1, n))
                        except StabilityError:
                            continue
            enumerated = {
                divisor_class_of(c.graph, 1, n)
                for c in enumerate_contributing_graphs(1, n, theory)
                if c.graph.edges
            }
            assert enumerated == brute


class TestDivisorClassOf:
    def test_loop(self):
        loop = StableGraph(
            vertices=(Vertex(0, frozenset({1, 2}), (0, 1)),), edges=((0, 1),)
        )
        assert divisor_class_of(loop, 1, 2) == delta_irr()

    def test_separating(self):
        sep = StableGraph(
            vertices=(
                Vertex(1, frozenset(), (0,)),
                Vertex(0, frozenset({1, 2}), (1,)),
            ),
            edges=((0, 1),),
        )
        assert divisor_class_of(sep, 1, 2) == delta_sep(0, {1, 2})

    def test_genus_two_split(self):
        sep = StableGraph(
            vertices=(Vertex(1, frozenset(), (0,)), Vertex(1, frozenset(), (1,))),
            edges=((0, 1),),
        )
        assert divisor_class_of(sep, 2, 0) == delta_sep(1, ())

    def test_dilaton_maps_to_kappa(self):
        graph = StableGraph(vertices=(Vertex(1, frozenset({1}), (), 1),))
        assert divisor_class_of(graph, 1, 1) == kappa1()

    def test_psi_leg(self):
        graph = StableGraph(vertices=(Vertex(1, frozenset({1, 2})),))
        assert divisor_class_of(graph, 1, 2, psi_leg=2) == psi(2)

    def test_undecorated_smooth_rejected(self):
        graph = StableGraph(vertices=(Vertex(1, frozenset({1, 2})),))
        with pytest.raises(ValueError):
            divisor_class_of(graph, 1, 2)


class TestStableGraph:
    def test_validation_catches_instability(self):
        bad = StableGraph(vertices=(Vertex(0, frozenset({1}), (0,)), Vertex(1, frozenset(), (1,))), edges=((0, 1),))
        with pytest.raises(StabilityError):
            bad.validate()

    def test_validation_catches_disconnected(self):
        bad = StableGraph(
            vertices=(Vertex(1, frozenset({1})), Vertex(1, frozenset({2}))),
        )
        with pytest.raises(ValueError):
            bad.validate()

    def test_automorphism_of_marked_smooth_graph(self):
        graph = StableGraph(vertices=(Vertex(1, frozenset({1, 2})),))
        assert automorphism_order(graph) == 1
