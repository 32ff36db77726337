from fractions import Fraction
from itertools import combinations
from math import log

import networkx as nx
from django.test import SimpleTestCase
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st

from graphs.services import (
    Graph,
    GraphDomainError,
    GuardExceeded,
    gen_counterexample,
    gen_grid,
    gen_random_sparse,
    gen_twin_stars,
)
from domination.services import (
    ROUNDS,
    CoverDomainError,
    DominatorIndex,
    Mode,
    TMode,
    alpha_strong,
    closure_P,
    compute_Dhat,
    compute_Dprime,
    cover_with_budget,
    dominators_P,
    enumerate_max_sequences,
    enumerate_pseudocovers,
    exact_min_domset,
    exhaustive_min_domset,
    greedy_domset,
    is_pseudocover,
    make_params,
    phase1,
    phase2,
    phase3,
    plain_sequences,
    pseudocover_from_cover,
    run_distributed,
    run_full,
    run_reference,
    verify_dominating,
)


# =============================================================================
# Fixtures
# =============================================================================

def path(n):
    return Graph.from_edges(((i, i + 1) for i in range(n - 1)), range(n))


def cycle(n):
    return Graph.from_edges((i, (i + 1) % n) for i in range(n))


def star(leaves):
    return Graph.from_edges((0, i) for i in range(1, leaves + 1))


@st.composite
def small_graphs(draw, min_vertices=1, max_vertices=9):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, range(n))


# Smallest twin-star gadget whose hub meets the sequence threshold for k=2, t=3
GENUINE_D = 532

# k = 2, alpha = 1/2, ell = 2, q = 1: phase-2 machinery on tiny graphs
SMALL = make_params(1, t=3, ell=2, q=1)

# Same, with thresholds low enough for a hub of five leaves to start a sequence
SEQUENCES = make_params(1, t=3, ell=2, q=1, thresholds=(5, 5))


# =============================================================================
# Params Tests
# =============================================================================

class MakeParamsTestCase(SimpleTestCase):
    """Tests for make_params"""

    def test_derived_constants(self):
        """Test k, alpha, ell and q from nabla1 = 3"""
        params = make_params(3, t=TMode.BOUND)
        self.assertEqual((params.k, params.alpha, params.ell, params.q), (6, Fraction(1, 6), 865, 5184))
        self.assertEqual(params.alpha * params.k, 1)
        self.assertEqual(params.t, 7)
        self.assertTrue(params.genuine)

    def test_fractional_nabla1_rounds_up(self):
        """Test a non-integer bound is rounded up before doubling"""
        self.assertEqual(make_params(Fraction(3, 2), t=4).k, 4)

    def test_exact_t(self):
        """Test exact mode uses the excluded biclique, clamped to 2"""
        self.assertEqual(make_params(2, gen_grid(4, 4)).t, 3)
        self.assertEqual(make_params(1, path(5)).t, 2)
        self.assertEqual(make_params(1, Graph.from_edges([], range(3))).t, 2)

    def test_thresholds(self):
        """Test sequence thresholds for k = 2, t = 3"""
        params = make_params(1, t=3)
        self.assertEqual(params.threshold(1), 532)
        self.assertEqual(params.threshold(2), 136)
        self.assertEqual(params.threshold(3), 3)
        self.assertEqual(params.sequence_threshold, params.cleanup_bound)

    def test_factor(self):
        """Test the approximation factor for k = 2, t = 3"""
        self.assertEqual(make_params(1, t=3).factor, 2 + 3 * 4 ** 15 + 532)

    def test_override_marks_nonconforming(self):
        """Test overrides flag the params and cap the sequence length"""
        params = make_params(1, t=3, ell=2, q=1, thresholds=(5, 4))
        self.assertTrue(params.nonconforming)
        self.assertEqual(params.threshold(2), 4)
        self.assertIsNone(params.threshold(3))

    def test_invalid_inputs(self):
        """Test bad nabla1, t and exact mode without a graph"""
        with self.assertRaises(ValueError):
            make_params(0, t=3)
        with self.assertRaises(ValueError):
            make_params(1, t=1)
        with self.assertRaises(ValueError):
            make_params(1)


# =============================================================================
# Cover Tests
# =============================================================================

class CoverWithBudgetTestCase(SimpleTestCase):
    """Tests for cover_with_budget"""

    def test_singleton_target(self):
        """Test a single vertex may cover itself"""
        self.assertEqual(cover_with_budget(path(3), {0}, 1, 1), {0})

    def test_counterexample_coverable(self):
        """Test N(w^1) in G(2, 3) is covered by v_1 and v_2"""
        graph = gen_counterexample(2, 3)
        w1 = 2
        self.assertEqual(graph.neighbors(w1), {0, 5, 6})
        self.assertEqual(cover_with_budget(graph, graph.neighbors(w1), w1, 2), {0, 1})

    def test_counterexample_not_coverable(self):
        """Test N(w^1) in G(5, 4) needs five dominators"""
        graph = gen_counterexample(5, 4)
        w1 = 5
        self.assertIsNone(cover_with_budget(graph, graph.neighbors(w1), w1, 2))
        self.assertIsNone(cover_with_budget(graph, graph.neighbors(w1), w1, 4))
        self.assertIsNotNone(cover_with_budget(graph, graph.neighbors(w1), w1, 5))

    def test_empty_target(self):
        """Test the empty set is covered by nothing"""
        self.assertEqual(cover_with_budget(path(3), set(), 0, 0), frozenset())

    def test_candidate_pool(self):
        """Test covers only use the given pool"""
        graph = star(4)
        self.assertIsNone(cover_with_budget(graph, {1, 2}, None, 1, candidate_pool={1, 2}))
        self.assertEqual(cover_with_budget(graph, {1, 2}, None, 2, candidate_pool={1, 2}), {1, 2})

    @given(small_graphs(max_vertices=8), st.integers(min_value=0, max_value=3), st.data())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_exact_decision(self, graph, budget, data):
        """Test the answer matches enumeration of all small covers"""
        v = data.draw(st.sampled_from(graph.vertices))
        W = graph.neighbors(v)
        found = cover_with_budget(graph, W, v, budget)
        pool = sorted(graph.closed_neighborhood_of(W) - {v})
        exists = any(
            W <= graph.closed_neighborhood_of(Z)
            for size in range(budget + 1)
            for Z in combinations(pool, size)
        )
        self.assertEqual(found is not None, exists)
        if found is not None:
            self.assertLessEqual(len(found), budget)
            self.assertNotIn(v, found)
            self.assertTrue(W <= graph.closed_neighborhood_of(found))


class AlphaStrongTestCase(SimpleTestCase):
    """Tests for alpha_strong"""

    def test_star_center(self):
        """Test only the center is strong for its leaves"""
        self.assertEqual(alpha_strong(star(4), {1, 2, 3, 4}, Fraction(1, 2)), {0})

    def test_dominating_vertex(self):
        """Test a vertex covering all of W is strong for alpha <= 1"""
        self.assertIn(0, alpha_strong(star(4), {1, 2, 3, 4}, Fraction(1)))

    def test_cycle(self):
        """Test every vertex of C6 is 1/3-strong for {0, 2, 4}"""
        self.assertEqual(alpha_strong(cycle(6), {0, 2, 4}, Fraction(1, 3)), frozenset(range(6)))

    def test_empty_target(self):
        """Test an empty W is a domain error"""
        with self.assertRaises(CoverDomainError):
            alpha_strong(cycle(6), set(), Fraction(1, 2))


# =============================================================================
# Pseudo-cover Tests
# =============================================================================

class EnumeratePseudocoversTestCase(SimpleTestCase):
    """Tests for enumerate_pseudocovers"""

    def test_twin_covers(self):
        """Test hub and twin are both length-1 pseudo-covers of N(hub)"""
        covers = enumerate_pseudocovers(gen_twin_stars(5), 0, SMALL)
        self.assertEqual([c.sequence for c in covers], [(0,), (1,)])
        for cover in covers:
            self.assertEqual(cover.residual, frozenset())

    def test_small_neighborhood(self):
        """Test |N(v)| <= ell gives no pseudo-covers"""
        self.assertEqual(enumerate_pseudocovers(path(5), 2, SMALL), [])

    def test_every_result_is_valid(self):
        """Test each emitted sequence satisfies the four conditions"""
        graph = gen_random_sparse(30, 6, seed=4)
        for v in graph.vertices:
            for cover in enumerate_pseudocovers(graph, v, SMALL):
                self.assertTrue(is_pseudocover(graph, graph.neighbors(v), cover.sequence, SMALL))

    def test_genuine_count_bound(self):
        """Test the pseudo-cover count bound on the genuine twin-star gadget"""
        graph = gen_twin_stars(GENUINE_D)
        params = make_params(1, graph)
        covers = enumerate_pseudocovers(graph, 0, params)
        self.assertEqual([c.sequence for c in covers], [(0,), (1,)])
        self.assertLessEqual(len(covers), params.pseudocover_count_bound)

    def test_mega_star(self):
        """Test a large star with genuine k = 2 has the center as only dominator"""
        graph = star(100)
        params = make_params(1, graph)
        self.assertEqual(dominators_P(graph, 0, params), {0})
        self.assertLessEqual(len(enumerate_pseudocovers(graph, 0, params)), params.pseudocover_count_bound)


class IsPseudocoverTestCase(SimpleTestCase):
    """Tests for is_pseudocover"""

    def test_conditions(self):
        """Test each failing condition rejects the sequence"""
        graph = gen_twin_stars(5)
        W = graph.neighbors(0)
        self.assertTrue(is_pseudocover(graph, W, (1,), SMALL))
        self.assertFalse(is_pseudocover(graph, W, (), SMALL))
        self.assertFalse(is_pseudocover(graph, W, (2,), SMALL))
        self.assertFalse(is_pseudocover(graph, W, (0, 1), SMALL))
        self.assertFalse(is_pseudocover(graph, W, (0, 1, 2), SMALL))


class PseudocoverFromCoverTestCase(SimpleTestCase):
    """Tests for pseudocover_from_cover"""

    def test_single_vertex_cover(self):
        """Test a one-vertex cover becomes a length-1 pseudo-cover"""
        graph = gen_twin_stars(5)
        cover = pseudocover_from_cover(graph, graph.neighbors(0), {1}, SMALL)
        self.assertEqual(cover.sequence, (1,))
        self.assertEqual(cover.residual, frozenset())

    def test_weak_second_vertex_dropped(self):
        """Test a vertex covering fewer than ell new elements is cut off"""
        W = range(10, 20)
        graph = Graph.from_edges([*((0, w) for w in range(10, 17)), *((1, w) for w in range(17, 20))])
        params = make_params(1, t=3, ell=4, q=4)
        cover = pseudocover_from_cover(graph, W, {0, 1}, params)
        self.assertEqual(cover.sequence, (0,))
        self.assertEqual(cover.residual, {17, 18, 19})

    def test_preconditions(self):
        """Test non-covers, oversized covers and small targets are rejected"""
        graph = gen_twin_stars(5)
        W = graph.neighbors(0)
        with self.assertRaises(CoverDomainError):
            pseudocover_from_cover(graph, W, {2}, SMALL)
        with self.assertRaises(CoverDomainError):
            pseudocover_from_cover(graph, W, {0, 1, 2}, SMALL)
        with self.assertRaises(CoverDomainError):
            pseudocover_from_cover(graph, W, {1}, make_params(1, t=3, q=10))

    def test_prefix_leaves_too_much(self):
        """Test overridden constants can leave more than q uncovered"""
        graph = gen_twin_stars(5)
        with self.assertRaises(CoverDomainError):
            pseudocover_from_cover(graph, graph.neighbors(0), {1}, make_params(1, t=3, ell=100, q=1))

    @given(small_graphs(min_vertices=3), st.data())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_result_is_pseudocover(self, graph, data):
        """Test converted covers satisfy the pseudo-cover conditions when q >= k * ell"""
        params = make_params(1, t=3, ell=1, q=2)
        v = data.draw(st.sampled_from(graph.vertices))
        W = graph.neighbors(v)
        assume(len(W) >= params.q)
        Z = cover_with_budget(graph, W, None, params.k)
        assume(Z is not None)
        cover = pseudocover_from_cover(graph, W, Z, params)
        self.assertTrue(is_pseudocover(graph, W, cover.sequence, params))
        self.assertTrue(set(cover.sequence) <= Z)


class DominatorsTestCase(SimpleTestCase):
    """Tests for dominators_P and closure_P"""

    def test_small_neighborhood(self):
        """Test |N(v)| <= ell gives no dominators"""
        self.assertEqual(dominators_P(path(4), 1, SMALL), frozenset())

    def test_twin_star(self):
        """Test hub and twin dominate each other's neighborhood"""
        graph = gen_twin_stars(5)
        self.assertEqual(dominators_P(graph, 0, SMALL), {0, 1})
        self.assertEqual(dominators_P(graph, 1, SMALL), {0, 1})

    def test_closure_depth_one(self):
        """Test depth 1 is the union of P over W"""
        graph = gen_random_sparse(25, 6, seed=9)
        W = {0, 1, 2, 3}
        expected = frozenset().union(*(dominators_P(graph, w, SMALL) for w in W))
        self.assertEqual(closure_P(graph, W, SMALL, 1), expected)

    def test_closure_monotone(self):
        """Test the closure grows with depth"""
        graph = gen_random_sparse(25, 6, seed=9)
        index = DominatorIndex(graph, SMALL)
        previous = frozenset()
        for depth in range(1, 5):
            current = index.closure({0, 5}, depth)
            self.assertTrue(previous <= current)
            previous = current

    def test_closure_of_small_neighborhoods(self):
        """Test the closure is empty when no neighborhood exceeds ell"""
        self.assertEqual(closure_P(cycle(8), {0, 3}, SMALL, 3), frozenset())

    def test_genuine_size_bound(self):
        """Test |P(v)| respects the dominator bound under genuine params"""
        graph = gen_twin_stars(GENUINE_D)
        params = make_params(1, graph)
        self.assertLessEqual(len(dominators_P(graph, 0, params)), params.dominator_bound)


# =============================================================================
# Sequence Tests
# =============================================================================

class EnumerateMaxSequencesTestCase(SimpleTestCase):
    """Tests for enumerate_max_sequences"""

    def test_below_threshold(self):
        """Test small neighborhoods start no sequence"""
        self.assertEqual(enumerate_max_sequences(gen_grid(5, 5), 12, make_params(3, t=3)), [])

    def test_only_start_is_legal(self):
        """Test a single threshold allows only the start vertex"""
        params = make_params(1, t=3, ell=2, q=1, thresholds=(5,))
        sequences = enumerate_max_sequences(gen_twin_stars(5), 0, params)
        self.assertEqual([s.sequence for s in sequences], [(0,)])
        self.assertTrue(sequences[0].maximal)

    def test_genuine_twin_star(self):
        """Test hub and twin form the only maximal sequences"""
        graph = gen_twin_stars(GENUINE_D)
        params = make_params(1, graph)
        self.assertEqual(params.t, 3)
        from_hub = enumerate_max_sequences(graph, 0, params)
        self.assertEqual([s.sequence for s in from_hub], [(0, 1)])
        self.assertEqual(len(from_hub[0].b_sets[1]), GENUINE_D)
        self.assertEqual([s.sequence for s in enumerate_max_sequences(graph, 1, params)], [(1, 0)])
        self.assertEqual(enumerate_max_sequences(graph, 2, params), [])
        for sequence in from_hub:
            self.assertLess(len(sequence), params.t)

    def test_b_sets_are_nested(self):
        """Test canonical B-sets shrink along the sequence"""
        graph = gen_random_sparse(30, 8, seed=2)
        params = make_params(1, t=3, ell=1, q=1, thresholds=(3, 2, 1))
        for v in graph.vertices:
            for sequence in enumerate_max_sequences(graph, v, params):
                for i in range(1, len(sequence)):
                    self.assertTrue(sequence.b_sets[i] <= sequence.b_sets[i - 1])
                    self.assertEqual(sequence.b_sets[i], graph.neighbors(sequence.sequence[i]) & sequence.b_sets[i - 1])
                self.assertEqual(len(set(sequence.sequence)), len(sequence))


class PlainSequencesTestCase(SimpleTestCase):
    """Tests for plain_sequences"""

    def test_twin_star(self):
        """Test the unrestricted procedure stops after hub and twin"""
        params = make_params(1, t=3)
        graph = gen_twin_stars(20)
        self.assertEqual(plain_sequences(graph, 0, params), [(0, 1)])

    def test_small_neighborhood(self):
        """Test a vertex below k^(t-1)(2t-1) starts nothing"""
        self.assertEqual(plain_sequences(gen_twin_stars(19), 0, make_params(1, t=3)), [])


# =============================================================================
# Phase Tests
# =============================================================================

class Phase1TestCase(SimpleTestCase):
    """Tests for phase1"""

    def test_star_center(self):
        """Test a star center with more than k leaves joins D1"""
        D1, dominated = phase1(star(5), make_params(1, t=3))
        self.assertEqual(D1, {0})
        self.assertEqual(dominated, frozenset(range(6)))

    def test_low_degree(self):
        """Test nothing joins D1 when every degree is at most k"""
        D1, dominated = phase1(cycle(6), make_params(1, t=3))
        self.assertEqual(D1, frozenset())
        self.assertEqual(dominated, frozenset())

    def test_counterexample(self):
        """Test every w^j of G(5, 4) joins D1 for k = 2"""
        D1, _ = phase1(gen_counterexample(5, 4), make_params(1, t=3))
        self.assertTrue({5, 6, 7, 8} <= D1)

    def test_at_most_twice_gamma(self):
        """Test |D1| <= 2 * gamma on small random graphs"""
        for seed in range(10):
            graph = gen_random_sparse(30, 3, seed)
            D1, _ = phase1(graph, make_params(2, graph))
            self.assertLessEqual(len(D1), 2 * exact_min_domset(graph).size)


class Phase2TestCase(SimpleTestCase):
    """Tests for phase2"""

    def test_no_large_neighborhoods(self):
        """Test D2 is empty when no vertex meets the threshold"""
        D2, dominated = phase2(gen_grid(6, 6), make_params(3, t=3))
        self.assertEqual((D2, dominated), (frozenset(), frozenset()))

    def test_twin_star_forest(self):
        """Test D2 is the hub and twin of every gadget"""
        graph = gen_twin_stars(5, copies=3)
        D2, dominated = phase2(graph, SEQUENCES)
        self.assertEqual(D2, {0, 1, 7, 8, 14, 15})
        self.assertLessEqual(len(D2), 2 * 3)
        self.assertEqual(dominated, frozenset(graph.vertices))

    def test_inside_closure_of_dprime(self):
        """Test D2 lies in the depth-t closure of D'"""
        graph = gen_twin_stars(GENUINE_D)
        params = make_params(1, graph)
        D2, _ = phase2(graph, params)
        Dprime = compute_Dprime(graph, exact_min_domset(graph, guard=GENUINE_D + 2).vertices, params.k)
        self.assertTrue(D2 <= closure_P(graph, Dprime, params, params.t))
        self.assertLessEqual(len(D2), params.closure_factor(params.t) * len(Dprime))


class Phase3TestCase(SimpleTestCase):
    """Tests for phase3"""

    def test_all_dominated(self):
        """Test nothing is left when everything is dominated"""
        self.assertEqual(phase3(cycle(5), range(5)), frozenset())

    def test_edgeless(self):
        """Test every vertex of an edgeless graph is left over"""
        graph = Graph.from_edges([], range(4))
        self.assertEqual(phase3(graph, set()), frozenset(range(4)))


class RunFullTestCase(SimpleTestCase):
    """Tests for run_full"""

    def test_single_vertex(self):
        """Test K1 is dominated by itself through D3"""
        result = run_full(Graph.from_edges([], [0]), 1, mode=Mode.DISTRIBUTED)
        self.assertEqual(result.D3, {0})
        self.assertEqual(result.rounds, ROUNDS)

    def test_grid(self):
        """Test the 5x5 grid result dominates within the factor"""
        graph = gen_grid(5, 5)
        result = run_full(graph, 3)
        gamma = exact_min_domset(graph).size
        self.assertEqual(gamma, 7)
        self.assertTrue(verify_dominating(graph, result.solution))
        self.assertLessEqual(len(result.solution), make_params(3, graph).factor * gamma)

    def test_phases_disjoint(self):
        """Test D1, D2 and D3 never overlap"""
        graph = gen_twin_stars(5, copies=2)
        result = run_reference(Graph.from_edges([*graph.edges, (0, 20), (0, 21), (0, 22)]), SMALL)
        self.assertFalse(result.D1 & result.D2)
        self.assertFalse(result.D1 & result.D3)
        self.assertFalse(result.D2 & result.D3)

    def test_genuine_twin_star(self):
        """Test the genuine gadget selects hub and twin in both modes"""
        graph = gen_twin_stars(GENUINE_D)
        result = run_full(graph, 1, mode=Mode.DISTRIBUTED)
        self.assertEqual(result.sets, (frozenset(), frozenset({0, 1}), frozenset()))
        self.assertEqual(result.stats.maximal_sequences, 2)
        self.assertEqual(result.stats.sequence_lengths, {2: 2})

    def test_deterministic(self):
        """Test identical inputs give identical results"""
        graph = gen_random_sparse(40, 3, seed=5)
        self.assertEqual(run_full(graph, 2), run_full(graph, 2))

    def test_needs_nabla1(self):
        """Test a missing bound is rejected"""
        with self.assertRaises(ValueError):
            run_full(path(3))

    @given(small_graphs(max_vertices=12))
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_modes_agree(self, graph):
        """Test reference and distributed runs give the same sets"""
        params = make_params(1, t=3, ell=1, q=1, thresholds=(3, 2, 1))
        reference = run_reference(graph, params)
        distributed = run_distributed(graph, params)
        self.assertEqual(distributed.sets, reference.sets)
        self.assertTrue(verify_dominating(graph, reference.solution))

    def test_modes_agree_on_random_instances(self):
        """Test seeded sparse random graphs agree across modes"""
        for seed in range(5):
            graph = gen_random_sparse(60, 4, seed)
            run_full(graph, 2, mode=Mode.BOTH)

    def test_constant_rounds(self):
        """Test grids with 100, 2500 and 10000 vertices use the same round count"""
        params = make_params(3, t=3)
        for n in (10, 50, 100):
            graph = gen_grid(n, n)
            distributed = run_distributed(graph, params)
            self.assertEqual(distributed.rounds, ROUNDS, n)
            self.assertEqual(distributed.sets, run_reference(graph, params).sets, n)


# =============================================================================
# Oracle Tests
# =============================================================================

class ExactMinDomsetTestCase(SimpleTestCase):
    """Tests for exact_min_domset"""

    def test_small_families(self):
        """Test C6, P7 and the Petersen graph"""
        self.assertEqual(exact_min_domset(cycle(6)).size, 2)
        self.assertEqual(exact_min_domset(path(7)).size, 3)
        petersen = Graph.from_edges(nx.petersen_graph().edges)
        self.assertEqual(exact_min_domset(petersen).size, 3)

    def test_counterexample_gamma(self):
        """Test G(3, 4) is dominated by v_1..v_3 and no smaller set"""
        graph = gen_counterexample(3, 4)
        result = exact_min_domset(graph)
        self.assertEqual(result.size, 3)
        self.assertTrue(verify_dominating(graph, {0, 1, 2}))
        w1 = 3
        self.assertIsNone(cover_with_budget(graph, graph.neighbors(w1), w1, 2))
        self.assertIsNotNone(cover_with_budget(graph, graph.neighbors(w1), w1, 3))

    def test_disconnected(self):
        """Test components are solved independently"""
        graph = Graph.from_edges([(0, 1), (1, 2), (5, 6)], [9])
        self.assertEqual(exact_min_domset(graph).size, 3)

    def test_guard(self):
        """Test graphs above the guard are refused"""
        with self.assertRaises(GuardExceeded):
            exact_min_domset(path(41))

    @given(small_graphs(max_vertices=10))
    @hypothesis_settings(max_examples=100, deadline=None)
    def test_matches_exhaustive(self, graph):
        """Test branch and bound agrees with subset enumeration"""
        exact = exact_min_domset(graph)
        self.assertTrue(verify_dominating(graph, exact.vertices))
        self.assertEqual(exact.size, exhaustive_min_domset(graph).size)
        self.assertGreaterEqual(greedy_domset(graph).size, exact.size)


class GreedyDomsetTestCase(SimpleTestCase):
    """Tests for greedy_domset"""

    def test_star(self):
        """Test the star center alone"""
        self.assertEqual(greedy_domset(star(6)).vertices, {0})

    def test_edgeless(self):
        """Test every isolated vertex is taken"""
        self.assertEqual(greedy_domset(Graph.from_edges([], range(5))).size, 5)

    def test_logarithmic_bound(self):
        """Test the 5x5 grid stays within (ln n + 1) * gamma"""
        graph = gen_grid(5, 5)
        result = greedy_domset(graph)
        self.assertTrue(verify_dominating(graph, result.vertices))
        self.assertLessEqual(result.size, (log(25) + 1) * 7)

    def test_ties_lowest_id(self):
        """Test ties go to the lowest vertex ID"""
        self.assertEqual(greedy_domset(path(2)).vertices, {0})


class VerifyDominatingTestCase(SimpleTestCase):
    """Tests for verify_dominating"""

    def test_cases(self):
        """Test all vertices, the empty set and an antipodal pair on C6"""
        graph = cycle(6)
        self.assertTrue(verify_dominating(graph, graph.vertices))
        self.assertFalse(verify_dominating(graph, set()))
        self.assertTrue(verify_dominating(graph, {0, 3}))
        self.assertFalse(verify_dominating(graph, {0, 1}))

    def test_unknown_vertex(self):
        """Test sets outside V(G) are a domain error"""
        with self.assertRaises(GraphDomainError):
            verify_dominating(cycle(6), {7})


class ComputeDprimeTestCase(SimpleTestCase):
    """Tests for compute_Dprime and compute_Dhat"""

    def test_everything(self):
        """Test D = V with k >= max degree gives D' = V"""
        graph = gen_grid(3, 3)
        self.assertEqual(compute_Dprime(graph, graph.vertices, 4), frozenset(graph.vertices))

    def test_counterexample(self):
        """Test every w^j of G(5, 4) resists two dominators from D"""
        graph = gen_counterexample(5, 4)
        D = exact_min_domset(graph).vertices
        self.assertTrue({5, 6, 7, 8} <= compute_Dhat(graph, D, 2))

    def test_size_bounds(self):
        """Test |D'| <= 3 * gamma and |D^ minus D| <= 2 * gamma"""
        for seed in range(8):
            graph = gen_random_sparse(30, 3, seed)
            D = exact_min_domset(graph).vertices
            k = make_params(2, t=3).k
            self.assertLessEqual(len(compute_Dprime(graph, D, k)), 3 * len(D))
            self.assertLessEqual(len(compute_Dhat(graph, D, k) - D), 2 * len(D))
