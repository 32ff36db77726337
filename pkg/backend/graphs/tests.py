from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st

from graphs.services import (
    Density,
    EdgeListError,
    Graph,
    GraphDomainError,
    GuardExceeded,
    ball,
    build_generator,
    degeneracy,
    dump_edge_list,
    find_biclique,
    gen_counterexample,
    gen_grid,
    gen_random_sparse,
    gen_triangulated_grid,
    gen_twin_stars,
    load_edge_list,
    min_t_no_biclique,
    nabla0_bruteforce,
    nabla0_exact,
    nabla1_bruteforce,
)


# =============================================================================
# Helpers
# =============================================================================

def complete_graph(n):
    return Graph.from_edges((u, v) for u in range(n) for v in range(u + 1, n))


def cycle(n):
    return Graph.from_edges((i, (i + 1) % n) for i in range(n))


def path(n):
    return Graph.from_edges((i, i + 1) for i in range(n - 1))


def star(leaves):
    return Graph.from_edges((0, i) for i in range(1, leaves + 1))


@st.composite
def small_graphs(draw, max_vertices=10):
    """Random simple graphs on 1..max_vertices vertices."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, range(n))


# =============================================================================
# Graph and Density Tests
# =============================================================================

class DensityTestCase(SimpleTestCase):
    """Tests for Density"""

    def test_exact_comparison(self):
        """Test densities compare by cross-multiplication"""
        self.assertEqual(Density(6, 4), Fraction(3, 2))
        self.assertEqual(Density(6, 4), Density(3, 2))
        self.assertLess(Density(1, 2), Density(2, 3))
        self.assertLessEqual(Density(3, 1), 3)

    def test_renders_measured_pair(self):
        """Test str keeps the measured edges/vertices pair"""
        self.assertEqual(str(Density(6, 4)), '6/4')

    def test_rejects_zero_denominator(self):
        """Test a density needs at least one vertex"""
        with self.assertRaises(ValueError):
            Density(1, 0)


class GraphTestCase(SimpleTestCase):
    """Tests for Graph"""

    def test_from_edges_collapses_duplicates(self):
        """Test parallel edges collapse into one"""
        graph = Graph.from_edges([(0, 1), (1, 0), (0, 1)])
        self.assertEqual(graph.edges, ((0, 1),))
        self.assertEqual(graph.order, 2)

    def test_self_loop_rejected(self):
        """Test self-loops raise a domain error"""
        with self.assertRaises(GraphDomainError):
            Graph.from_edges([(3, 3)])

    def test_asymmetric_adjacency_rejected(self):
        """Test the constructor validates symmetry"""
        with self.assertRaises(GraphDomainError):
            Graph({0: frozenset({1}), 1: frozenset()})

    def test_unknown_vertex(self):
        """Test neighbor queries on unknown vertices fail"""
        with self.assertRaises(GraphDomainError):
            path(3).neighbors(9)

    def test_without_removes_incident_edges(self):
        """Test removing a vertex drops its edges"""
        reduced = star(3).without({0})
        self.assertEqual(reduced.vertices, (1, 2, 3))
        self.assertEqual(reduced.size, 0)

    def test_equal_graphs_hash_equal(self):
        """Test graphs built in different orders are equal and hash alike"""
        first = Graph.from_edges([(0, 1), (1, 2)])
        second = Graph.from_edges([(2, 1), (1, 0)])
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))


# =============================================================================
# Edge List Tests
# =============================================================================

class LoadEdgeListTestCase(SimpleTestCase):
    """Tests for load_edge_list"""

    def test_path(self):
        """Test two lines give a two-edge path"""
        graph = load_edge_list("0 1\n1 2")
        self.assertEqual(graph.vertices, (0, 1, 2))
        self.assertEqual(graph.edges, ((0, 1), (1, 2)))

    def test_duplicate_collapse(self):
        """Test a reversed duplicate is one edge"""
        self.assertEqual(load_edge_list("0 1\n1 0").size, 1)

    def test_self_loop_error(self):
        """Test a self-loop line is rejected"""
        with self.assertRaises(EdgeListError):
            load_edge_list("0 0")

    def test_malformed_line_reports_line_number(self):
        """Test parse errors carry the offending line number"""
        with self.assertRaises(EdgeListError) as ctx:
            load_edge_list("# header\n0 1\n1 x\n")
        self.assertEqual(ctx.exception.line_number, 3)
        self.assertIn('line 3', str(ctx.exception))
        with self.assertRaises(EdgeListError) as ctx:
            load_edge_list("0 1\n\u00b2 3\n")
        self.assertEqual(ctx.exception.line_number, 2)

    def test_comments_and_isolated_vertices(self):
        """Test comments are skipped and single integers declare vertices"""
        graph = load_edge_list("0 1  # edge\n\n7\n")
        self.assertEqual(graph.vertices, (0, 1, 7))
        self.assertEqual(graph.degree(7), 0)


class DumpEdgeListTestCase(SimpleTestCase):
    """Tests for dump_edge_list"""

    def test_sorted_output(self):
        """Test output is sorted with isolated vertices last"""
        graph = Graph.from_edges([(2, 1), (1, 0)], [5])
        self.assertEqual(dump_edge_list(graph), "0 1\n1 2\n5\n")

    def test_empty_graph(self):
        """Test the empty graph dumps to empty text"""
        self.assertEqual(dump_edge_list(Graph()), "")

    @given(small_graphs())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_reload_gives_same_graph(self, graph):
        """Test dumped text loads back to the same graph"""
        self.assertEqual(load_edge_list(dump_edge_list(graph)), graph)


# =============================================================================
# Ball Tests
# =============================================================================

class BallTestCase(SimpleTestCase):
    """Tests for ball"""

    def test_path_radius_one(self):
        """Test ball(1, 1) on a path"""
        self.assertEqual(ball(path(4), 1, 1), {0, 1, 2})

    def test_radius_zero(self):
        """Test radius 0 is the vertex itself"""
        self.assertEqual(ball(cycle(6), 3, 0), {3})

    def test_cycle_radius_two(self):
        """Test ball(0, 2) on C6 misses only the antipode"""
        self.assertEqual(ball(cycle(6), 0, 2), {4, 5, 0, 1, 2})

    def test_unknown_vertex(self):
        """Test unknown vertices raise a domain error"""
        with self.assertRaises(GraphDomainError):
            ball(path(3), 10, 1)

    def test_negative_radius(self):
        """Test a negative radius raises a domain error"""
        with self.assertRaises(GraphDomainError):
            ball(path(3), 0, -1)


# =============================================================================
# Sparsity Tests
# =============================================================================

class DegeneracyTestCase(SimpleTestCase):
    """Tests for degeneracy"""

    def test_tree(self):
        """Test a nonempty tree is 1-degenerate"""
        self.assertEqual(degeneracy(path(6)), 1)
        self.assertEqual(degeneracy(star(4)), 1)

    def test_complete(self):
        """Test K4 is 3-degenerate"""
        self.assertEqual(degeneracy(complete_graph(4)), 3)

    def test_counterexample_family(self):
        """Test G(2, 3) is 2-degenerate"""
        self.assertEqual(degeneracy(gen_counterexample(2, 3)), 2)

    def test_empty(self):
        """Test the empty graph has degeneracy 0"""
        self.assertEqual(degeneracy(Graph()), 0)

    @given(small_graphs())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_bounded_by_twice_nabla0(self, graph):
        """Test degeneracy <= 2 * nabla0"""
        self.assertLessEqual(degeneracy(graph), 2 * nabla0_exact(graph).value)


class Nabla0TestCase(SimpleTestCase):
    """Tests for nabla0_exact"""

    def test_complete(self):
        """Test K4 is its own densest subgraph"""
        result = nabla0_exact(complete_graph(4))
        self.assertEqual(result, Fraction(3, 2))
        self.assertEqual(str(result), '6/4')

    def test_cycle(self):
        """Test C5 has density 1"""
        self.assertEqual(nabla0_exact(cycle(5)), 1)

    def test_dense_part_found(self):
        """Test a K4 hanging off a long path is found"""
        graph = Graph.from_edges([*complete_graph(4).edges, *((i, i + 1) for i in range(3, 20))])
        self.assertEqual(nabla0_exact(graph), Fraction(3, 2))

    def test_planar_grid(self):
        """Test a 10x10 grid has density at most 3"""
        self.assertLessEqual(nabla0_exact(gen_grid(10, 10)), 3)

    @given(small_graphs())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_matches_bruteforce(self, graph):
        """Test the flow method agrees with subset enumeration"""
        self.assertEqual(nabla0_exact(graph), nabla0_bruteforce(graph))

    @override_settings(DOMSET_EXHAUSTIVE_GUARD=3)
    def test_bruteforce_guard(self):
        """Test the subset enumeration refuses graphs above its guard"""
        with self.assertRaises(GuardExceeded):
            nabla0_bruteforce(path(4))


class Nabla1BruteforceTestCase(SimpleTestCase):
    """Tests for nabla1_bruteforce"""

    def test_complete(self):
        """Test K4 has nabla1 = 3/2"""
        self.assertEqual(nabla1_bruteforce(complete_graph(4)), Fraction(3, 2))

    def test_star(self):
        """Test contracting a star only loses edges"""
        self.assertEqual(nabla1_bruteforce(star(5)), Fraction(5, 6))

    def test_single_edge(self):
        """Test a single edge has nabla1 = 1/2"""
        self.assertEqual(nabla1_bruteforce(path(2)), Fraction(1, 2))

    def test_contraction_increases_density(self):
        """Test contracting a subdivided K4 recovers K4's density"""
        # K4 with every edge subdivided once
        edges = []
        middle = 4
        for u in range(4):
            for v in range(u + 1, 4):
                edges += [(u, middle), (middle, v)]
                middle += 1
        subdivided = Graph.from_edges(edges)
        self.assertLess(nabla0_exact(subdivided), Fraction(3, 2))
        self.assertEqual(nabla1_bruteforce(subdivided), Fraction(3, 2))

    def test_guard(self):
        """Test graphs above the guard are refused"""
        with self.assertRaises(GuardExceeded):
            nabla1_bruteforce(path(13))

    @given(small_graphs(max_vertices=7))
    @hypothesis_settings(max_examples=40, deadline=None)
    def test_at_least_nabla0(self, graph):
        """Test subgraphs are 1-shallow minors"""
        self.assertGreaterEqual(nabla1_bruteforce(graph), nabla0_exact(graph))


class MinTNoBicliqueTestCase(SimpleTestCase):
    """Tests for min_t_no_biclique and find_biclique"""

    def test_star(self):
        """Test K_{1,3} contains K_{1,1} but not K_{2,2}"""
        self.assertEqual(min_t_no_biclique(star(3)), 2)

    def test_four_cycle(self):
        """Test C4 is K_{2,2}"""
        self.assertEqual(min_t_no_biclique(cycle(4)), 3)
        self.assertEqual(find_biclique(cycle(4), 2), ((0, 2), (1, 3)))

    def test_edgeless(self):
        """Test an edgeless graph excludes K_{1,1}"""
        self.assertEqual(min_t_no_biclique(Graph.from_edges([], range(4))), 1)

    def test_planar_families(self):
        """Test planar grids exclude K_{3,3}"""
        self.assertLessEqual(min_t_no_biclique(gen_grid(6, 6)), 3)
        self.assertLessEqual(min_t_no_biclique(gen_triangulated_grid(6, 6)), 3)

    def test_complete_bipartite(self):
        """Test K_{3,3} needs t = 4"""
        graph = Graph.from_edges((a, b) for a in range(3) for b in range(3, 6))
        self.assertEqual(min_t_no_biclique(graph), 4)

    @given(small_graphs(max_vertices=12))
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_low_density_excludes_biclique(self, graph):
        """Test nabla0 < t/2 implies no K_{t,t}"""
        density = nabla0_exact(graph).value
        for t in range(1, 5):
            if density < Fraction(t, 2):
                self.assertIsNone(find_biclique(graph, t))


# =============================================================================
# Generator Tests
# =============================================================================

class GenGridTestCase(SimpleTestCase):
    """Tests for gen_grid and gen_triangulated_grid"""

    def test_two_by_two_is_four_cycle(self):
        """Test the 2x2 grid is C4"""
        self.assertEqual(gen_grid(2, 2), Graph.from_edges([(0, 1), (1, 3), (3, 2), (2, 0)]))

    def test_edge_count(self):
        """Test the 5x5 grid has 2wh - w - h edges"""
        grid = gen_grid(5, 5)
        self.assertEqual(grid.order, 25)
        self.assertEqual(grid.size, 40)

    def test_triangulated_two_by_two(self):
        """Test one diagonal is added per face"""
        graph = gen_triangulated_grid(2, 2)
        self.assertEqual((graph.order, graph.size), (4, 5))

    def test_triangulated_density(self):
        """Test triangulated grids stay below density 3"""
        self.assertLessEqual(nabla0_exact(gen_triangulated_grid(8, 8)), 3)

    def test_invalid_dimensions(self):
        """Test non-positive dimensions raise"""
        with self.assertRaises(ValueError):
            gen_grid(0, 3)


class GenCounterexampleTestCase(SimpleTestCase):
    """Tests for gen_counterexample"""

    def test_golden_two_two(self):
        """Test G(2, 2) matches the pinned edge list"""
        self.assertEqual(
            dump_edge_list(gen_counterexample(2, 2)),
            "0 2\n0 3\n0 4\n0 6\n1 5\n1 7\n2 4\n2 5\n3 6\n3 7\n",
        )

    def test_counts(self):
        """Test |V| = gamma + m + gamma*m and |E| = m + 2*gamma*m"""
        graph = gen_counterexample(2, 3)
        self.assertEqual((graph.order, graph.size), (11, 15))
        graph = gen_counterexample(5, 4)
        self.assertEqual((graph.order, graph.size), (29, 44))

    def test_degeneracy_two(self):
        """Test the family is 2-degenerate"""
        for gamma, m in [(2, 2), (3, 5), (6, 10)]:
            self.assertEqual(degeneracy(gen_counterexample(gamma, m)), 2)


class GenTwinStarsTestCase(SimpleTestCase):
    """Tests for gen_twin_stars"""

    def test_single_gadget(self):
        """Test d = 3 gives 5 vertices and 6 edges"""
        graph = gen_twin_stars(3, 1)
        self.assertEqual((graph.order, graph.size), (5, 6))
        self.assertFalse(graph.has_edge(0, 1))
        self.assertEqual(graph.neighbors(0), graph.neighbors(1))

    def test_copies_are_disjoint(self):
        """Test copies use consecutive disjoint ID blocks"""
        graph = gen_twin_stars(4, 3)
        self.assertEqual(graph.order, 18)
        self.assertEqual(graph.size, 24)
        self.assertEqual(graph.neighbors(6), frozenset(range(8, 12)))


class GenRandomSparseTestCase(SimpleTestCase):
    """Tests for gen_random_sparse"""

    def test_zero_degree(self):
        """Test d = 0 gives an edgeless graph"""
        graph = gen_random_sparse(100, 0, seed=1)
        self.assertEqual((graph.order, graph.size), (100, 0))

    def test_deterministic(self):
        """Test the same seed gives the same edges"""
        self.assertEqual(gen_random_sparse(60, 3, 11), gen_random_sparse(60, 3, 11))

    def test_concentration_band(self):
        """Test G(200, 3/200) seed 7 has 200..400 edges"""
        self.assertTrue(200 <= gen_random_sparse(200, 3, 7).size <= 400)

    def test_invalid_degree(self):
        """Test d >= n is rejected"""
        with self.assertRaises(ValueError):
            gen_random_sparse(5, 5, seed=0)


class BuildGeneratorTestCase(SimpleTestCase):
    """Tests for build_generator"""

    def test_string_arguments(self):
        """Test families are built from command-line strings"""
        self.assertEqual(build_generator('grid', ['5', '5']).size, 40)
        self.assertEqual(build_generator('random_sparse', ['50', '5/2', '3']).order, 50)

    def test_unknown_name(self):
        """Test unknown families raise"""
        with self.assertRaises(ValueError):
            build_generator('hypercube', ['3'])

    def test_wrong_arity(self):
        """Test wrong argument counts raise"""
        with self.assertRaises(ValueError):
            build_generator('grid', ['5'])
