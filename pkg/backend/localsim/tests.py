from dataclasses import replace

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from graphs.services import Graph, ball, gen_grid
from localsim.services import (
    NodeFlag,
    NodeState,
    Protocol,
    SimulationError,
    dump_trace,
    gather_ball,
    run,
)


# =============================================================================
# Helpers
# =============================================================================

def path(n):
    return Graph.from_edges((i, i + 1) for i in range(n - 1))


def cycle(n):
    return Graph.from_edges((i, (i + 1) % n) for i in range(n))


@st.composite
def small_graphs(draw, max_vertices=10):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, range(n))


class FailingProtocol(Protocol):
    """Raises at node 3 in round 2."""
    round_budget = 4

    def handle(self, state, inbox, round_number):
        if state.id == 3 and round_number == 2:
            raise KeyError('boom')
        return replace(state, phase=round_number), None


class MarkEvenProtocol(Protocol):
    """Flags even nodes in round 1, never sends."""
    round_budget = 1

    def handle(self, state, inbox, round_number):
        if state.id % 2 == 0:
            state = state.with_flags(NodeFlag.DOMINATED)
        return replace(state, phase=round_number), None


# =============================================================================
# Engine Tests
# =============================================================================

class RunTestCase(SimpleTestCase):
    """Tests for run"""

    def test_zero_rounds_knows_own_star(self):
        """Test with 0 rounds a node knows itself and its neighbor IDs"""
        trace = run(path(4), gather_ball(2), max_rounds=0)
        state = trace.final_states[1]
        self.assertEqual(trace.rounds_executed, 0)
        self.assertEqual(state.known_subgraph.vertices, (1,))
        self.assertEqual(state.stars[1], frozenset({0, 2}))

    def test_stops_at_max_rounds(self):
        """Test max_rounds truncates a longer protocol"""
        trace = run(path(8), gather_ball(5), max_rounds=2)
        self.assertEqual(trace.rounds_executed, 2)
        self.assertEqual(set(trace.final_states[0].stars), {0, 1, 2})

    def test_stops_when_halted(self):
        """Test the halting predicate ends the run before max_rounds"""
        trace = run(path(5), gather_ball(2), max_rounds=50)
        self.assertEqual(trace.rounds_executed, 2)

    def test_negative_max_rounds(self):
        """Test negative max_rounds is rejected"""
        with self.assertRaises(ValueError):
            run(path(2), gather_ball(1), max_rounds=-1)

    def test_handler_error_carries_vertex_and_round(self):
        """Test handler exceptions become SimulationError"""
        with self.assertRaises(SimulationError) as ctx:
            run(path(5), FailingProtocol(), max_rounds=4)
        self.assertEqual(ctx.exception.vertex, 3)
        self.assertEqual(ctx.exception.round, 2)
        self.assertIsInstance(ctx.exception.__cause__, KeyError)

    def test_deterministic(self):
        """Test identical runs give identical traces"""
        graph = gen_grid(4, 5)
        first = run(graph, gather_ball(3), max_rounds=10)
        second = run(graph, gather_ball(3), max_rounds=10)
        self.assertEqual(first, second)

    def test_thread_pool_matches_sequential(self):
        """Test parallel handler evaluation gives the sequential result"""
        graph = gen_grid(5, 5)
        sequential = run(graph, gather_ball(2), max_rounds=5, workers=1)
        parallel = run(graph, gather_ball(2), max_rounds=5, workers=4)
        self.assertEqual(sequential.final_states, parallel.final_states)
        self.assertEqual(sequential.messages_per_round, parallel.messages_per_round)

    def test_message_count_bound(self):
        """Test each round sends at most 2|E| messages"""
        graph = gen_grid(6, 3)
        trace = run(graph, gather_ball(3), max_rounds=3)
        for count in trace.messages_per_round:
            self.assertLessEqual(count, 2 * graph.size)
        self.assertEqual(trace.messages_per_round, [2 * graph.size] * 3)

    def test_locality(self):
        """Test state after r rounds depends only on ball(v, r + 1)"""
        first = path(7)
        second = Graph.from_edges([*first.edges, (4, 6), (6, 7)])
        self.assertEqual(
            first.induced_subgraph(ball(first, 0, 3)),
            second.induced_subgraph(ball(second, 0, 3)),
        )
        left = run(first, gather_ball(2), max_rounds=2).final_states[0]
        right = run(second, gather_ball(2), max_rounds=2).final_states[0]
        self.assertEqual(left, right)

    def test_flags_are_monotone(self):
        """Test with_flags only adds flags"""
        state = NodeState(id=0, stars={0: frozenset()}).with_flags(NodeFlag.IN_D1)
        state = state.with_flags(NodeFlag.DOMINATED)
        self.assertEqual(state.flags, {NodeFlag.IN_D1, NodeFlag.DOMINATED})


class DumpTraceTestCase(SimpleTestCase):
    """Tests for dump_trace"""

    def test_line_format(self):
        """Test the golden line format including round 0"""
        trace = run(path(2), MarkEvenProtocol(), max_rounds=3)
        self.assertEqual(
            dump_trace(trace),
            "round=0 node=0 phase=0 flags=-\n"
            "round=0 node=1 phase=0 flags=-\n"
            "round=1 node=0 phase=1 flags=dominated\n"
            "round=1 node=1 phase=1 flags=-\n",
        )

    def test_vertex_filter(self):
        """Test dumping a subset of nodes"""
        trace = run(path(3), gather_ball(1), max_rounds=1)
        self.assertEqual(dump_trace(trace, [2]), "round=0 node=2 phase=0 flags=-\nround=1 node=2 phase=1 flags=-\n")


# =============================================================================
# Gather Protocol Tests
# =============================================================================

class GatherBallTestCase(SimpleTestCase):
    """Tests for gather_ball"""

    def test_path_radius_two(self):
        """Test the middle of a 5-path learns the whole path"""
        trace = run(path(5), gather_ball(2), max_rounds=2)
        self.assertEqual(trace.final_states[2].known_subgraph, path(5))

    def test_star_center(self):
        """Test the center of a star learns all leaves in one round"""
        graph = Graph.from_edges((0, i) for i in range(1, 6))
        trace = run(graph, gather_ball(1), max_rounds=1)
        self.assertEqual(trace.final_states[0].known_subgraph.vertices, tuple(range(6)))

    def test_cycle_radius_two(self):
        """Test every node of C6 knows 5 of 6 vertices"""
        trace = run(cycle(6), gather_ball(2), max_rounds=2)
        for state in trace.final_states.values():
            self.assertEqual(state.known_subgraph.order, 5)

    def test_negative_radius(self):
        """Test negative radii are rejected"""
        with self.assertRaises(ValueError):
            gather_ball(-1)

    @given(small_graphs(), st.integers(min_value=0, max_value=3))
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_matches_induced_ball(self, graph, radius):
        """Test known_subgraph is the induced subgraph on ball(v, r)"""
        trace = run(graph, gather_ball(radius), max_rounds=radius)
        for v, state in trace.final_states.items():
            self.assertEqual(state.known_subgraph, graph.induced_subgraph(ball(graph, v, radius)))
