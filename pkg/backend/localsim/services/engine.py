"""
Synchronous LOCAL-model round engine.

Every node starts knowing its own ID and the IDs of its neighbors. In each
round the outboxes written in the previous round are delivered, then every
node runs the protocol handler on its inbox and writes at most one message,
which is broadcast to all of its neighbors. Rounds are the only cost.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import StrEnum
from typing import Any, Iterable, Mapping, Optional

from django.conf import settings

from graphs.services import Graph

logger = logging.getLogger(__name__)

Message = Any
Inbox = list[tuple[int, Message]]


class SimulationError(RuntimeError):
    """A node handler raised; carries the vertex and the round."""

    def __init__(self, vertex: int, round_number: int, cause: BaseException):
        self.vertex = vertex
        self.round = round_number
        super().__init__(f"handler failed at node {vertex} in round {round_number}: {cause!r}")


class NodeFlag(StrEnum):
    IN_D1 = 'in_D1'
    IN_D2 = 'in_D2'
    IN_D3 = 'in_D3'
    DOMINATED = 'dominated'
    REMOVED = 'removed'


@dataclass(frozen=True)
class NodeState:
    """
    Private state of one node.

    stars maps every vertex whose neighborhood the node has learned to that
    neighborhood. data holds protocol-specific values and is replaced, never
    mutated, by handlers.
    """
    id: int
    stars: Mapping[int, frozenset[int]]
    flags: frozenset[NodeFlag] = frozenset()
    phase: int = 0
    data: Mapping[str, Any] = field(default_factory=dict)

    @property
    def known_subgraph(self) -> Graph:
        """Induced subgraph on the vertices whose stars are known."""
        known = self.stars.keys()
        edges = [(u, w) for u in known for w in self.stars[u] if w in known and u < w]
        return Graph.from_edges(edges, known)

    def with_flags(self, *flags: NodeFlag) -> NodeState:
        # flags are monotone
        return replace(self, flags=self.flags | frozenset(flags))

    def has(self, flag: NodeFlag) -> bool:
        return flag in self.flags


class Protocol(ABC):
    """
    A deterministic round handler plus a halting predicate.

    start() gives the state and first outbox of a node before round 1;
    handle() maps (state, inbox) of round i to the new state and the outbox
    delivered in round i + 1. An outbox of None sends nothing.
    """

    #: rounds the protocol always uses, or None if it halts on its own
    round_budget: Optional[int] = None

    def start(self, vertex: int, neighbors: frozenset[int]) -> tuple[NodeState, Optional[Message]]:
        return NodeState(id=vertex, stars={vertex: neighbors}), None

    @abstractmethod
    def handle(self, state: NodeState, inbox: Inbox, round_number: int) -> tuple[NodeState, Optional[Message]]:
        ...

    def halted(self, state: NodeState, round_number: int) -> bool:
        """True once the node has nothing left to do after round_number rounds."""
        return self.round_budget is not None and round_number >= self.round_budget


@dataclass
class Trace:
    rounds_executed: int
    messages_per_round: list[int]
    final_states: dict[int, NodeState]
    history: list[dict[int, tuple[int, frozenset[NodeFlag]]]] = field(default_factory=list)

    @property
    def total_messages(self) -> int:
        return sum(self.messages_per_round)


def _snapshot(states: Mapping[int, NodeState]) -> dict[int, tuple[int, frozenset[NodeFlag]]]:
    return {v: (s.phase, s.flags) for v, s in states.items()}


def run(G: Graph, protocol: Protocol, max_rounds: int, workers: Optional[int] = None) -> Trace:
    """
    Execute protocol on G synchronously.

    Args:
        G: Network graph
        protocol: Round handler and halting predicate
        max_rounds: Upper bound on rounds (>= 0)
        workers: Threads evaluating handlers within a round; defaults to
            the DOMSET_WORKERS setting

    Returns:
        Trace with per-round message counts and final node states

    Raises:
        SimulationError: a handler raised
    """
    if max_rounds < 0:
        raise ValueError(f"max_rounds must be non-negative, got {max_rounds}")
    workers = workers or settings.DOMSET_WORKERS

    states: dict[int, NodeState] = {}
    outboxes: dict[int, Optional[Message]] = {}
    for v in G.vertices:
        try:
            states[v], outboxes[v] = protocol.start(v, G.neighbors(v))
        except Exception as exc:
            raise SimulationError(v, 0, exc) from exc

    history = [_snapshot(states)]
    messages_per_round: list[int] = []
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    try:
        round_number = 0
        while round_number < max_rounds:
            if all(protocol.halted(s, round_number) for s in states.values()):
                break
            round_number += 1

            # deliver, in ascending sender order
            inboxes: dict[int, Inbox] = {v: [] for v in G.vertices}
            sent = 0
            for sender in G.vertices:
                message = outboxes[sender]
                if message is None:
                    continue
                for receiver in sorted(G.neighbors(sender)):
                    inboxes[receiver].append((sender, message))
                    sent += 1
            messages_per_round.append(sent)

            def step(v: int, rnd: int = round_number):
                try:
                    return protocol.handle(states[v], inboxes[v], rnd)
                except Exception as exc:
                    raise SimulationError(v, rnd, exc) from exc

            results = list(executor.map(step, G.vertices) if executor else map(step, G.vertices))
            for v, (state, outbox) in zip(G.vertices, results):
                states[v] = state
                outboxes[v] = outbox

            history.append(_snapshot(states))
            logger.debug(f"round={round_number} messages={sent}")
    finally:
        if executor:
            executor.shutdown()

    return Trace(
        rounds_executed=len(messages_per_round),
        messages_per_round=messages_per_round,
        final_states=states,
        history=history,
    )


def dump_trace(trace: Trace, vertices: Optional[Iterable[int]] = None) -> str:
    """
    Render a trace as 'round=<i> node=<v> phase=<p> flags=<...>' lines.

    Round 0 is the state before any message was delivered; flags are sorted
    and comma-separated, '-' when empty.
    """
    lines = []
    for round_number, snapshot in enumerate(trace.history):
        for v in sorted(vertices if vertices is not None else snapshot):
            phase, flags = snapshot[v]
            rendered = ','.join(sorted(flags)) or '-'
            lines.append(f"round={round_number} node={v} phase={phase} flags={rendered}")
    return "\n".join(lines) + ("\n" if lines else "")
