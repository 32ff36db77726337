"""Topology-gathering protocols."""
from __future__ import annotations

from dataclasses import replace
from typing import Mapping, Optional

from .engine import Inbox, Message, NodeState, Protocol


def merge_stars(state: NodeState, inbox: Inbox) -> NodeState:
    """Add every star carried by the inbox messages to the node's knowledge."""
    stars = dict(state.stars)
    for _, message in inbox:
        stars.update(message)
    return replace(state, stars=stars)


class GatherBall(Protocol):
    """
    Flood known stars for a fixed number of rounds.

    After r rounds a node holds the star of every vertex at distance at
    most r, so its known_subgraph is the induced subgraph on ball(v, r).
    """

    def __init__(self, radius: int):
        if radius < 0:
            raise ValueError(f"radius must be non-negative, got {radius}")
        self.radius = radius
        self.round_budget = radius

    def start(self, vertex: int, neighbors: frozenset[int]) -> tuple[NodeState, Optional[Message]]:
        stars: Mapping[int, frozenset[int]] = {vertex: neighbors}
        return NodeState(id=vertex, stars=stars), dict(stars)

    def handle(self, state: NodeState, inbox: Inbox, round_number: int) -> tuple[NodeState, Optional[Message]]:
        state = replace(merge_stars(state, inbox), phase=round_number)
        outbox = dict(state.stars) if round_number < self.radius else None
        return state, outbox


def gather_ball(radius: int) -> GatherBall:
    """Protocol after which every node knows the induced ball of the given radius."""
    return GatherBall(radius)
