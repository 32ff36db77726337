"""
Seeded instance families.

Vertex numbering is fixed per family so edge-list dumps are stable:

- grids: vertex (x, y) is y * w + x
- G(gamma, m): v_1..v_gamma are 0..gamma-1, w^1..w^m follow, then s_i^j at
  gamma + m + (j - 1) * gamma + (i - 1)
- twin stars: copy c starts at b = c * (d + 2) with hub b, twin b + 1 and
  leaves b + 2 .. b + d + 1
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .graph import Graph

logger = logging.getLogger(__name__)


def gen_grid(w: int, h: int) -> Graph:
    """w x h grid graph."""
    if w < 1 or h < 1:
        raise ValueError(f"Grid dimensions must be positive, got {w}x{h}")
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return Graph.from_edges(edges, range(w * h))


def gen_triangulated_grid(w: int, h: int) -> Graph:
    """Grid plus the (x, y)-(x+1, y+1) diagonal of every face; planar."""
    grid = gen_grid(w, h)
    diagonals = [
        (y * w + x, (y + 1) * w + x + 1)
        for y in range(h - 1)
        for x in range(w - 1)
    ]
    return Graph.from_edges([*grid.edges, *diagonals], grid.vertices)


def gen_counterexample(gamma: int, m: int) -> Graph:
    """
    The 2-degenerate family G(gamma, m).

    Edges are {v_1, w^j}, {w^j, s_i^j} and {v_i, s_i^j} for 1 <= i <= gamma
    and 1 <= j <= m, so every N(w^j) needs gamma dominators other than w^j.
    """
    if gamma < 1 or m < 1:
        raise ValueError(f"gamma and m must be positive, got gamma={gamma}, m={m}")

    def v(i):
        return i - 1

    def w_(j):
        return gamma + j - 1

    def s(i, j):
        return gamma + m + (j - 1) * gamma + (i - 1)

    edges = []
    for j in range(1, m + 1):
        edges.append((v(1), w_(j)))
        for i in range(1, gamma + 1):
            edges.append((w_(j), s(i, j)))
            edges.append((v(i), s(i, j)))
    return Graph.from_edges(edges, range(gamma + m + gamma * m))


def gen_twin_stars(d: int, copies: int = 1) -> Graph:
    """
    Disjoint gadgets of a hub v and a twin u sharing d leaves.

    v and u are not adjacent, so N(v) = N(u) and each is coverable by the
    other alone.
    """
    if d < 1:
        raise ValueError(f"Twin stars need at least one leaf, got d={d}")
    if copies < 0:
        raise ValueError(f"copies must be non-negative, got {copies}")
    edges = []
    for c in range(copies):
        base = c * (d + 2)
        for leaf in range(base + 2, base + d + 2):
            edges.append((base, leaf))
            edges.append((base + 1, leaf))
    return Graph.from_edges(edges, range(copies * (d + 2)))


def gen_random_sparse(n: int, d, seed: int) -> Graph:
    """
    Erdos-Renyi G(n, d/n) from a PCG64 stream seeded with seed.

    Pairs (i, j) with i < j are drawn in row-major order, so the edge set
    depends only on (n, d, seed).
    """
    d = Fraction(d)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 0 or d >= n:
        raise ValueError(f"d must satisfy 0 <= d < n, got d={d}, n={n}")

    rng = np.random.Generator(np.random.PCG64(seed))
    rows, cols = np.triu_indices(n, k=1)
    draws = rng.random(rows.shape[0])
    chosen = draws < float(d / n)
    edges = zip(rows[chosen].tolist(), cols[chosen].tolist())
    graph = Graph.from_edges(edges, range(n))
    logger.debug(f"G({n}, {d}/{n}) seed={seed}: {graph.size} edges")
    return graph


# ----------------------------------------------------------------------
# Registry for the command line

@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    build: Callable[..., Graph]
    arguments: tuple[tuple[str, Callable], ...]

    def __call__(self, args: Sequence[str]) -> Graph:
        """Build the family from string arguments, e.g. ['5', '5']."""
        if len(args) != len(self.arguments):
            expected = ' '.join(name for name, _ in self.arguments)
            raise ValueError(f"{self.name} expects arguments: {expected}")
        values = [convert(raw) for (_, convert), raw in zip(self.arguments, args)]
        return self.build(*values)


GENERATORS: dict[str, GeneratorSpec] = {
    spec.name: spec
    for spec in (
        GeneratorSpec('grid', gen_grid, (('w', int), ('h', int))),
        GeneratorSpec('triangulated_grid', gen_triangulated_grid, (('w', int), ('h', int))),
        GeneratorSpec('counterexample', gen_counterexample, (('gamma', int), ('m', int))),
        GeneratorSpec('twin_stars', gen_twin_stars, (('d', int), ('copies', int))),
        GeneratorSpec('random_sparse', gen_random_sparse, (('n', int), ('d', Fraction), ('seed', int))),
    )
}


def build_generator(name: str, args: Sequence[str]) -> Graph:
    """
    Look up a family by name and build it.

    Raises:
        ValueError: unknown family or wrong argument count
    """
    try:
        spec = GENERATORS[name]
    except KeyError:
        raise ValueError(f"Unknown generator {name!r}; choose from {', '.join(sorted(GENERATORS))}") from None
    return spec(args)
