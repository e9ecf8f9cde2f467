"""Shared test utilities.

naive_witten is the ground-truth oracle: it enumerates every vertex subset,
keeps the independent ones and adds (-1)^size.  It is exponential, so callers
keep graphs at or below ~16 vertices.  random_graph produces seeded
Erdos-Renyi-style graphs, optionally with loops, for property sweeps.
load_reduced_forms and load_golden_cycles parse the reference data files
shared by the feature tests and the acceptance module.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from random import Random

from hardsquares.graphs import Graph
from hardsquares.polynomials import IntPoly

DATA = Path(__file__).parent / "data"


def naive_witten(g: Graph) -> int:
    total = 0
    verts = sorted(g.vertices)
    for r in range(len(verts) + 1):
        for sub in combinations(verts, r):
            chosen = set(sub)
            if all(not (g.neighbors(v) & chosen) for v in sub):
                total += (-1) ** r
    return total


def random_graph(rng: Random, max_vertices: int, edge_prob: float = 0.3,
                 loop_prob: float = 0.05) -> Graph:
    n = rng.randint(1, max_vertices)
    edges = []
    for u in range(n):
        if rng.random() < loop_prob:
            edges.append((u, u))
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.append((u, v))
    return Graph(range(n), edges)


def load_reduced_forms():
    """Reference reduced series by circumference: n -> (numerator, factors)."""
    table = {}
    for line in (DATA / "table2.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n_part, num_part, den_part = line.split(";")
        num = IntPoly(int(c) for c in num_part.split(","))
        factors = {}
        for item in den_part.split(","):
            order, mult = item.split(":")
            factors[int(order)] = int(mult)
        table[int(n_part)] = (num, factors)
    return table


def load_golden_cycles():
    """Reference cycle structures: (n, k) -> formatted structure string."""
    table = {}
    for line in (DATA / "table3.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, structure = line.split(";")
        n, k = map(int, head.split())
        table[(n, k)] = structure.strip()
    return table
