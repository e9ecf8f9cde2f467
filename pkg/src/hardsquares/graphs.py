"""Grid-family graphs and their Witten indices.

The Witten index of a graph G is the signed count of its independent sets,

    Z(G) = sum over independent S of (-1)^|S|,

the empty set contributing +1.  Equivalently Z(G) = 1 - chi(Ind(G)) where
Ind(G) is the independence complex.  Z is multiplicative over disjoint
unions, satisfies the deletion relations

    Z(G) = Z(G - v) - Z(G - N[v])        (vertex additivity)
    Z(G) = Z(G - e) - Z(G - N[e])        (edge additivity)

and vanishes whenever G has an isolated loop-free vertex.

Three product families are supported: the free grid P_m x P_n, the cylinder
P_m x C_n and the torus C_m x C_n.  Degenerate cycles follow the conventions
C_2 = P_2, C_1 = a single looped vertex, C_0 = P_0 = the empty graph.  A
looped vertex belongs to no independent set, so Z(C_1) = Z(P_0) = 1.

Two independent evaluation routes are provided: ``witten_brute`` (recursive
deletion on an explicit graph) and ``witten_transfer`` (row transfer with
states the independent subsets of one ring).  They must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

FAMILIES = ("free", "cylinder", "torus")


class Graph:
    """Undirected graph with integer vertex ids; loops allowed.

    Vertices surviving a deletion keep their ids and labels, so reduction
    traces can be replayed against the original graph.
    """

    __slots__ = ("vertices", "edges", "labels", "_adj")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[Tuple[int, int]] = (),
        labels: Optional[Dict[int, tuple]] = None,
    ):
        self.vertices = frozenset(vertices)
        normalized = set()
        for u, v in edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            normalized.add((u, v) if u <= v else (v, u))
        self.edges = frozenset(normalized)
        self.labels = dict(labels) if labels else {}
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(s) for v, s in adj.items()}

    # -- basic queries ------------------------------------------------------

    def neighbors(self, v: int) -> frozenset:
        """Open neighborhood; contains v itself exactly when v has a loop."""
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_loop(self, v: int) -> bool:
        return v in self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u <= v else (v, u)) in self.edges

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    # -- derived graphs ------------------------------------------------------

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = frozenset(keep)
        if not keep <= self.vertices:
            raise ValueError("induced() got vertices not present in the graph")
        edges = [(u, v) for u, v in self.edges if u in keep and v in keep]
        labels = {v: lab for v, lab in self.labels.items() if v in keep}
        return Graph(keep, edges, labels)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        return self.induced(self.vertices - frozenset(drop))

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u <= v else (v, u)
        if e not in self.edges:
            raise ValueError(f"edge ({u}, {v}) not present")
        return Graph(self.vertices, self.edges - {e}, self.labels)

    def components(self) -> List[frozenset]:
        """Connected components as vertex sets, sorted by smallest member."""
        seen = set()
        out = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertex ids are shifted above g's."""
    offset = max(g.vertices, default=-1) + 1
    verts = set(g.vertices) | {v + offset for v in h.vertices}
    edges = list(g.edges) + [(u + offset, v + offset) for u, v in h.edges]
    labels = dict(g.labels)
    labels.update({v + offset: lab for v, lab in h.labels.items()})
    return Graph(verts, edges, labels)


# -- grid construction --------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """A grid-family instance: family in {free, cylinder, torus}, sizes m, n >= 0."""

    family: str
    m: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise ValueError("grid sizes must be integers")
        if self.m < 0 or self.n < 0:
            raise ValueError("grid sizes must be non-negative")


def _path_factor(k: int, base: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    keys = list(range(base, base + k))
    return keys, [(keys[i], keys[i + 1]) for i in range(k - 1)]


def _cycle_factor(k: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    # C_2 = P_2, C_1 = looped vertex, C_0 = empty graph.
    if k == 0:
        return [], []
    if k == 1:
        return [0], [(0, 0)]
    keys = list(range(k))
    if k == 2:
        return keys, [(0, 1)]
    return keys, [(i, (i + 1) % k) for i in range(k)]


def build_grid(spec: GridSpec) -> Graph:
    """Construct the labelled product graph for a grid-family instance.

    Labels are (row, column) pairs: rows run 1..m for path factors and
    0..m-1 for cyclic ones, columns 1..n (free) or 0..n-1 (cyclic).
    """
    if spec.family == "free":
        rows, row_edges = _path_factor(spec.m, 1)
        cols, col_edges = _path_factor(spec.n, 1)
    elif spec.family == "cylinder":
        rows, row_edges = _path_factor(spec.m, 1)
        cols, col_edges = _cycle_factor(spec.n)
    else:
        rows, row_edges = _cycle_factor(spec.m)
        cols, col_edges = _cycle_factor(spec.n)

    n_cols = len(cols)
    col_index = {b: idx for idx, b in enumerate(cols)}
    row_index = {a: idx for idx, a in enumerate(rows)}

    def vid(a: int, b: int) -> int:
        return row_index[a] * n_cols + col_index[b]

    vertices = [vid(a, b) for a in rows for b in cols]
    labels = {vid(a, b): (a, b) for a in rows for b in cols}
    edges: List[Tuple[int, int]] = []
    for a, a2 in row_edges:
        for b in cols:
            edges.append((vid(a, b), vid(a2, b)))
    for b, b2 in col_edges:
        for a in rows:
            edges.append((vid(a, b), vid(a, b2)))
    return Graph(vertices, edges, labels)


def grid_vertex(g: Graph, row: int, col: int) -> int:
    """Vertex id carrying the label (row, col)."""
    for v, lab in g.labels.items():
        if lab == (row, col):
            return v
    raise KeyError((row, col))


# -- brute-force Witten index --------------------------------------------------


def witten_brute(g: Graph) -> int:
    """Witten index by recursive deletion.

    Looped vertices are discarded (they join no independent set), an isolated
    vertex forces 0, connected components multiply, and otherwise a
    maximum-degree vertex v is pivoted on via Z = Z(G-v) - Z(G-N[v]).
    """
    adj = g._adj
    memo: Dict[frozenset, int] = {}

    def solve(active: frozenset) -> int:
        if not active:
            return 1
        cached = memo.get(active)
        if cached is not None:
            return cached
        looped = {v for v in active if v in adj[v]}
        if looped:
            result = solve(active - looped)
            memo[active] = result
            return result
        degs = {v: len(adj[v] & active) for v in active}
        if any(d == 0 for d in degs.values()):
            memo[active] = 0
            return 0
        # component split
        comps = []
        seen: set = set()
        for start in active:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x] & active:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        if len(comps) > 1:
            result = 1
            for comp in comps:
                result *= solve(comp)
                if result == 0:
                    break
        else:
            pivot = max(active, key=lambda v: (degs[v], -v))
            closed = (adj[pivot] & active) | {pivot}
            result = solve(active - {pivot}) - solve(active - closed)
        memo[active] = result
        return result

    return solve(g.vertices)


# -- transfer-matrix Witten index ----------------------------------------------


@lru_cache(maxsize=None)
def _ring_masks(n: int, cyclic: bool) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Independent-subset bitmasks of one row of width n, with signs.

    Returns (states, weights) with weights[i] = (-1)^popcount(states[i]).
    For cyclic rows the degenerate conventions apply: width 1 is a looped
    vertex (only the empty state) and width 2 is P_2.
    """
    if n == 0 or (cyclic and n == 1):
        states = [0]
    else:
        states = []
        for mask in range(1 << n):
            if mask & (mask << 1):
                continue
            if cyclic and n >= 3 and (mask & 1) and (mask >> (n - 1)) & 1:
                continue
            states.append(mask)
    weights = tuple(-1 if bin(s).count("1") % 2 else 1 for s in states)
    return tuple(states), weights


@lru_cache(maxsize=None)
def _ring_states(n: int, cyclic: bool) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
    """_ring_masks plus the pairwise disjointness lists.

    compat[i] lists the indices of the states disjoint from states[i].  The
    table is quadratic in the state count, so paths that stack at most one
    row stay with _ring_masks.
    """
    states, weights = _ring_masks(n, cyclic)
    compat = tuple(
        tuple(j for j, t in enumerate(states) if not (s & t)) for s in states
    )
    return states, compat, weights


def _chain_series(n: int, mmax: int, cyclic: bool) -> List[int]:
    """Indices Z(row-graph stacked m times in a path), for m = 0..mmax."""
    if mmax == 0:
        return [1]
    if mmax == 1:
        _, weights = _ring_masks(n, cyclic)
        return [1, sum(weights)]
    _, compat, weights = _ring_states(n, cyclic)
    size = len(weights)
    out = [1]
    vec = list(weights)
    out.append(sum(vec))
    for _ in range(2, mmax + 1):
        vec = [weights[i] * sum(vec[j] for j in compat[i]) for i in range(size)]
        out.append(sum(vec))
    return out


def column_series(n: int, mmax: int) -> List[int]:
    """[Z(P_0 x C_n), Z(P_1 x C_n), ..., Z(P_mmax x C_n)]."""
    if n < 0 or mmax < 0:
        raise ValueError("column_series needs n >= 0 and mmax >= 0")
    return _chain_series(n, mmax, cyclic=True)


def _torus_index(m: int, n: int) -> int:
    if m == 0 or n == 0:
        return 1
    if m == 1 or n == 1:
        return 1  # a C_1 factor puts a loop on every vertex
    if n > m:
        m, n = n, m  # ring along the smaller side
    _, compat, weights = _ring_states(n, True)
    size = len(weights)
    total = 0
    for start in range(size):
        vec = [0] * size
        vec[start] = 1
        for _ in range(m):
            vec = [weights[i] * sum(vec[j] for j in compat[i]) for i in range(size)]
        total += vec[start]
    return total


def transfer_width(spec: GridSpec) -> int:
    """Width of the row states witten_transfer will enumerate.

    The transfer walk keeps one bitmask per row, so its state space is
    exponential in this width.  Degenerate sizes that short-circuit to a
    constant report width 0.
    """
    m, n = spec.m, spec.n
    if spec.family == "free":
        return 0 if m == 0 or n == 0 else min(m, n)
    if spec.family == "cylinder":
        return 0 if m == 0 else n
    return 0 if m <= 1 or n <= 1 else min(m, n)


def witten_transfer(spec: GridSpec) -> int:
    """Witten index of a grid-family instance via row transfer."""
    if spec.family == "free":
        if spec.m == 0 or spec.n == 0:
            return 1
        m, n = spec.m, spec.n
        if n > m:
            m, n = n, m  # stack along the longer side, masks on the shorter
        return _chain_series(n, m, cyclic=False)[m]
    if spec.family == "cylinder":
        return _chain_series(spec.n, spec.m, cyclic=True)[spec.m]
    return _torus_index(spec.m, spec.n)


# -- suspension identities -----------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    family: str
    m: int
    n: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _z(family: str, m: int, n: int) -> int:
    return witten_transfer(GridSpec(family, m, n))


# (name, family, lhs(m, n) -> rhs instance, sign, validity predicate).
# Each entry encodes Z(family, m, n) == sign * Z(family, m', n') on its range.
_IDENTITIES = (
    ("one_row_cylinder_shift3", "cylinder", lambda m, n: (m, n - 3), -1,
     lambda m, n: m == 1 and n >= 4),
    ("two_row_cylinder_shift4", "cylinder", lambda m, n: (m, n - 4), 1,
     lambda m, n: m == 2 and n >= 5),
    ("three_row_cylinder_shift8", "cylinder", lambda m, n: (m, n - 8), 1,
     lambda m, n: m == 3 and n >= 9),
    ("circumference3_shift3", "cylinder", lambda m, n: (m - 3, n), 1,
     lambda m, n: n == 3 and m >= 3),
    ("circumference5_shift2", "cylinder", lambda m, n: (m - 2, n), 1,
     lambda m, n: n == 5 and m >= 2),
    ("circumference7_shift4", "cylinder", lambda m, n: (m - 4, n), 1,
     lambda m, n: n == 7 and m >= 4),
    ("one_row_free_shift3", "free", lambda m, n: (m, n - 3), -1,
     lambda m, n: m == 1 and n >= 3),
    ("two_row_free_shift2", "free", lambda m, n: (m, n - 2), -1,
     lambda m, n: m == 2 and n >= 2),
    ("three_row_free_shift4", "free", lambda m, n: (m, n - 4), -1,
     lambda m, n: m == 3 and n >= 4),
    ("torus3_shift3", "torus", lambda m, n: (m, n - 3), 1,
     lambda m, n: m == 3 and n >= 4),
)


def verify_index_identities(m_max: int = 20, n_max: int = 14) -> List[IdentityCheck]:
    """Evaluate every in-range instance of the ten suspension identities.

    Each identity relates Z on one family to Z at a shifted size with a fixed
    sign; the ranges exclude the degenerate instances where the underlying
    homotopy equivalences do not apply.
    """
    checks = []
    for name, family, shift, sign, in_range in _IDENTITIES:
        for m in range(0, m_max + 1):
            for n in range(0, n_max + 1):
                if not in_range(m, n):
                    continue
                m2, n2 = shift(m, n)
                lhs = _z(family, m, n)
                rhs = sign * _z(family, m2, n2)
                checks.append(IdentityCheck(name, family, m, n, lhs, rhs))
    return checks
