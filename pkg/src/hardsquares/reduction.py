"""Index-preserving graph rewriting and contractibility certificates.

Three rewrite rules operate on an explicit graph, each leaving the Witten
index invariant up to a tracked sign:

  fold(u, v):     if N(u) is a subset of N(v), delete v; index unchanged.
  pendant(u, v):  if u has degree 1 with neighbor v, delete N[v]; the
                  independence complex suspends, so the index flips sign.
  square(u,v,x,y): if u, v are adjacent degree-2 vertices on the 4-cycle
                  u-v-x-y, delete all four; again one suspension.

A state records the accumulated suspension count and an ordered trace, so
(-1)^suspensions * Z(current) = Z(original) at every step, and the trace can
be replayed and externally audited.  An isolated loop-free vertex makes the
independence complex a cone, hence contractible and the index 0; simplify
uses that as its terminal contractibility test.

Looped vertices join no independent set, so dropping them is index-neutral;
simplify normalizes them away first, and the rule preconditions reject loops
on their witness vertices to keep each step individually sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import RuleInapplicableError
from .graphs import Graph, witten_brute


@dataclass(frozen=True)
class TraceStep:
    rule: str  # drop_loops | fold | pendant | square | isolated
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class ReductionState:
    graph: Graph
    suspensions: int
    trace: Tuple[TraceStep, ...]

    @classmethod
    def initial(cls, g: Graph) -> "ReductionState":
        return cls(g, 0, ())

    @property
    def sign(self) -> int:
        return -1 if self.suspensions % 2 else 1

    def witten(self) -> int:
        """Index of the original graph, via the certificate."""
        return self.sign * witten_brute(self.graph)

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "suspensions": self.suspensions,
            "vertices_left": sorted(self.graph.vertices),
            "steps": [
                {"rule": s.rule, "vertices": list(s.vertices)} for s in self.trace
            ],
        }


@dataclass(frozen=True)
class Verdict:
    kind: str  # CONTRACTIBLE | REDUCED
    state: ReductionState


CONTRACTIBLE = "CONTRACTIBLE"
REDUCED = "REDUCED"


# -- residue graphs ---------------------------------------------------------------


def residue_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus N[v]."""
    if v not in g.vertices:
        raise ValueError(f"vertex {v} not in graph")
    return g.without_vertices(g.closed_neighborhood(v))


def residue_edge(g: Graph, e: Tuple[int, int]) -> Graph:
    """Induced subgraph on V minus (N[u] union N[v]); e need not be an edge."""
    u, v = e
    if u not in g.vertices or v not in g.vertices:
        raise ValueError(f"edge {e} has an endpoint outside the graph")
    return g.without_vertices(g.closed_neighborhood(u) | g.closed_neighborhood(v))


# -- individual rules ----------------------------------------------------------------


def _require(cond: bool, msg: str):
    if not cond:
        raise RuleInapplicableError(msg)


def _step(state: ReductionState, graph: Graph, rule: str,
          vertices: Tuple[int, ...], suspended: bool) -> ReductionState:
    return ReductionState(
        graph,
        state.suspensions + (1 if suspended else 0),
        state.trace + (TraceStep(rule, vertices),),
    )


def drop_loops(state: ReductionState) -> ReductionState:
    """Delete every looped vertex; no independent set can use one."""
    g = state.graph
    looped = tuple(sorted(v for v in g.vertices if g.has_loop(v)))
    if not looped:
        return state
    return _step(state, g.without_vertices(looped), "drop_loops", looped, False)


def apply_fold(state: ReductionState, u: int, v: int) -> ReductionState:
    g = state.graph
    _require(u in g.vertices and v in g.vertices and u != v,
             f"fold needs two distinct vertices, got {u}, {v}")
    _require(not g.has_loop(u) and not g.has_loop(v),
             "fold witnesses must be loop-free")
    _require(g.neighbors(u) <= g.neighbors(v),
             f"fold needs N({u}) contained in N({v})")
    return _step(state, g.without_vertices([v]), "fold", (u, v), False)


def apply_pendant_suspension(state: ReductionState, u: int, v: int) -> ReductionState:
    g = state.graph
    _require(u in g.vertices and v in g.vertices and u != v,
             f"pendant needs two distinct vertices, got {u}, {v}")
    _require(g.degree(u) == 1 and g.neighbors(u) == frozenset([v]),
             f"pendant needs deg({u}) = 1 with neighbor {v}")
    _require(not g.has_loop(v), "pendant support must be loop-free")
    return _step(state, g.without_vertices(g.closed_neighborhood(v)),
                 "pendant", (u, v), True)


def apply_square_suspension(state: ReductionState, u: int, v: int,
                            x: int, y: int) -> ReductionState:
    g = state.graph
    four = (u, v, x, y)
    _require(len(set(four)) == 4 and all(w in g.vertices for w in four),
             f"square needs four distinct vertices, got {four}")
    _require(all(not g.has_loop(w) for w in four), "square vertices must be loop-free")
    _require(g.has_edge(u, v), f"square needs {u} and {v} adjacent")
    _require(g.degree(u) == 2 and g.degree(v) == 2,
             f"square needs deg({u}) = deg({v}) = 2")
    _require(g.has_edge(v, x) and g.has_edge(x, y) and g.has_edge(y, u),
             f"{four} is not a 4-cycle")
    return _step(state, g.without_vertices(four), "square", four, True)


# -- contractibility configurations -----------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    kind: str  # A | B | C | D
    rule: str  # pendant | square
    rule_vertices: Tuple[int, ...]
    isolated_vertex: int


def _pendant_candidates(g: Graph) -> List[Tuple[int, int]]:
    out = []
    for u in sorted(g.vertices):
        if g.degree(u) == 1 and not g.has_loop(u):
            (v,) = g.neighbors(u)
            if not g.has_loop(v):
                out.append((u, v))
    return out


def _square_candidates(g: Graph) -> List[Tuple[int, int, int, int]]:
    out = []
    for u, v in sorted(g.edges):
        if u == v or g.degree(u) != 2 or g.degree(v) != 2:
            continue
        if g.has_loop(u) or g.has_loop(v):
            continue
        (y,) = g.neighbors(u) - {v}
        (x,) = g.neighbors(v) - {u}
        if x == y or g.has_loop(x) or g.has_loop(y):
            continue
        if g.has_edge(x, y):
            out.append((u, v, x, y))
    return out


def _effectively_isolated(h: Graph) -> List[int]:
    """Loop-free vertices of h all of whose neighbors are looped, ascending."""
    out = []
    for w in sorted(h.vertices):
        if h.has_loop(w):
            continue
        if all(h.has_loop(z) for z in h.neighbors(w)):
            out.append(w)
    return out


def detect_configuration(g: Graph) -> Optional[Configuration]:
    """Find a one-step certificate of contractibility.

    Searches for a pendant or square application whose result has an isolated
    loop-free vertex w; the suspension of a cone is contractible, so the
    original index is 0.  Kinds: pendant-based with deg(w) = 1 in g is A,
    other pendant-based is B; square-based with deg(w) = 1 is C, else D.
    When one application isolates several vertices, a degree-1 witness is
    preferred (the facing-pendants reading), then the lowest id.
    """

    def pick(ws: List[int]) -> Optional[int]:
        if not ws:
            return None
        degree_one = [w for w in ws if g.degree(w) == 1]
        return degree_one[0] if degree_one else ws[0]

    for u, v in _pendant_candidates(g):
        h = g.without_vertices(g.closed_neighborhood(v))
        w = pick(_effectively_isolated(h))
        if w is not None:
            kind = "A" if g.degree(w) == 1 else "B"
            return Configuration(kind, "pendant", (u, v), w)
    for u, v, x, y in _square_candidates(g):
        h = g.without_vertices({u, v, x, y})
        w = pick(_effectively_isolated(h))
        if w is not None:
            kind = "C" if g.degree(w) == 1 else "D"
            return Configuration(kind, "square", (u, v, x, y), w)
    return None


# -- the driver -----------------------------------------------------------------


def simplify(g: Graph) -> Verdict:
    """Rewrite until contractibility is certified or no rule applies.

    Deterministic rule order per pass: isolated-vertex test, fold on the
    lexicographically first (u, v) pair, pendant at the lowest pendant
    vertex, square at the lowest qualifying edge.
    """
    state = drop_loops(ReductionState.initial(g))
    while True:
        cur = state.graph
        isolated = next(
            (w for w in sorted(cur.vertices) if cur.degree(w) == 0), None
        )
        if isolated is not None:
            state = _step(state, cur, "isolated", (isolated,), False)
            return Verdict(CONTRACTIBLE, state)

        folded = False
        for u in sorted(cur.vertices):
            nu = cur.neighbors(u)
            for v in sorted(cur.vertices):
                if v != u and nu <= cur.neighbors(v):
                    state = apply_fold(state, u, v)
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue

        pendants = _pendant_candidates(cur)
        if pendants:
            u, v = pendants[0]
            state = apply_pendant_suspension(state, u, v)
            continue

        squares = _square_candidates(cur)
        if squares:
            state = apply_square_suspension(state, *squares[0])
            continue

        return Verdict(REDUCED, state)


def replay_trace(g: Graph, steps) -> ReductionState:
    """Re-run a trace (TraceStep sequence or JSON step dicts) from scratch.

    Every precondition is re-checked, so a tampered trace fails loudly.
    """
    state = ReductionState.initial(g)
    for step in steps:
        if isinstance(step, TraceStep):
            rule, verts = step.rule, tuple(step.vertices)
        else:
            rule, verts = step["rule"], tuple(step["vertices"])
        if rule == "drop_loops":
            state = drop_loops(state)
            if not state.trace or state.trace[-1].vertices != verts:
                raise RuleInapplicableError("drop_loops step does not match graph")
        elif rule == "fold":
            state = apply_fold(state, *verts)
        elif rule == "pendant":
            state = apply_pendant_suspension(state, *verts)
        elif rule == "square":
            state = apply_square_suspension(state, *verts)
        elif rule == "isolated":
            (w,) = verts
            cur = state.graph
            _require(w in cur.vertices and cur.degree(w) == 0,
                     f"vertex {w} is not isolated")
            state = _step(state, cur, "isolated", verts, False)
        else:
            raise RuleInapplicableError(f"unknown rule {rule!r}")
    return state
