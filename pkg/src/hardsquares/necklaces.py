"""Stone arrangements on a circle and their rotation dynamics.

A (k, n) arrangement places 2k stones at distinct integer points of a circle
with n unit intervals; each stone carries a tangent vector of length 1 or 2,
positive clockwise.  Walking clockwise the vector signs alternate, so stones
pair up: a consecutive pair facing towards each other spans a gap of at
least 3 (gap plus both vector lengths odd, gap 3 forcing both lengths 1),
and a pair facing away spans an odd gap.

The step transformation T jumps every stone along its vector, switches every
vector to the other direction and the other length, then shrinks any
length-2 vectors of pairs that ended up facing at distance 3.  T is a
bijection on arrangement classes (classes = orbits under circle isometries),
so its functional graph is a disjoint union of cycles; cycle_structure
computes them and cycle_length_lcm feeds the denominator bounds of the
generating-function module.

Arrangements encode the reducible proper patterns with a given block count:
pattern_of_arrangement writes a block of 1s across each facing gap (with the
alternating first row pulled in by the vector lengths) and 0101...0 across
each away gap; arrangement_of_pattern inverts it.  One T step corresponds to
peeling the pattern and collapsing the new first-row blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .patterns import (
    Pattern,
    PatternClass,
    _cyclic_groups,
    block_count,
    canonicalize as canonicalize_pattern,
    delete_top_neighborhood,
    is_proper,
    is_reducible,
    peel,
)

Stone = Tuple[int, int]  # (position, vector)

_TURN = {-2: 1, -1: 2, 1: -2, 2: -1}
_TOGGLE = {-2: -1, -1: -2, 1: 2, 2: 1}

DEFAULT_BOUND = 28
EXTENDED_BOUND = 36


@dataclass(frozen=True, order=True)
class Necklace:
    """Stones on a circle of n unit intervals, sorted by position."""

    n: int
    stones: Tuple[Stone, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("circle length must be positive")
        stones = tuple(sorted((p % self.n, v) for p, v in self.stones))
        if len(stones) < 2 or len(stones) % 2:
            raise ValueError("an arrangement has a positive even stone count")
        if len({p for p, _ in stones}) != len(stones):
            raise ValueError("stones must sit at distinct points")
        if any(v not in (-2, -1, 1, 2) for _, v in stones):
            raise ValueError("stone vectors must be one of -2, -1, 1, 2")
        object.__setattr__(self, "stones", stones)

    @property
    def stone_count(self) -> int:
        return len(self.stones)

    def __str__(self) -> str:
        return format_necklace(self)


def format_necklace(neck: Necklace) -> str:
    body = " ".join(f"{p}:{v:+d}" for p, v in neck.stones)
    return f"[{neck.n}| {body}]"


def _pairs(neck: Necklace) -> List[Tuple[Stone, Stone, int]]:
    """Consecutive stone pairs with their clockwise gaps."""
    stones = neck.stones
    out = []
    for i, (p, v) in enumerate(stones):
        q, w = stones[(i + 1) % len(stones)]
        out.append(((p, v), (q, w), (q - p) % neck.n))
    return out


def is_valid(neck: Necklace) -> bool:
    """The alternating-direction and gap-parity conditions."""
    for (_, v), (_, w), gap in _pairs(neck):
        if v * w > 0:
            return False
        if v < 0:  # facing away (next stone's vector points onward)
            if gap % 2 == 0:
                return False
        else:  # facing towards
            if (gap + abs(v) + abs(w)) % 2 == 0:
                return False
            if gap < 3:
                return False
            if gap == 3 and (abs(v) != 1 or abs(w) != 1):
                return False
    return True


# -- the step transformation --------------------------------------------------------


def _fix_close_pairs(n: int, stones: Iterable[Stone]) -> Tuple[Stone, ...]:
    """Shrink length-2 vectors of pairs facing each other at distance 3."""
    stones = sorted(stones)
    vecs = {p: v for p, v in stones}
    for (p, v), (q, w), gap in _pairs(Necklace(n, tuple(stones))):
        if v > 0 and w < 0 and gap == 3:
            vecs[p] = 1
            vecs[q] = -1
    return tuple(sorted(vecs.items()))


def transform(neck: Necklace) -> Necklace:
    """Jump every stone, switch every vector, then fix distance-3 pairs."""
    jumped = [((p + v) % neck.n, _TURN[v]) for p, v in neck.stones]
    return Necklace(neck.n, _fix_close_pairs(neck.n, jumped))


def transform_inverse(neck: Necklace) -> Necklace:
    """Inverse step: toggle lengths away from distance-3 pairs, jump, flip."""
    exempt = set()
    for (p, v), (q, w), gap in _pairs(neck):
        if v > 0 and w < 0 and gap == 3:
            exempt.add(p)
            exempt.add(q)
    adjusted = [(p, v if p in exempt else _TOGGLE[v]) for p, v in neck.stones]
    flipped = tuple(((p + v) % neck.n, -v) for p, v in adjusted)
    return Necklace(neck.n, flipped)


# -- canonical classes --------------------------------------------------------------


@dataclass(frozen=True, order=True)
class NecklaceClass:
    """Isometry class of arrangements, keyed by a canonical representative."""

    canonical: Necklace

    @property
    def n(self) -> int:
        return self.canonical.n


def _sequence(neck: Necklace) -> Tuple[Tuple[int, int], ...]:
    """(vector, gap to next stone) pairs starting from the lowest stone."""
    return tuple((v, gap) for (_, v), _, gap in _pairs(neck))


def _reflect_sequence(seq: Sequence[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    length = len(seq)
    return tuple(
        (-seq[(length - j) % length][0], seq[length - 1 - j][1])
        for j in range(length)
    )


def _min_rotation(seq: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
    doubled = seq + seq
    length = len(seq)
    return min(doubled[s:s + length] for s in range(length))


def _canonical_sequence(neck: Necklace) -> Tuple[Tuple[int, int], ...]:
    seq = _sequence(neck)
    return min(_min_rotation(seq), _min_rotation(_reflect_sequence(seq)))


def _from_sequence(n: int, seq: Sequence[Tuple[int, int]]) -> Necklace:
    stones = []
    pos = 0
    for v, gap in seq:
        stones.append((pos, v))
        pos += gap
    return Necklace(n, tuple(stones))


def canonicalize(neck: Necklace) -> NecklaceClass:
    """Lexicographic minimum over rotations and reflections of the circle."""
    return NecklaceClass(_from_sequence(neck.n, _canonical_sequence(neck)))


# -- enumeration and cycle structure ----------------------------------------------


def enumerate_necklaces(k: int, n: int, bound: int = DEFAULT_BOUND) -> List[NecklaceClass]:
    """All (k, n) arrangement classes, sorted by canonical representative."""
    if k < 1:
        raise ValueError("at least one stone pair is required")
    if n > bound:
        raise ResourceLimitError(f"circle length {n} exceeds the bound {bound}")
    if 4 * k > n:
        return []
    found = set()

    def extend(pairs_left: int, used: int, seq: List[Tuple[int, int]]):
        if pairs_left == 0:
            if used == n:
                found.add(min(_min_rotation(tuple(seq)),
                              _min_rotation(_reflect_sequence(seq))))
            return
        floor_rest = 4 * (pairs_left - 1)
        for inward in (1, 2):
            for outward in (1, 2):
                t_lo = 3 if (3 + inward + outward) % 2 else 4
                if t_lo == 3 and (inward != 1 or outward != 1):
                    t_lo = 5
                for t_gap in range(t_lo, n - used - floor_rest, 2):
                    for a_gap in range(1, n - used - t_gap - floor_rest + 1, 2):
                        seq.append((inward, t_gap))
                        seq.append((-outward, a_gap))
                        extend(pairs_left - 1, used + t_gap + a_gap, seq)
                        seq.pop()
                        seq.pop()

    extend(k, 0, [])
    return sorted(NecklaceClass(_from_sequence(n, seq)) for seq in found)


@lru_cache(maxsize=None)
def _cycles_cached(k: int, n: int, bound: int) -> Tuple[Tuple[int, int], ...]:
    classes = enumerate_necklaces(k, n, bound)
    succ = {cls: canonicalize(transform(cls.canonical)) for cls in classes}
    if sorted(succ.values()) != sorted(succ):
        raise RuntimeError("the step transformation failed to permute classes")
    lengths: Dict[int, int] = {}
    remaining = set(succ)
    while remaining:
        start = remaining.pop()
        cur, size = succ[start], 1
        while cur != start:
            remaining.remove(cur)
            cur = succ[cur]
            size += 1
        lengths[size] = lengths.get(size, 0) + 1
    return tuple(sorted(lengths.items()))


def cycle_structure(k: int, n: int, bound: int = DEFAULT_BOUND) -> Dict[int, int]:
    """Multiset of cycle lengths of the step transformation, as length -> count."""
    return dict(_cycles_cached(k, n, bound))


def format_cycle_structure(lengths: Dict[int, int]) -> str:
    return " ".join(f"{size}^{count}" for size, count in sorted(lengths.items()))


def cycle_length_lcm(k: int, n: int, bound: int = DEFAULT_BOUND) -> int:
    """Least common multiple of all cycle lengths (1 for an empty graph)."""
    return lcm(*(size for size, _ in _cycles_cached(k, n, bound)), 1)


def verify_cycle_divisibility(k: int, n: int, bound: int = DEFAULT_BOUND) -> bool:
    """Do all cycle lengths divide n - 3k?"""
    return (n - 3 * k) % cycle_length_lcm(k, n, bound) == 0


def transitions(k: int, n: int, bound: int = DEFAULT_BOUND) -> List[Tuple[NecklaceClass, NecklaceClass]]:
    classes = enumerate_necklaces(k, n, bound)
    return [(cls, canonicalize(transform(cls.canonical))) for cls in classes]


# -- correspondence with patterns ---------------------------------------------------


def pattern_of_necklace(neck: Necklace) -> Pattern:
    """Blocks across facing gaps, alternating strips across away gaps."""
    n = neck.n
    row1 = [0] * n
    row2 = [0] * n
    for (p, v), (_, w), gap in _pairs(neck):
        if v > 0:  # facing pair: a block of length gap starting at p
            for c in range(gap):
                row2[(p + c) % n] = 1
            if gap > 3:
                for off in range(v, gap - abs(w), 2):
                    row1[(p + off) % n] = 1
        else:  # away pair: 0101...0 across the gap
            for off in range(1, gap - 1, 2):
                row2[(p + off) % n] = 1
    return Pattern(tuple(row1), tuple(row2))


def necklace_of_pattern(p: Pattern) -> Necklace:
    """Stones at block boundaries; vector lengths from the overhang zeros."""
    if not is_proper(p) or not is_reducible(p):
        raise ValueError("only proper patterns without first-row blocks convert")
    groups = _cyclic_groups(p.row2)
    blocks = [] if groups is None else [(s, l) for s, l in groups if l >= 3]
    if not blocks:
        raise ValueError("the pattern has no second-row block")
    n = p.n
    stones = []
    for start, length in blocks:
        if length == 3:
            left, right = 1, 1
        else:
            above = [p.row1[(start + j) % n] for j in range(length)]
            left = above.index(1)
            right = above[::-1].index(1)
        stones.append((start, left))
        stones.append(((start + length) % n, -right))
    return Necklace(n, tuple(stones))


def collapse_top_blocks(p: Pattern) -> Pattern:
    """Neighborhood-delete the middle of every first-row block."""
    groups = _cyclic_groups(p.row1) or []
    out = p
    for start, length in groups:
        if length >= 3:
            out = delete_top_neighborhood(out, (start + length // 2) % p.n)
    return out


def check_correspondence(n: int, bound: int = DEFAULT_BOUND) -> bool:
    """The three structural identities tying arrangements to patterns.

    For every (k, n) class: converting to a pattern gives a proper reducible
    pattern with block count k; converting back returns the same arrangement;
    and stepping the arrangement matches peeling the pattern and collapsing
    the new first-row blocks, as classes.
    """
    for k in range(1, n // 4 + 1):
        for cls in enumerate_necklaces(k, n, bound):
            neck = cls.canonical
            pat = pattern_of_necklace(neck)
            if not (is_proper(pat) and is_reducible(pat)):
                return False
            if block_count(pat) != k:
                return False
            if canonicalize(necklace_of_pattern(pat)) != cls:
                return False
            stepped = pattern_of_necklace(transform(neck))
            peeled, _ = peel(pat)
            if (canonicalize_pattern(stepped)
                    != canonicalize_pattern(collapse_top_blocks(peeled))):
                return False
    return True


# -- export helpers ----------------------------------------------------------------


def necklace_to_json_obj(neck: Necklace) -> dict:
    return {"schema": 1, "n": neck.n, "stones": [list(s) for s in neck.stones]}


def dot_transition_graph(k: int, n: int, bound: int = DEFAULT_BOUND) -> str:
    """The step transformation on classes in DOT format."""
    lines = [f'digraph "neck_{k}_{n}" {{']
    for src, dst in transitions(k, n, bound):
        lines.append(f'  "{format_necklace(src.canonical)}" -> '
                     f'"{format_necklace(dst.canonical)}";')
    lines.append("}")
    return "\n".join(lines)
