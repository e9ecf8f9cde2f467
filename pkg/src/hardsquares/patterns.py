"""Cyclic two-row patterns and their masked-cylinder indices.

A pattern is a 2 x n 0/1 matrix (n even, columns cyclic) with every first-row
1 sitting on a second-row 1.  Masking the first two rows of P_m x C_n by a
pattern gives the graph whose Witten index z_pattern computes; the all-ones
pattern recovers the full cylinder.  Three rewrite operations generate the
calculus:

  delete_top(P, i)               zero the row-1 entry at i
  delete_top_neighborhood(P, i)  zero row-1 at i-1, i, i+1 and row-2 at i
  peel(P)                        for patterns whose row-1 ones are all
                                 isolated: drop row 1 against a fresh
                                 all-ones row, at a sign (-1)^k and a shift
                                 of one grid row

with the index identities (m counted as grid rows, m >= 2):

  z(P, m) = z(delete_top(P,i), m) - z(delete_top_neighborhood(P,i), m)
  z(P, m) = (-1)^k * z(peel(P), m-1)        (usable once m-1 >= 2)

Proper patterns are the closed class these operations stay inside; their
block_count (number of maximal 1-groups of length >= 3, both rows) is the
induction measure: delete_top at a block middle lowers it by one, the other
two preserve it.  Patterns related by rotation or reflection of the cycle
give isomorphic graphs and are identified by canonicalize().

Index series convention: the pattern-level generating function starts at
m = 2 (z_pattern is undefined below that); the cylinder series prepends its
m = 0, 1 values separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError, RuleInapplicableError
from .graphs import Graph, GridSpec, _ring_states, build_grid, grid_vertex


Bits = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Pattern:
    row1: Bits
    row2: Bits

    def __post_init__(self):
        n = len(self.row1)
        if n != len(self.row2):
            raise ValueError("rows differ in length")
        if n < 2 or n % 2:
            raise ValueError("pattern length must be even and at least 2")
        for row in (self.row1, self.row2):
            if any(b not in (0, 1) for b in row):
                raise ValueError("pattern entries must be 0 or 1")
        for i in range(n):
            if self.row1[i] == 1 and self.row2[i] == 0:
                raise ValueError(f"column {i} has a 1 above a 0")

    @property
    def n(self) -> int:
        return len(self.row1)

    def __str__(self) -> str:
        return format_pattern(self)


def pattern(row1: Iterable[int], row2: Iterable[int]) -> Pattern:
    return Pattern(tuple(row1), tuple(row2))


def parse_pattern(text: str) -> Pattern:
    """Parse the two-line text form, e.g. ``"101000 / 111101"``."""
    parts = text.replace("/", " ").split()
    if len(parts) != 2:
        raise ValueError(f"expected 'ROW1 / ROW2', got {text!r}")
    rows = []
    for part in parts:
        if set(part) - {"0", "1"}:
            raise ValueError(f"rows must be 0/1 strings, got {part!r}")
        rows.append(tuple(int(c) for c in part))
    return Pattern(rows[0], rows[1])


def format_pattern(p: Pattern) -> str:
    return "".join(map(str, p.row1)) + " / " + "".join(map(str, p.row2))


def all_ones(n: int) -> Pattern:
    return Pattern((1,) * n, (1,) * n)


# -- symmetry ---------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PatternClass:
    """Equivalence class under rotation/reflection, keyed by its canonical form."""

    canonical: Pattern

    @property
    def n(self) -> int:
        return self.canonical.n


def _rotate(row: Bits, k: int) -> Bits:
    return row[k:] + row[:k]


def _reflect(row: Bits) -> Bits:
    return tuple(reversed(row))


def canonicalize(p: Pattern) -> PatternClass:
    """Lexicographic minimum of (row1 + row2) over the 2n cycle symmetries."""
    best: Optional[Tuple[Bits, Bits]] = None
    for r1, r2 in ((p.row1, p.row2), (_reflect(p.row1), _reflect(p.row2))):
        for k in range(p.n):
            cand = (_rotate(r1, k), _rotate(r2, k))
            if best is None or cand < best:
                best = cand
    return PatternClass(Pattern(*best))


# -- masked graphs and indices ----------------------------------------------------------


def masked_graph(p: Pattern, m: int) -> Graph:
    """The first two rows of P_m x C_n masked by p; rows 3..m intact."""
    if m < 2:
        raise ValueError("masked graphs need at least 2 rows")
    g = build_grid(GridSpec("cylinder", m, p.n))
    drop = [grid_vertex(g, 1, i) for i in range(p.n) if p.row1[i] == 0]
    drop += [grid_vertex(g, 2, i) for i in range(p.n) if p.row2[i] == 0]
    return g.without_vertices(drop)


@lru_cache(maxsize=None)
def _tail_vector(n: int, r: int) -> Tuple[int, ...]:
    """h_r[s] = signed count of r further rows stacked above ring state s."""
    states, compat, weights = _ring_states(n, True)
    if r == 0:
        return (1,) * len(states)
    prev = _tail_vector(n, r - 1)
    return tuple(
        sum(weights[j] * prev[j] for j in compat[i]) for i in range(len(states))
    )


def _row_mask(row: Bits) -> int:
    mask = 0
    for i, b in enumerate(row):
        if b:
            mask |= 1 << i
    return mask


def z_pattern_series(p: Pattern, m_max: int) -> List[int]:
    """[z(P;m) for m = 0..m_max] with the m < 2 entries set to 0.

    Transfer evaluation: row-1 and row-2 states are restricted to the masks,
    rows 3..m are free ring states folded in via cached tail vectors.
    """
    states, compat, weights = _ring_states(p.n, True)
    mask1 = _row_mask(p.row1)
    mask2 = _row_mask(p.row2)
    in1 = [i for i, s in enumerate(states) if not (s & ~mask1)]
    in1_set = set(in1)
    base: Dict[int, int] = {}
    for i2, s2 in enumerate(states):
        if s2 & ~mask2:
            continue
        c = sum(weights[j] for j in compat[i2] if j in in1_set)
        if c:
            base[i2] = weights[i2] * c
    out = [0] * (m_max + 1) if m_max >= 0 else []
    for m in range(2, m_max + 1):
        tail = _tail_vector(p.n, m - 2)
        out[m] = sum(v * tail[i2] for i2, v in base.items())
    return out


def z_pattern(p: Pattern, m: int) -> int:
    """Witten index of the masked cylinder with m rows (m >= 2)."""
    if m < 2:
        raise ValueError("z_pattern needs m >= 2")
    return z_pattern_series(p, m)[m]


# -- rewrite operations ------------------------------------------------------------------


def delete_top(p: Pattern, i: int) -> Pattern:
    """Zero the row-1 entry at column i (which must be 1)."""
    i %= p.n
    if p.row1[i] != 1:
        raise RuleInapplicableError(f"row 1 has no 1 at column {i}")
    row1 = list(p.row1)
    row1[i] = 0
    return Pattern(tuple(row1), p.row2)


def delete_top_neighborhood(p: Pattern, i: int) -> Pattern:
    """Zero row-1 at columns i-1, i, i+1 and row-2 at column i."""
    i %= p.n
    if p.row1[i] != 1:
        raise RuleInapplicableError(f"row 1 has no 1 at column {i}")
    row1 = list(p.row1)
    row2 = list(p.row2)
    for j in (i - 1, i, i + 1):
        row1[j % p.n] = 0
    row2[i] = 0
    return Pattern(tuple(row1), tuple(row2))


def is_reducible(p: Pattern) -> bool:
    """True when every row-1 one is isolated (no two adjacent, cyclically)."""
    n = p.n
    return all(
        not (p.row1[i] and p.row1[(i + 1) % n]) for i in range(n)
    )


def peel(p: Pattern) -> Tuple[Pattern, int]:
    """Eliminate row 1 of a reducible pattern against a fresh all-ones row.

    Each isolated row-1 one at column i acts as a pendant: it wipes row-2 at
    i-1, i, i+1 and the new row at i.  Returns (peeled pattern, (-1)^k) with
    k the number of row-1 ones; z(P;m) = sign * z(peeled;m-1) once m >= 3.
    """
    if not is_reducible(p):
        raise RuleInapplicableError("peel needs all row-1 ones isolated")
    n = p.n
    new1 = list(p.row2)
    new2 = [1] * n
    k = 0
    for i in range(n):
        if p.row1[i]:
            k += 1
            for j in (i - 1, i, i + 1):
                new1[j % n] = 0
            new2[i] = 0
    return Pattern(tuple(new1), tuple(new2)), (-1 if k % 2 else 1)


# -- row structure ---------------------------------------------------------------


def _cyclic_groups(row: Bits) -> Optional[List[Tuple[int, int]]]:
    """Maximal cyclic 1-groups as (start, length); None when the row is all ones."""
    n = len(row)
    if all(row):
        return None
    groups: List[Tuple[int, int]] = []
    anchor = row.index(0)
    start = None
    length = 0
    for k in range(1, n + 1):
        j = (anchor + k) % n
        if row[j]:
            if start is None:
                start, length = j, 1
            else:
                length += 1
        elif start is not None:
            groups.append((start, length))
            start = None
    return groups


def _is_cyclic_run(row: Bits, nice: bool = False) -> bool:
    """A cyclic sequence of singletons and blocks separated by single zeros.

    Blocks are groups of length >= 3 (exactly 3 when nice); the all-zero and
    all-one rows are not runs.
    """
    groups = _cyclic_groups(row)
    if groups is None or not groups:
        return False
    n = len(row)
    for _, length in groups:
        if length == 2 or (nice and length not in (1, 3)):
            return False
    for (s, l), (s2, _) in zip(groups, groups[1:] + groups[:1]):
        if (s2 - s - l) % n != 1:
            return False
    return True


def _linear_groups(seg: Sequence[int]) -> List[Tuple[int, int]]:
    groups = []
    start = None
    for j, b in enumerate(seg):
        if b:
            if start is None:
                start = j
        elif start is not None:
            groups.append((start, j - start))
            start = None
    if start is not None:
        groups.append((start, len(seg) - start))
    return groups


def _is_aligned_nice_run(seg: Sequence[int]) -> bool:
    """Nonempty nice run filling the span above a long row-2 block.

    Interior groups are singletons or 3-blocks with single-zero separation;
    a leading 3-block starts exactly at the 3rd position, a leading singleton
    at the 2nd or 3rd; mirrored on the right.
    """
    groups = _linear_groups(seg)
    if not groups:
        return False
    if any(length not in (1, 3) for _, length in groups):
        return False
    for (s, l), (s2, _) in zip(groups, groups[1:]):
        if s2 - s - l != 1:
            return False
    l_seg = len(seg)
    s0, len0 = groups[0]
    if len0 == 3 and s0 != 2:
        return False
    if len0 == 1 and s0 not in (1, 2):
        return False
    s_last, len_last = groups[-1]
    end = s_last + len_last - 1
    if len_last == 3 and end != l_seg - 3:
        return False
    if len_last == 1 and end not in (l_seg - 2, l_seg - 3):
        return False
    return True


def is_proper(p: Pattern) -> bool:
    """The closure class of the rewrite calculus; see the module docstring.

    Row 2 is a cyclic run or all ones (all ones forces row 1 to be a
    nonempty cyclic nice run); row-2 singletons and 3-blocks carry nothing
    above; every longer row-2 block carries an aligned nice run.
    """
    groups2 = _cyclic_groups(p.row2)
    if groups2 is None:
        return _is_cyclic_run(p.row1, nice=True)
    if not _is_cyclic_run(p.row2):
        return False
    n = p.n
    for start, length in groups2:
        seg = [p.row1[(start + j) % n] for j in range(length)]
        if length in (1, 3):
            if any(seg):
                return False
        else:
            if not _is_aligned_nice_run(seg):
                return False
    return True


def block_count(p: Pattern) -> int:
    """Number of length >= 3 groups over both rows (the induction measure)."""
    if not is_proper(p):
        raise ValueError("block_count is defined for proper patterns only")
    total = 0
    for row in (p.row1, p.row2):
        groups = _cyclic_groups(row)
        if groups:
            total += sum(1 for _, length in groups if length >= 3)
    return total


def leftmost_block_middle(p: Pattern) -> int:
    """Column of the middle of the lowest-starting row-1 block (length 3)."""
    groups = _cyclic_groups(p.row1)
    if groups is None:
        raise RuleInapplicableError("row 1 is all ones")
    blocks = [(s, l) for s, l in groups if l >= 3]
    if not blocks:
        raise RuleInapplicableError("row 1 has no block")
    start, length = min(blocks)
    return (start + length // 2) % p.n


# -- enumeration ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _aligned_runs(length: int) -> Tuple[Bits, ...]:
    """All aligned nice runs that can sit above a row-2 block of this length."""
    return tuple(
        bits
        for bits in product((0, 1), repeat=length)
        if _is_aligned_nice_run(bits)
    )


def enumerate_proper(n: int, mu: Optional[int] = None, bound: int = 16) -> List[PatternClass]:
    """All canonical proper pattern classes of length n, optionally by measure.

    Works blockwise: row 2 ranges over cyclic runs (plus all-ones), and each
    long row-2 block independently carries one of its aligned nice runs.
    """
    if n < 2 or n % 2:
        raise ValueError("pattern length must be even and at least 2")
    if n > bound:
        raise ResourceLimitError(f"pattern length {n} exceeds the bound {bound}")
    seen: Dict[PatternClass, None] = {}

    def record(p: Pattern):
        cls = canonicalize(p)
        if cls not in seen:
            seen[cls] = None

    # all-ones second row: the first row is any nonempty cyclic nice run
    ones = (1,) * n
    for bits in product((0, 1), repeat=n):
        if _is_cyclic_run(bits, nice=True):
            record(Pattern(bits, ones))

    for mask in range(1 << n):
        row2 = tuple((mask >> i) & 1 for i in range(n))
        if not _is_cyclic_run(row2):
            continue
        groups = _cyclic_groups(row2)
        long_blocks = [(s, l) for s, l in groups if l >= 4]
        choices = [_aligned_runs(l) for _, l in long_blocks]
        for combo in product(*choices):
            row1 = [0] * n
            for (start, length), seg in zip(long_blocks, combo):
                for j, b in enumerate(seg):
                    row1[(start + j) % n] = b
            record(Pattern(tuple(row1), row2))

    classes = sorted(seen)
    if mu is not None:
        classes = [c for c in classes if block_count(c.canonical) == mu]
    return classes


# -- initial decomposition ----------------------------------------------------------


@dataclass(frozen=True)
class SignedPatternCombo:
    """Integer combination of pattern classes; zero coefficients are dropped."""

    terms: Tuple[Tuple[PatternClass, int], ...]

    def coefficient(self, cls: PatternClass) -> int:
        for c, coeff in self.terms:
            if c == cls:
                return coeff
        return 0

    def evaluate(self, m: int) -> int:
        return sum(coeff * z_pattern(c.canonical, m) for c, coeff in self.terms)


def initial_patterns(n: int) -> SignedPatternCombo:
    """Expansion of the full cylinder over masked patterns.

    At every even column the all-ones pattern takes either a delete_top or a
    delete_top_neighborhood; the 2^{n/2} outcomes, signed by (-1)^{#
    neighborhood deletions}, sum to the cylinder index for every m >= 2.
    All writes set entries to 0, so simultaneous application is well defined.
    """
    if n < 2 or n % 2:
        raise ValueError("initial patterns need even n >= 2")
    combo: Dict[PatternClass, int] = {}
    evens = range(0, n, 2)
    for picks in product("VN", repeat=len(evens)):
        row1 = [1] * n
        row2 = [1] * n
        sign = 1
        for i, op in zip(evens, picks):
            if op == "V":
                row1[i] = 0
            else:
                sign = -sign
                for j in (i - 1, i, i + 1):
                    row1[j % n] = 0
                row2[i] = 0
        cls = canonicalize(Pattern(tuple(row1), tuple(row2)))
        combo[cls] = combo.get(cls, 0) + sign
    terms = tuple(
        (cls, coeff) for cls, coeff in sorted(combo.items()) if coeff != 0
    )
    return SignedPatternCombo(terms)
