"""Stone-arrangement tests.

Claims covered:
- constructor normalization and validation (distinct points, even count,
  vector range); is_valid enforces alternation and the gap parity rules.
- the step transformation preserves validity, transform_inverse inverts it
  both ways, and stepping a one-pair arrangement walks the frozen orbit
  (widest gap -> gap 3 -> shrinking long vectors).
- canonicalize identifies rotated and reflected arrangements.
- enumeration is empty exactly when 4k > n, respects its resource bound,
  and its classes are all valid.
- cycle structures match the golden table for every n <= 20 cell (the full
  file through n = 36 with HARDSQUARES_EXTENDED=1), and the closed forms:
  one pair gives one (n-3)-cycle, 2k stones on 4k intervals give one fixed
  point, and on 4k+2 intervals one (k+2)-cycle plus floor(k/2) fixed points.
- every cycle length divides n - 3k for even n <= 24.
- the pattern correspondence: arrangements map to proper reducible patterns
  with block count k, back-conversion is the identity, and one step of the
  arrangement equals peel-then-collapse on the pattern, for all n <= 14.
- JSON and DOT exports are deterministic and well formed.
"""

import os

import pytest

from hardsquares.errors import ResourceLimitError
from hardsquares.necklaces import (
    Necklace,
    NecklaceClass,
    canonicalize,
    check_correspondence,
    collapse_top_blocks,
    cycle_length_lcm,
    cycle_structure,
    dot_transition_graph,
    enumerate_necklaces,
    format_cycle_structure,
    format_necklace,
    is_valid,
    necklace_of_pattern,
    necklace_to_json_obj,
    pattern_of_necklace,
    transform,
    transform_inverse,
    transitions,
    verify_cycle_divisibility,
)
from hardsquares.patterns import block_count, is_proper, is_reducible, parse_pattern
from helpers import load_golden_cycles

EXTENDED = os.environ.get("HARDSQUARES_EXTENDED") == "1"


def test_constructor_normalization_and_validation():
    neck = Necklace(8, ((5, -1), (0, 1)))
    assert neck.stones == ((0, 1), (5, -1))
    assert neck.stone_count == 2
    with pytest.raises(ValueError):
        Necklace(8, ((0, 1), (0, -1)))  # same point
    with pytest.raises(ValueError):
        Necklace(8, ((0, 1),))  # odd stone count
    with pytest.raises(ValueError):
        Necklace(8, ((0, 3), (4, -1)))  # vector out of range


def test_validity_conditions():
    # facing pair at distance 5 with unit vectors, away gap 3
    assert is_valid(Necklace(8, ((0, 1), (5, -1))))
    # same-direction consecutive stones
    assert not is_valid(Necklace(8, ((0, 1), (5, 1))))
    # facing distance 3 needs unit vectors
    assert is_valid(Necklace(8, ((0, 1), (3, -1))))
    assert not is_valid(Necklace(8, ((0, 2), (3, -1))))
    # away gap must be odd: distance 4 facing with mixed lengths makes
    # the away gap 4 as well
    assert not is_valid(Necklace(8, ((0, 1), (4, -2))))
    # parity: facing gap 4 needs vector lengths of opposite parity
    assert is_valid(Necklace(9, ((0, 1), (4, -2))))
    # facing pair closer than 3
    assert not is_valid(Necklace(6, ((0, 1), (2, -1), (3, 1), (5, -1))))


def test_step_on_one_pair_orbit():
    # widest one-pair arrangement on 8 intervals: facing gap 7, unit vectors
    widest = Necklace(8, ((0, 1), (7, -1)))
    orbit = [widest]
    for _ in range(5):
        orbit.append(transform(orbit[-1]))
        assert is_valid(orbit[-1])
    # the jump lands the pair facing at distance 3 with long vectors, which
    # the fix shrinks; the orbit then widens again and closes after 5 = n-3
    assert orbit[1] == Necklace(8, ((1, -1), (6, 1)))   # facing gap 3
    assert orbit[2] == Necklace(8, ((0, 2), (7, -2)))   # facing gap 7, long
    assert orbit[3] == Necklace(8, ((2, -1), (5, 1)))   # facing gap 5
    assert orbit[4] == Necklace(8, ((1, 2), (6, -2)))   # facing gap 5, long
    assert orbit[5] == Necklace(8, ((3, -1), (4, 1)))   # facing gap 7 again
    assert canonicalize(orbit[5]) == canonicalize(widest)


def test_transform_inverse_round_trip():
    for k, n in ((1, 8), (2, 12), (2, 14), (3, 16)):
        for cls in enumerate_necklaces(k, n):
            neck = cls.canonical
            assert is_valid(neck)
            stepped = transform(neck)
            assert is_valid(stepped)
            assert transform_inverse(stepped) == neck
            assert transform(transform_inverse(neck)) == neck


def test_canonicalize_identifies_isometries():
    neck = Necklace(12, ((0, 1), (5, -1), (8, 1), (11, -1)))
    assert is_valid(neck)
    cls = canonicalize(neck)
    rotated = Necklace(12, tuple(((p + 7) % 12, v) for p, v in neck.stones))
    reflected = Necklace(12, tuple(((-p) % 12, -v) for p, v in neck.stones))
    assert canonicalize(rotated) == cls
    assert canonicalize(reflected) == cls
    assert canonicalize(transform(neck)) != cls  # this one moves


def test_enumeration_counts_and_bounds():
    assert enumerate_necklaces(2, 7) == []
    assert len(enumerate_necklaces(1, 4)) == 1
    assert len(enumerate_necklaces(1, 10)) == 7
    # 2^1 3^2 6^1 has 2 + 6 + 6 = 14 classes
    assert len(enumerate_necklaces(2, 12)) == 14
    with pytest.raises(ValueError):
        enumerate_necklaces(0, 12)
    with pytest.raises(ResourceLimitError):
        enumerate_necklaces(2, 30)
    for cls in enumerate_necklaces(2, 14):
        assert is_valid(cls.canonical)


def test_cycle_structures_match_golden_table():
    golden = load_golden_cycles()
    limit = 36 if EXTENDED else 20
    for (n, k), expect in sorted(golden.items()):
        if n > limit:
            continue
        got = format_cycle_structure(cycle_structure(k, n, bound=36))
        assert got == expect, (n, k, got, expect)


def test_closed_form_families():
    for n in (4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24):
        assert cycle_structure(1, n) == {n - 3: 1}
    for k in (1, 2, 3, 4, 5, 6):
        assert cycle_structure(k, 4 * k) == {1: 1}
        expect = {k + 2: 1}
        if k // 2:
            expect[1] = k // 2
        assert cycle_structure(k, 4 * k + 2) == expect


def test_cycle_lengths_divide_slack():
    for n in range(4, 25, 2):
        for k in range(1, n // 4 + 1):
            assert verify_cycle_divisibility(k, n), (k, n)


def test_cycle_length_lcm_values():
    assert cycle_length_lcm(1, 6) == 3
    assert cycle_length_lcm(2, 12) == 6
    assert cycle_length_lcm(2, 10) == 4
    assert cycle_length_lcm(3, 12) == 1
    # empty graph
    assert cycle_length_lcm(5, 12) == 1


def test_pattern_of_necklace_example():
    # facing gap 3 plus away gap 1 on 4 intervals: one 3-block, nothing above
    tight = Necklace(4, ((0, 1), (3, -1)))
    assert pattern_of_necklace(tight) == parse_pattern("0000 / 1110")
    # facing gap 5 with unit vectors: 101 above the middle of the block
    wide = Necklace(8, ((0, 1), (5, -1)))
    assert pattern_of_necklace(wide) == parse_pattern("01010000 / 11111010")
    # long vectors pull the first-row strip inward
    long_vecs = Necklace(10, ((0, 2), (7, -2)))
    assert pattern_of_necklace(long_vecs) == parse_pattern(
        "0010100000 / 1111111010")


def test_round_trip_and_block_counts():
    for n in (4, 6, 8, 10, 12):
        for k in range(1, n // 4 + 1):
            for cls in enumerate_necklaces(k, n):
                pat = pattern_of_necklace(cls.canonical)
                assert is_proper(pat)
                assert is_reducible(pat)
                assert block_count(pat) == k
                assert necklace_of_pattern(pat) == cls.canonical


def test_necklace_of_pattern_validation():
    with pytest.raises(ValueError):
        necklace_of_pattern(parse_pattern("000000 / 010101"))  # no blocks
    with pytest.raises(ValueError):
        necklace_of_pattern(parse_pattern("101110 / 111111"))  # irreducible


def test_collapse_top_blocks():
    p = parse_pattern("1011101110 / 1111111111")
    collapsed = collapse_top_blocks(p)
    assert collapsed == parse_pattern("1000000000 / 1110111011")
    assert is_reducible(collapsed)
    assert block_count(collapsed) == block_count(p)


def test_correspondence_identities():
    for n in (4, 6, 8, 10, 12, 14):
        assert check_correspondence(n)


def test_exports():
    neck = Necklace(8, ((0, 1), (5, -1)))
    assert necklace_to_json_obj(neck) == {
        "schema": 1, "n": 8, "stones": [[0, 1], [5, -1]]}
    assert format_necklace(neck) == "[8| 0:+1 5:-1]"
    dot = dot_transition_graph(1, 6)
    assert dot.startswith('digraph "neck_1_6" {')
    assert dot.endswith("}")
    assert dot.count("->") == len(enumerate_necklaces(1, 6)) == 3
    assert dot == dot_transition_graph(1, 6)  # deterministic
    pairs = transitions(1, 6)
    assert len(pairs) == 3
    assert all(isinstance(a, NecklaceClass) and isinstance(b, NecklaceClass)
               for a, b in pairs)
