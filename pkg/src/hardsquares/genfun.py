"""Exact generating functions for cylinder Witten indices.

The fixed-circumference series F_n(t) = sum_m Z(P_m x C_n) t^m is rational.
For even n this module derives it exactly through the pattern calculus:

  - every pattern class has a deterministic successor: reducible classes
    peel (one grid row shorter, a known sign), irreducible ones split at the
    middle of the leftmost row-1 block into a side class with one block
    fewer and a successor with the same block count;
  - following successors must eventually revisit a class, and any such
    cycle contains a peel step (the two deletions strictly shrink the
    pattern, only peel regrows it), so the loop equation
    F = A + sigma * t^a * F with a >= 1 solves the cycle exactly and the
    walk back-substitutes the rest;
  - side classes recurse on the block count, which is finite.

Every computed series is re-validated coefficient by coefficient against
the direct transfer evaluation, and the assembled cylinder series is
cross-checked against a recurrence fitted to the raw column series; any
mismatch raises ConsistencyError rather than returning a wrong answer.

The odd-circumference series offers no pattern route here and is fitted
directly from enough series terms (fitted_cylinder_gf).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Dict, List, Optional, Tuple, Union

from .errors import ConsistencyError, ResourceLimitError
from .graphs import GridSpec, column_series, witten_transfer
from .patterns import (
    Pattern,
    PatternClass,
    block_count,
    canonicalize,
    delete_top,
    delete_top_neighborhood,
    initial_patterns,
    is_reducible,
    leftmost_block_middle,
    peel,
    z_pattern,
    z_pattern_series,
)
from .polynomials import (
    IntPoly,
    ONE,
    RationalGF,
    T,
    factor_cyclotomic,
    fit_recurrence,
    series_expand,
)

_PATTERN_GF: Dict[PatternClass, RationalGF] = {}


def _validate_pattern_gf(cls: PatternClass, gf: RationalGF) -> RationalGF:
    """Check the claimed series against direct transfer evaluation."""
    upto = gf.num.degree + gf.den.degree + 6
    claimed = series_expand(gf, upto)
    direct = z_pattern_series(cls.canonical, upto)
    if claimed != direct:
        raise ConsistencyError(
            f"series for pattern {cls.canonical} disagrees with transfer "
            f"evaluation: {claimed} vs {direct}"
        )
    return gf


def pattern_gf(p: Union[Pattern, PatternClass]) -> RationalGF:
    """The series sum_{m>=2} z(P;m) t^m as an exact rational function.

    Proper patterns only; the computation walks the successor chain,
    solves its terminal cycle, and back-substitutes (see module docstring).
    """
    cls = canonicalize(p) if isinstance(p, Pattern) else p
    if cls in _PATTERN_GF:
        return _PATTERN_GF[cls]

    # Walk successors until we hit a known class or close a cycle.
    # step = (class, side series, sign, shift): F = side + sign * t^shift * F_next
    path: List[Tuple[PatternClass, RationalGF, int, int]] = []
    position: Dict[PatternClass, int] = {}
    cur = cls
    while cur not in position and cur not in _PATTERN_GF:
        position[cur] = len(path)
        q = cur.canonical
        if is_reducible(q):
            peeled, sign = peel(q)
            side = RationalGF(IntPoly((0, 0, z_pattern(q, 2))))
            path.append((cur, side, sign, 1))
            cur = canonicalize(peeled)
        else:
            mid = leftmost_block_middle(q)
            side = pattern_gf(canonicalize(delete_top(q, mid)))
            path.append((cur, side, -1, 0))
            cur = canonicalize(delete_top_neighborhood(q, mid))

    if cur in _PATTERN_GF:
        series = _PATTERN_GF[cur]
    else:
        # Solve the cycle F_c = A + sigma * t^a * F_c.
        start = position[cur]
        accumulated = RationalGF(0)
        sigma, a = 1, 0
        for _, side, sign, shift in path[start:]:
            accumulated = accumulated + RationalGF(T ** a) * sigma * side
            sigma *= sign
            a += shift
        if a == 0:
            raise ConsistencyError(
                f"successor cycle of {cur.canonical} contains no peel step"
            )
        series = accumulated / RationalGF(ONE - T ** a * sigma)

    for cls_j, side, sign, shift in reversed(path):
        series = side + RationalGF(T ** shift) * sign * series
        _PATTERN_GF[cls_j] = _validate_pattern_gf(cls_j, series)
    return _PATTERN_GF[cls]


def fitted_cylinder_gf(n: int, max_terms: int = 320) -> RationalGF:
    """Rational form fitted from the raw column series (any circumference)."""
    terms = 48
    while True:
        try:
            return fit_recurrence(column_series(n, terms))
        except Exception:
            if terms >= max_terms:
                raise
            terms = min(2 * terms, max_terms)


def cylinder_gf(n: int, bound: int = 12, cross_check: bool = True) -> RationalGF:
    """Exact series sum_{m>=0} Z(P_m x C_n) t^m for even circumference n.

    Assembled from the signed initial decomposition over pattern classes;
    with cross_check the result must reproduce a recurrence fitted to the
    raw column series, else ConsistencyError.
    """
    if n < 2 or n % 2:
        raise ValueError("pattern assembly needs even n >= 2; "
                         "odd circumferences go through fitted_cylinder_gf")
    if n > bound:
        raise ResourceLimitError(f"circumference {n} exceeds the bound {bound}")
    ring = witten_transfer(GridSpec("cylinder", 1, n))
    total = RationalGF(IntPoly((1, ring)))
    for cls, coeff in initial_patterns(n).terms:
        total = total + pattern_gf(cls) * coeff
    if cross_check:
        window = 2 * total.den.degree + 6
        fitted = fit_recurrence(column_series(n, window))
        if fitted != total:
            raise ConsistencyError(
                f"pattern assembly and fitted recurrence disagree at n={n}: "
                f"{total} vs {fitted}"
            )
    return total


def check_roots_of_unity(gf: RationalGF) -> bool:
    """True when every denominator root is a root of unity."""
    factors, remainder = factor_cyclotomic(gf.den)
    return remainder.degree == 0 and abs(remainder.coefficient(0)) == 1


def conjectured_denominator(n: int) -> IntPoly:
    """The proposed universal denominator for even circumference n.

    For n = 4k+2 it is (1 + t^2) times (1 - t^e) over e = 8k-2, 8k-8, ...
    down to 2k+4; for n = 4k it is (1 - t^2) times (1 - t^e) over
    e = 8k-6, 8k-12, ... down to 2k+6.
    """
    if n < 2 or n % 2:
        raise ValueError("even n >= 2 required")
    k, rem = divmod(n, 4)
    if rem == 2:
        out = ONE + T ** 2
        top, stop = 8 * k - 2, 2 * k + 4
    else:
        out = ONE - T ** 2
        top, stop = 8 * k - 6, 2 * k + 6
    for e in range(top, stop - 1, -6):
        out = out * (ONE - T ** e)
    return out


def check_denominator_form(n: int, gf: Optional[RationalGF] = None,
                           bound: int = 12) -> bool:
    """Does the conjectured denominator clear all poles of the series?"""
    if gf is None:
        gf = cylinder_gf(n, bound=bound)
    return gf.den.divides(conjectured_denominator(n))


@dataclass(frozen=True)
class PeriodicityReport:
    """Denominator structure of a cylinder series.

    factors maps cyclotomic order to multiplicity; period is the least L
    with denominator dividing 1 - t^L (None unless the denominator is a
    squarefree product of cyclotomics), making the coefficient tail
    L-periodic.
    """

    n: int
    factors: Dict[int, int]
    remainder_ok: bool
    max_multiplicity: int
    period: Optional[int]


def periodicity_report(n: int, gf: Optional[RationalGF] = None,
                       bound: int = 12) -> PeriodicityReport:
    if gf is None:
        gf = cylinder_gf(n, bound=bound)
    factors, remainder = factor_cyclotomic(gf.den)
    remainder_ok = remainder.degree == 0 and abs(remainder.coefficient(0)) == 1
    max_mult = max(factors.values(), default=0)
    period = None
    if remainder_ok and max_mult <= 1:
        period = lcm(*factors.keys()) if factors else 1
        if not gf.den.divides(ONE - T ** period):
            raise ConsistencyError(
                f"squarefree cyclotomic denominator does not divide "
                f"1 - t^{period} at n={n}"
            )
    return PeriodicityReport(n, dict(factors), remainder_ok, max_mult, period)


def denominator_bound(n: int, blocks: int) -> IntPoly:
    """Denominator guaranteed by the successor-cycle structure.

    A class with the given block count peels around cycles whose solved
    denominators are (1 - (-1)^{n/2} t^2) at block count zero and
    (1 - t^{2g}) at each level, g the cycle-length lcm of the matching
    stone arrangements; the product bounds every pole.
    """
    from .necklaces import cycle_length_lcm

    sign = -1 if (n // 2) % 2 else 1
    out = ONE - T ** 2 * sign
    for k in range(1, blocks + 1):
        out = out * (ONE - T ** (2 * cycle_length_lcm(k, n)))
    return out


def check_block_count_denominator(p: Union[Pattern, PatternClass]) -> bool:
    """Does the structural denominator bound cover this pattern's poles?"""
    cls = canonicalize(p) if isinstance(p, Pattern) else p
    gf = pattern_gf(cls)
    return gf.den.divides(denominator_bound(cls.n, block_count(cls.canonical)))
