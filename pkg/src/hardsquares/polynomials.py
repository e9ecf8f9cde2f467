"""Exact integer polynomials, rational generating functions, and recurrence fits.

Everything here is exact: integer coefficients, Fraction elimination, no
floating point.  IntPoly stores ascending coefficients with no trailing
zeros.  RationalGF keeps a canonical reduced form (polynomial gcd divided
out, integer content 1, positive leading denominator coefficient) so that
structural equality compares mathematical equality.  fit_recurrence
reconstructs the minimal linear recurrence behind an integer sequence and
refuses to answer when the sequence is too short to certify it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import FitInconclusiveError


class IntPoly:
    """Integer polynomial; coeffs[i] is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        c = self.content
        if c in (0, 1):
            return self
        return IntPoly(x // c for x in self.coeffs)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "PolyLike") -> "IntPoly":
        other = as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: "PolyLike") -> "IntPoly":
        other = as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: "PolyLike") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        other = as_poly(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divrem(self, div: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        """Division over the rationals; raises if the result is not integral."""
        if div.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        qlen = len(self.coeffs) - len(div.coeffs) + 1
        if qlen <= 0:
            return IntPoly(), self
        quo = [Fraction(0)] * qlen
        lead = Fraction(div.leading)
        for k in range(qlen - 1, -1, -1):
            q = rem[k + div.degree] / lead
            quo[k] = q
            if q:
                for i, b in enumerate(div.coeffs):
                    rem[i + k] -= q * b
        for f in quo + rem:
            if f.denominator != 1:
                raise ValueError("non-integral polynomial division result")
        return IntPoly(int(f) for f in quo), IntPoly(int(f) for f in rem)

    def exact_div(self, div: "IntPoly") -> "IntPoly":
        q, r = self.divrem(div)
        if not r.is_zero:
            raise ValueError("polynomial division left a remainder")
        return q

    def divides(self, other: "IntPoly") -> bool:
        try:
            _, r = other.divrem(self)
        except ValueError:
            return False
        return r.is_zero

    # -- comparison / rendering ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)


PolyLike = Union[IntPoly, int]


def as_poly(p: PolyLike) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly([p])
    raise TypeError(f"cannot interpret {p!r} as a polynomial")


ZERO = IntPoly()
ONE = IntPoly([1])
T = IntPoly([0, 1])


def format_poly(p: IntPoly, var: str = "t") -> str:
    """Render with descending powers, e.g. ``-t^4 - 2t^3 - 2t - 1``."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coefficient(i)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.is_zero and b.is_zero:
        return ZERO
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero:
        a, b = b, _pseudo_rem(a, b).primitive_part()
    if a.leading < 0:
        a = -a
    return a


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    d = a.degree - b.degree
    if d < 0:
        return a
    lead = b.leading
    rem = list(a.coeffs)
    for k in range(d, -1, -1):
        top = rem[b.degree + k]
        rem = [lead * c for c in rem]
        for i, bc in enumerate(b.coeffs):
            rem[i + k] -= top * bc
    return IntPoly(rem)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of t^d - 1."""
    if d < 1:
        raise ValueError("cyclotomic order must be positive")
    p = IntPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


def factor_cyclotomic(p: IntPoly) -> Tuple[Dict[int, int], IntPoly]:
    """Split off all cyclotomic factors Φ_d with φ(d) ≤ deg(p).

    Returns (factors, remainder) with factors a {d: multiplicity} map and
    Π Φ_d^mult · remainder = p.  The remainder keeps p's non-cyclotomic part
    (±1 when p is a pure product of cyclotomics).
    """
    if p.is_zero:
        return {}, p
    factors: Dict[int, int] = {}
    rem = p
    d = 1
    # φ(d) ≥ sqrt(d/2), so orders beyond 2(deg+1)^2 cannot divide
    limit = 2 * (p.degree + 1) ** 2
    while d <= limit and rem.degree > 0:
        phi = cyclotomic(d)
        if phi.degree <= rem.degree:
            while phi.divides(rem):
                rem = rem.exact_div(phi)
                factors[d] = factors.get(d, 0) + 1
                if rem.degree < phi.degree:
                    break
        d += 1
    return factors, rem


def format_cyclotomic(factors: Dict[int, int], remainder: IntPoly) -> str:
    """Render a factorization in the Phi_d^mult style, e.g. ``Phi_1 * Phi_2^2``."""
    parts = []
    if remainder != ONE:
        parts.append(f"({format_poly(remainder)})" if remainder.degree > 0 else format_poly(remainder))
    for d in sorted(factors):
        mult = factors[d]
        parts.append(f"Phi_{d}" + (f"^{mult}" if mult > 1 else ""))
    return " * ".join(parts) if parts else "1"


class RationalGF:
    """Quotient of integer polynomials in canonical reduced form.

    Canonical form: the polynomial gcd is divided out, the integer content of
    numerator and denominator together is 1, and the denominator's leading
    coefficient is positive.  Equality is structural on that form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike = 1):
        num = as_poly(num)
        den = as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = gcd(num.content, den.content)
            if c > 1:
                num = IntPoly(x // c for x in num.coeffs)
                den = IntPoly(x // c for x in den.coeffs)
        if den.leading < 0:
            num, den = -num, -den
        if den.coefficient(0) == 0:
            raise ValueError("denominator vanishes at t = 0; no power series exists")
        self.num = num
        self.den = den

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: "GFLike") -> "RationalGF":
        other = as_gf(other)
        return RationalGF(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other: "GFLike") -> "RationalGF":
        other = as_gf(other)
        return RationalGF(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __mul__(self, other: "GFLike") -> "RationalGF":
        other = as_gf(other)
        return RationalGF(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "GFLike") -> "RationalGF":
        other = as_gf(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalGF(self.num * other.den, self.den * other.num)

    __radd__ = __add__
    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalGF)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalGF({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


GFLike = Union[RationalGF, IntPoly, int]


def as_gf(x: GFLike) -> RationalGF:
    if isinstance(x, RationalGF):
        return x
    return RationalGF(as_poly(x))


def series_expand(gf: RationalGF, upto: int) -> List[int]:
    """Power-series coefficients [t^0] .. [t^upto]; requires den(0) != 0.

    Raises if any coefficient fails to be an integer.
    """
    den0 = gf.den.coefficient(0)
    if den0 == 0:
        raise ValueError("denominator vanishes at 0; no power series")
    out: List[int] = []
    vals: List[Fraction] = []
    for m in range(upto + 1):
        acc = Fraction(gf.num.coefficient(m))
        for j in range(1, min(m, gf.den.degree) + 1):
            acc -= gf.den.coefficient(j) * vals[m - j]
        val = acc / den0
        if val.denominator != 1:
            raise ValueError(f"series coefficient at t^{m} is not an integer")
        vals.append(val)
        out.append(int(val))
    return out


def fit_recurrence(seq: Sequence[int]) -> RationalGF:
    """Reconstruct the rational generating function behind an integer sequence.

    Finds the minimal linear recurrence (Berlekamp-Massey over exact
    rationals); the sequence must be long enough to certify it, at least
    2·order + 4 terms, otherwise FitInconclusiveError is raised.  The result
    reproduces every supplied term.
    """
    seq = list(seq)
    if not seq:
        raise FitInconclusiveError("empty sequence")
    values = [Fraction(x) for x in seq]
    conn: List[Fraction] = [Fraction(1)]
    prev: List[Fraction] = [Fraction(1)]
    order = 0
    gap = 1
    prev_disc = Fraction(1)
    for i, s in enumerate(values):
        disc = s
        for j in range(1, order + 1):
            disc += conn[j] * values[i - j]
        if disc == 0:
            gap += 1
            continue
        scale = disc / prev_disc
        update = conn[:]
        need = len(prev) + gap
        if need > len(update):
            update.extend([Fraction(0)] * (need - len(update)))
        for j, c in enumerate(prev):
            update[j + gap] -= scale * c
        if 2 * order <= i:
            conn, prev = update, conn
            order, prev_disc, gap = i + 1 - order, disc, 1
        else:
            conn, gap = update, gap + 1
    if len(seq) < 2 * order + 4:
        raise FitInconclusiveError(
            f"recurrence of order {order} needs at least {2 * order + 4} terms, got {len(seq)}"
        )
    denom_lcm = 1
    for c in conn:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    den = IntPoly(int(c * denom_lcm) for c in conn)
    num = IntPoly(
        sum(den.coefficient(j) * seq[i - j] for j in range(0, min(i, den.degree) + 1))
        for i in range(order if order > 0 else 1)
    )
    result = RationalGF(num, den)
    if series_expand(result, len(seq) - 1) != seq:
        raise FitInconclusiveError("fitted recurrence fails to reproduce the input")
    return result
