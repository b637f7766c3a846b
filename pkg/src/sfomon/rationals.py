"""Exact rational arithmetic and extended-real helpers.

Everything downstream (polyhedra, signal laws, robustness values) is built
on arbitrary-precision rationals; no float ever enters a computation.
gmpy2's mpq is used when available because it is considerably faster than
fractions.Fraction; the two are interchangeable for our purposes.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Rational = Fraction

ZERO = Rational(0)
ONE = Rational(1)


class Infinity:
    """Signed infinity, comparable with rationals.

    Only two instances exist (POS_INF, NEG_INF); identity is equality.
    """

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __neg__(self) -> "Infinity":
        return NEG_INF if self.sign > 0 else POS_INF

    def __lt__(self, other) -> bool:
        if other is self:
            return False
        if isinstance(other, Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __le__(self, other) -> bool:
        return self is other or self < other

    def __gt__(self, other) -> bool:
        if other is self:
            return False
        if isinstance(other, Infinity):
            return self.sign > other.sign
        return self.sign > 0

    def __ge__(self, other) -> bool:
        return self is other or self > other

    def __eq__(self, other) -> bool:
        return self is other

    def __hash__(self) -> int:
        return hash(("inf", self.sign))

    def __repr__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"


POS_INF = Infinity(1)
NEG_INF = Infinity(-1)

# An extended real is Rational | Infinity; None stands for "undefined"
# wherever partiality is in play (signal access outside the trace domain).


def ext_neg(v):
    if v is None:
        return None
    return -v


def ext_max(a, b):
    return a if b < a else b


def ext_min(a, b):
    return a if a < b else b


def parse_rational(text: str) -> Rational:
    """Parse an integer, exact decimal, or p/q literal into a rational.

    Decimals are read exactly ("0.1" -> 1/10); binary floats never occur.
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        f = Fraction(int(num.strip()), int(den.strip()))
    else:
        f = Fraction(s)
    return Rational(f.numerator, f.denominator)


def format_rational(r) -> str:
    """Canonical text form: "p/q" when the denominator exceeds 1, else "p"."""
    if isinstance(r, Infinity):
        return repr(r)
    num, den = r.numerator, r.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def decimal_str(r, digits: int) -> str:
    """Decimal approximation with `digits` fractional digits, round half up."""
    if isinstance(r, Infinity):
        return repr(r)
    num, den = int(r.numerator), int(r.denominator)
    sign = "-" if num < 0 else ""
    num = abs(num)
    scale = 10**digits
    q, rem = divmod(num * scale, den)
    if 2 * rem >= den:
        q += 1
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
