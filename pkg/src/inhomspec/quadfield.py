"""Exact arithmetic in a real quadratic field Q(sqrt(N)).

A :class:`QuadNum` is the real number p + q*sqrt(N) with p, q rational
(arbitrary-precision, via :class:`fractions.Fraction`) and N a fixed positive
non-square integer.  All comparisons, floors and printed digits are derived
from integer arithmetic only; hardware floats never enter any decision.

N is *not* required to be squarefree.  Values living in different fields may
only be mixed when one of them is rational (q == 0); anything else raises
:class:`ContextMismatchError`.  :meth:`QuadNum.reduced` pulls the square part
out of N when a canonical squarefree representative is wanted.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "QuadNum",
    "FieldError",
    "InvalidFieldError",
    "ContextMismatchError",
    "qnum",
]

RationalLike = Union[int, Fraction]


class FieldError(ValueError):
    """Base class for quadratic-field usage errors."""


class InvalidFieldError(FieldError):
    """N is not a positive non-square integer."""


class ContextMismatchError(FieldError):
    """Mixing two genuinely irrational values from different fields."""


def _check_field(N: int) -> int:
    if not isinstance(N, int) or isinstance(N, bool):
        raise InvalidFieldError(f"field constant must be an int, got {N!r}")
    if N <= 0:
        raise InvalidFieldError(f"field constant must be positive, got {N}")
    r = math.isqrt(N)
    if r * r == N:
        raise InvalidFieldError(f"field constant must not be a perfect square, got {N}")
    return N


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QuadNum:
    """Immutable exact element p + q*sqrt(N) of Q(sqrt(N))."""

    __slots__ = ("p", "q", "N")

    p: Fraction
    q: Fraction
    N: int

    def __init__(self, p: RationalLike, q: RationalLike = 0, N: int = 2):
        object.__setattr__(self, "p", _frac(p))
        object.__setattr__(self, "q", _frac(q))
        object.__setattr__(self, "N", _check_field(N))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("QuadNum is immutable")

    # ------------------------------------------------------------------
    # context handling
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "QuadNum":
        """Bring `other` into this value's field, or raise."""
        if isinstance(other, QuadNum):
            if other.N == self.N or other.q == 0:
                return QuadNum(other.p, other.q, self.N)
            if self.q == 0:
                return other
            raise ContextMismatchError(
                f"cannot mix sqrt({self.N}) and sqrt({other.N}) values"
            )
        return QuadNum(_frac(other), 0, self.N)

    def is_rational(self) -> bool:
        return self.q == 0

    # ------------------------------------------------------------------
    # ring / field operations
    # ------------------------------------------------------------------

    def __add__(self, other) -> "QuadNum":
        o = self._coerce(other)
        if o.N != self.N:  # self rational, other irrational
            return o + self.p
        return QuadNum(self.p + o.p, self.q + o.q, o.N)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.p, -self.q, self.N)

    def __sub__(self, other) -> "QuadNum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadNum":
        return (-self) + self._coerce(other)

    def __mul__(self, other) -> "QuadNum":
        o = self._coerce(other)
        if o.N != self.N:
            return o * self.p
        return QuadNum(
            self.p * o.p + self.q * o.q * self.N,
            self.p * o.q + self.q * o.p,
            o.N,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of exact zero")
        # (p + q*sqrt(N))^-1 = (p - q*sqrt(N)) / (p^2 - q^2 N)
        return QuadNum(self.p / n, -self.q / n, self.N)

    def __truediv__(self, other) -> "QuadNum":
        o = self._coerce(other)
        if o.N != self.N:  # self is rational; lift it into the divisor's field
            return QuadNum(self.p, 0, o.N) * o.inverse()
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadNum":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "QuadNum":
        if not isinstance(k, int):
            raise TypeError("exponent must be an int")
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadNum(1, 0, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.p, -self.q, self.N)

    def norm(self) -> Fraction:
        """Field norm p^2 - q^2 N (zero iff the value is zero)."""
        return self.p * self.p - self.q * self.q * self.N

    # ------------------------------------------------------------------
    # exact ordering
    # ------------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, by rational comparisons only."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare |p| with |q|*sqrt(N) via squares
        lhs = p * p
        rhs = q * q * self.N
        if lhs == rhs:  # impossible for non-square N, kept for safety
            return 0
        big_is_p = lhs > rhs
        return (1 if big_is_p else -1) if p > 0 else (-1 if big_is_p else 1)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if not isinstance(other, QuadNum):
            return NotImplemented
        if self.q == 0 and other.q == 0:
            return self.p == other.p
        return self.N == other.N and self.p == other.p and self.q == other.q

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.N))

    def __bool__(self) -> bool:
        return self.sign() != 0

    # ------------------------------------------------------------------
    # floor / ceil / decimal digits
    # ------------------------------------------------------------------

    def _estimate(self, extra_bits: int = 32) -> Fraction:
        """Rational estimate within 2^-extra_bits of the true value."""
        q = self.q
        if q == 0:
            return self.p
        bits = (
            abs(q.numerator).bit_length()
            + q.denominator.bit_length()
            + extra_bits
        )
        s = math.isqrt(self.N << (2 * bits))  # floor(sqrt(N) * 2^bits)
        return self.p + q * Fraction(s, 1 << bits)

    def floor(self) -> int:
        if self.q == 0:
            return self.p.numerator // self.p.denominator
        n = math.floor(self._estimate())
        # estimate is within 2^-32 of the value; still certify exactly
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    __floor__ = floor
    __ceil__ = ceil

    def decimal(self, digits: int) -> str:
        """Decimal string, correctly rounded to `digits` places.

        The printed value v satisfies |self - v| <= 10^-digits (half an ulp
        plus a possible exact tie rounded up); digits are certified because
        rounding goes through the exact floor, never through floats.
        """
        if digits < 1:
            raise ValueError("digits must be >= 1")
        scale = 10**digits
        v = (self * scale + Fraction(1, 2)).floor()
        sign = "-" if v < 0 else ""
        whole, frac = divmod(abs(v), scale)
        return f"{sign}{whole}.{frac:0{digits}d}"

    def __float__(self) -> float:
        return float(self._estimate(96))

    # ------------------------------------------------------------------
    # normalization / serialization
    # ------------------------------------------------------------------

    def reduced(self) -> "QuadNum":
        """Equal value with the square part of N absorbed into q.

        Uses trial division; intended for the modest N arising here, not as
        a general factorization service.
        """
        n = self.N
        s = 1
        d = 2
        while d * d <= n:
            while n % (d * d) == 0:
                n //= d * d
                s *= d
            d += 1
        if s == 1:
            return self
        return QuadNum(self.p, self.q * s, n)

    def same_value(self, other: "QuadNum") -> bool:
        """Equality as real numbers, across field contexts."""
        a, b = self.reduced(), other.reduced()
        if a.q == 0 and b.q == 0:
            return a.p == b.p
        return a.N == b.N and a.p == b.p and a.q == b.q

    def to_json(self, digits: int = 18) -> dict:
        return {
            "p": f"{self.p.numerator}/{self.p.denominator}",
            "q": f"{self.q.numerator}/{self.q.denominator}",
            "N": self.N,
            "approx": self.decimal(digits),
        }

    @staticmethod
    def from_json(obj: dict) -> "QuadNum":
        return QuadNum(Fraction(obj["p"]), Fraction(obj["q"]), obj["N"])

    def __repr__(self) -> str:
        return f"QuadNum({self.p!r}, {self.q!r}, {self.N})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        qs = f"{self.q}*sqrt({self.N})"
        if self.p == 0:
            return qs
        op = "+" if self.q > 0 else "-"
        mag = f"{abs(self.q)}*sqrt({self.N})"
        return f"{self.p} {op} {mag}"


def qnum(p: RationalLike, q: RationalLike, N: int) -> QuadNum:
    """Construct p + q*sqrt(N); N must be a positive non-square integer."""
    return QuadNum(p, q, N)
