"""Digit expansions of gamma and the exact normalized-minimum evaluator.

A target gamma is encoded by its digit sequence b_i relative to the period-two
quotients (a at odd indices, b at even indices), stored here in the centered
form t_i = 2*b_i - (a_i - 2).  Named blocks (A_t, B_t, ..., F'_t and the three
long blocks G, H, H' used at (a,b) = (3,5)) are templates of one or more
digits.

For an eventually periodic sequence the machinery below produces, all exactly:

* gamma itself (geometric series in D),
* the forward/backward tail sums d_i^+ and d_i^-,
* the four products s_1*(i) ... s_4*(i) built from the tails,
* the normalized approximation constant as the minimum of the applicable
  products over one period (the lim inf of a periodic sequence), with the
  special evaluation mode for sequences whose period contains a maximal
  digit t_i = a_i.

Everything here treats the period as extended bi-infinitely; a preperiod can
be attached for gamma reconstruction but never influences the minimum.

No admissibility check is performed: whether a given digit word really is
the expansion of the gamma it reconstructs is taken on trust.  The
catalogued periods are admissible by construction; an arbitrary word (for
instance a rotated phase of a catalogued one) can reconstruct a gamma whose
true expansion, and hence true constant, differs from the word's minimum.
The brute-force oracle exposes such cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .ncf import PeriodTwoAlpha
from .quadfield import QuadNum

__all__ = [
    "Block",
    "TSequence",
    "InvalidBlockError",
    "DigitRangeError",
    "AlignmentError",
    "UndefinedTailError",
    "block_digits",
    "block_tvalues",
    "tseq_from_blocks",
    "parse_period",
    "gamma_value",
    "d_plus",
    "d_minus",
    "s_star",
    "reflect",
    "m_star",
    "m_value",
    "max_digit_bound",
    "repeated_t_bound",
]


class InvalidBlockError(ValueError):
    """Block digit is not an integer for this (a, b) (parity mismatch)."""


class DigitRangeError(ValueError):
    """Digit falls outside [0, a_i - 1]."""


class AlignmentError(ValueError):
    """Block string or preperiod breaks the odd/even pairing."""


class UndefinedTailError(ValueError):
    """Backward tail requested at an index that is not two-sidedly periodic."""


@dataclass(frozen=True)
class Block:
    """A named digit template; t parametrizes the even-position digit."""

    name: str
    t: int | None = None

    def __str__(self) -> str:
        if self.t is None:
            return self.name
        if self.name.endswith("'"):
            return f"{self.name[:-1]}{self.t}'"
        return f"{self.name}{self.t}"


# template rows: (parity, numerator expression) with parity "a" (odd index)
# or "b" (even index); digit = numer/2 except where marked whole.
def _template(block: Block, a: int, b: int) -> list[tuple[str, Fraction]]:
    t = block.t
    name = block.name
    if name in ("A", "B", "C", "E"):
        off = {"A": 0, "B": 1, "C": 2, "E": 3}[name]
        return [("a", Fraction(a - 2 - off, 2)), ("b", Fraction(b - 2 + t, 2))]
    if name in ("A'", "B'", "C'", "E'"):
        off = {"A'": 0, "B'": 1, "C'": 2, "E'": 3}[name]
        return [("a", Fraction(a - 2 + off, 2)), ("b", Fraction(b - 2 - t, 2))]
    if name == "F":
        return [("a", Fraction(a - 1)), ("b", Fraction(b - 2 - t, 2))]
    if name == "F'":
        return [("a", Fraction(a - 1)), ("b", Fraction(b - 2 + (t - 4), 2))]
    if name == "G":
        return [
            ("b", Fraction(b - 3, 2)),
            ("a", Fraction(a - 1)),
            ("b", Fraction(b - 3, 2)),
        ]
    if name == "H":
        half = [("a", Fraction(a - 1, 2)), ("b", Fraction(b - 5, 2))]
        return half + [("a", Fraction(a - 1))] + half[::-1]
    if name == "H'":
        half = [("a", Fraction(a - 3, 2)), ("b", Fraction(b - 1, 2))]
        return half + [("a", Fraction(a - 1))] + half[::-1]
    raise InvalidBlockError(f"unknown block {name!r}")


def block_digits(block: Block, alpha: PeriodTwoAlpha) -> list[tuple[str, int]]:
    """Digits of the block as (parity, b_i) pairs, validated for (a, b)."""
    a, b = alpha.a, alpha.b
    if block.name in ("A", "B", "C", "E", "A'", "B'", "C'", "E'", "F", "F'"):
        if block.t is None:
            raise InvalidBlockError(f"block {block.name} needs a t parameter")
    out = []
    for parity, digit in _template(block, a, b):
        if digit.denominator != 1:
            raise InvalidBlockError(
                f"{block} has non-integer digit {digit} at (a,b)=({a},{b})"
            )
        d = int(digit)
        quot = a if parity == "a" else b
        if not 0 <= d <= quot - 1:
            raise DigitRangeError(
                f"{block} digit {d} outside [0, {quot - 1}] at (a,b)=({a},{b})"
            )
        out.append((parity, d))
    return out


def block_tvalues(block: Block, alpha: PeriodTwoAlpha) -> list[tuple[str, int]]:
    """Digits of the block in centered t form, as (parity, t_i) pairs."""
    out = []
    for parity, d in block_digits(block, alpha):
        quot = alpha.a if parity == "a" else alpha.b
        out.append((parity, 2 * d - (quot - 2)))
    return out


@dataclass(frozen=True)
class TSequence:
    """Eventually periodic centered digits; index 1 is an odd (a) position.

    The period has even length.  A preperiod, when present, also has even
    length so the pairing is preserved; it matters only to gamma itself.
    """

    period: tuple[int, ...]
    preperiod: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.period) == 0 or len(self.period) % 2 != 0:
            raise AlignmentError("period length must be even and nonzero")
        if len(self.preperiod) % 2 != 0:
            raise AlignmentError("preperiod length must be even")

    def t_at(self, i: int) -> int:
        """t at global index i >= 1; the period extends bi-infinitely."""
        n = len(self.preperiod)
        if 1 <= i <= n:
            return self.preperiod[i - 1]
        return self.period[(i - n - 1) % len(self.period)]

    def period_t(self, i: int) -> int:
        """t at index i of the bi-infinite periodic part (any integer i)."""
        return self.period[(i - 1) % len(self.period)]

    def validate(self, alpha: PeriodTwoAlpha) -> "TSequence":
        for idx, t in enumerate(self.preperiod + self.period, start=1):
            quot = alpha.partial_quotient(idx)
            if (t - quot) % 2 != 0:
                raise InvalidBlockError(
                    f"t_{idx}={t} has wrong parity for quotient {quot}"
                )
            if not -(quot - 2) <= t <= quot:
                raise DigitRangeError(
                    f"t_{idx}={t} outside [-(q-2), q] for quotient {quot}"
                )
        return self

    def rotated(self, pairs: int) -> "TSequence":
        """Cyclic rotation of the period by whole (odd, even) pairs."""
        L = len(self.period)
        s = (2 * pairs) % L
        return TSequence(self.period[s:] + self.period[:s], self.preperiod)

    def digits(self, alpha: PeriodTwoAlpha) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(preperiod, period) as plain digits b_i = (a_i - 2 + t_i)/2."""
        def conv(ts: tuple[int, ...], offset: int) -> tuple[int, ...]:
            return tuple(
                (alpha.partial_quotient(offset + j + 1) - 2 + t) // 2
                for j, t in enumerate(ts)
            )

        return conv(self.preperiod, 0), conv(self.period, len(self.preperiod))

    def __str__(self) -> str:
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"t:[{pre}|({per})*]" if pre else f"t:({per})"


def tseq_from_blocks(
    blocks: Iterable[Block],
    alpha: PeriodTwoAlpha,
    start: str = "odd",
) -> TSequence:
    """Concatenate blocks into a periodic TSequence.

    Each block must land on the parity its template starts with (G starts on
    an even position, everything else on odd).  `start` gives the parity of
    the first position; an even-start word is rotated into the canonical
    odd-start form, which leaves the bi-infinite sequence unchanged.
    """
    if start not in ("odd", "even"):
        raise ValueError("start must be 'odd' or 'even'")
    parity = "a" if start == "odd" else "b"
    ts: list[int] = []
    for blk in blocks:
        vals = block_tvalues(blk, alpha)
        if vals[0][0] != parity:
            raise AlignmentError(
                f"block {blk} starts on parity {vals[0][0]!r}, cursor is at {parity!r}"
            )
        for par, t in vals:
            if par != parity:
                raise AlignmentError(f"parity drift inside block {blk}")
            ts.append(t)
            parity = "b" if parity == "a" else "a"
    if len(ts) % 2 != 0:
        raise AlignmentError("blocks give an odd total period length")
    if start == "even":
        ts = ts[1:] + ts[:1]
    return TSequence(tuple(ts)).validate(alpha)


def parse_period(text: str, alpha: PeriodTwoAlpha, start: str = "odd") -> TSequence:
    """Parse 'A1 A1' C3' block notation or a raw 't:(2,-3)' tuple."""
    text = text.strip()
    if text.startswith("t:"):
        body = text[2:].strip().strip("()")
        ts = tuple(int(v) for v in body.split(",") if v.strip())
        seq = TSequence(ts)
        if start == "even":
            seq = TSequence(seq.period[1:] + seq.period[:1])
        return seq.validate(alpha)
    blocks = []
    for tok in text.split():
        name = tok
        prime = ""
        if name.endswith("'"):
            name, prime = name[:-1], "'"
        head = name.rstrip("-0123456789")
        tail = name[len(head):]
        blocks.append(Block(head + prime, int(tail) if tail else None))
    return tseq_from_blocks(blocks, alpha, start=start)


# ----------------------------------------------------------------------
# exact series machinery
# ----------------------------------------------------------------------


def gamma_value(tseq: TSequence, alpha: PeriodTwoAlpha) -> QuadNum:
    """gamma = sum_i (b_{2i-1} eta + b_{2i} D) D^(i-1), summed exactly."""
    tseq.validate(alpha)
    pre, per = tseq.digits(alpha)
    eta, D = alpha.eta, alpha.D
    total = QuadNum(0, 0, alpha.N)
    w = QuadNum(1, 0, alpha.N)
    for j in range(0, len(pre), 2):
        total = total + (pre[j] * eta + pre[j + 1] * D) * w
        w = w * D
    head = QuadNum(0, 0, alpha.N)
    u = QuadNum(1, 0, alpha.N)
    for j in range(0, len(per), 2):
        head = head + (per[j] * eta + per[j + 1] * D) * u
        u = u * D
    # u is now D^(period pairs); w is D^(preperiod pairs)
    return total + w * head / (1 - u)


def _tails(tseq: TSequence, i: int, alpha: PeriodTwoAlpha) -> tuple[QuadNum, QuadNum]:
    """(d_i^-, d_i^+) at index i of the bi-infinite periodic part."""
    D = alpha.D
    L = len(tseq.period)
    half = L // 2
    denom = 1 - D**half
    a_i = alpha.alpha_at(i)
    a_prev = alpha.alpha_at(i - 1)
    plus = QuadNum(0, 0, alpha.N)
    minus = QuadNum(0, 0, alpha.N)
    w = QuadNum(1, 0, alpha.N)
    for j in range(half):
        plus = plus + (tseq.period_t(i + 2 * j + 1) * a_i + tseq.period_t(i + 2 * j + 2) * D) * w
        minus = minus + (tseq.period_t(i - 2 * j) * a_prev + tseq.period_t(i - 2 * j - 1) * D) * w
        w = w * D
    return minus / denom, plus / denom


def d_plus(tseq: TSequence, i: int, alpha: PeriodTwoAlpha) -> QuadNum:
    """Forward tail sum d_i^+.

    Indices inside the preperiod are allowed: the tail simply runs through
    the remaining preperiod into the periodic part.  Indices beyond the
    preperiod address the bi-infinite periodic extension.
    """
    tseq.validate(alpha)
    n = len(tseq.preperiod)
    if i > n:
        return _tails(tseq, i - n, alpha)[1]
    if i < 1:
        raise UndefinedTailError("preperiod indices start at 1")
    # d_i^+ = alpha_i (t_{i+1} + d_{i+1}^+), walked back from the period
    d = _tails(tseq, 1, alpha)[1]
    for j in range(n, i - 1, -1):
        d = alpha.alpha_at(j) * (tseq.t_at(j + 1) + d)
    return d


def d_minus(tseq: TSequence, i: int, alpha: PeriodTwoAlpha) -> QuadNum:
    """Backward tail sum d_i^-; only defined inside the periodic part."""
    tseq.validate(alpha)
    n = len(tseq.preperiod)
    if i <= n:
        raise UndefinedTailError(
            f"d^- is undefined at preperiod index {i}; the sequence is not "
            "two-sidedly determined there"
        )
    return _tails(tseq, i - n, alpha)[0]


def s_star(
    tseq: TSequence, i: int, alpha: PeriodTwoAlpha
) -> tuple[QuadNum, QuadNum, QuadNum, QuadNum]:
    """(s1*, s2*, s3*, s4*) at index i of the bi-infinite periodic part."""
    tseq.validate(alpha)
    dm, dp = _tails(TSequence(tseq.period), i, alpha)
    return _s_products(alpha, i, dm, dp)


def _s_products(alpha, i, dm, dp):
    ai = alpha.alpha_at(i)
    ap = alpha.alpha_at(i - 1)
    return (
        (1 - ai + dp) * (1 - ap + dm),
        (1 + ai - dp) * (1 + ap + dm),
        (1 - ai - dp) * (1 - ap - dm),
        (1 + ai + dp) * (1 + ap - dm),
    )


def _has_max_digit(period: Sequence[int], alpha: PeriodTwoAlpha) -> bool:
    return any(
        t == alpha.partial_quotient(i + 1) for i, t in enumerate(period)
    )


def reflect(tseq: TSequence, alpha: PeriodTwoAlpha) -> TSequence:
    """Digit sequence of 1 - alpha - gamma.

    Away from maximal digits this is plain negation of the t_i.  A maximal
    digit t_i = a_i stays maximal, and each neighbour adjacent to a maximal
    position picks up an extra -2 (the carry produced by reflecting the
    maximal digit).  Raises DigitRangeError if the carry pushes a digit out
    of range; that cannot happen for the catalogue sequences.
    """
    tseq.validate(alpha)

    def refl(ts: tuple[int, ...], offset: int, cyclic: bool) -> tuple[int, ...]:
        n = len(ts)

        def is_max(j: int) -> bool:  # j: 0-based within ts
            if cyclic:
                j %= n
            elif not 0 <= j < n:
                # linear boundary: look across into the period on the right,
                # treat the unknown far left as non-maximal
                if j == n:
                    per = tseq.period
                    return per[0] == alpha.partial_quotient(offset + n + 1)
                return False
            q = alpha.partial_quotient(offset + j + 1)
            return ts[j] == q

        out = []
        for j, t in enumerate(ts):
            if is_max(j):
                out.append(t)
            else:
                carry = 2 * (is_max(j - 1) + is_max(j + 1))
                out.append(-t - carry)
        return tuple(out)

    n = len(tseq.preperiod)
    return TSequence(
        refl(tseq.period, n, cyclic=True),
        refl(tseq.preperiod, 0, cyclic=False),
    ).validate(alpha)


def m_star(tseq: TSequence, alpha: PeriodTwoAlpha) -> QuadNum:
    """Exact normalized approximation constant of the periodic sequence.

    Without maximal digits the lim inf reduces to the minimum of all four
    products over one period of the sequence itself (negating every t maps
    s1 <-> s3 and s2 <-> s4, so the reflection adds nothing).  With maximal
    digits in the period only s1*, s2*, s4* participate, for the sequence
    and for its reflection.
    """
    tseq.validate(alpha)
    period = TSequence(tseq.period)
    candidates: list[QuadNum] = []
    if _has_max_digit(period.period, alpha):
        variants = (period, reflect(period, alpha))
        picks = (0, 1, 3)
    else:
        variants = (period,)
        picks = (0, 1, 2, 3)
    for seq in variants:
        for i in range(1, len(seq.period) + 1):
            dm, dp = _tails(seq, i, alpha)
            s = _s_products(alpha, i, dm, dp)
            candidates.extend(s[j] for j in picks)
    best = candidates[0]
    for c in candidates[1:]:
        if c < best:
            best = c
    return best


def m_value(mstar: QuadNum, alpha: PeriodTwoAlpha) -> QuadNum:
    """Plain approximation constant M = M* / (4(1 - D))."""
    return mstar / alpha.norm_factor


def max_digit_bound(alpha: PeriodTwoAlpha, j: int) -> QuadNum:
    """Upper bound alpha_{j-1} when t_k = a_k occurs infinitely often, k = j mod 2."""
    return alpha.alpha_at(j - 1)


def repeated_t_bound(alpha: PeriodTwoAlpha, j: int, t: int) -> QuadNum:
    """Upper bound (a_j - t) alpha_{j-1} when |t_k| >= t infinitely often, k = j mod 2.

    Equals 1 - t*alpha_{j-1} + D exactly.
    """
    quot = alpha.partial_quotient(j)
    if not 0 <= t <= quot:
        raise ValueError(f"need 0 <= t <= {quot}, got {t}")
    return (quot - t) * alpha.alpha_at(j - 1)
