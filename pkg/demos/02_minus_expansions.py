#!/usr/bin/env python3
"""Minus continued fractions: x = c - 1/(d1 - 1/(d2 - ...)).

All fractional digits are >= 2, and for a quadratic irrational the digit
string is eventually periodic; the period is detected by exact repetition
of the remainder, so it is provably minimal.
"""

from fractions import Fraction as F

from inhomspec import qnum, make_alpha, ncf_expand

print("== classics ==")
for label, x in [
    ("sqrt(14)", qnum(0, 1, 14)),
    ("sqrt(2)", qnum(0, 1, 2)),
    ("golden ratio", (1 + qnum(0, 1, 5)) / 2),
    ("sqrt(23)", qnum(0, 1, 23)),
    ("(7 - 3 sqrt 2)/5", qnum(F(7, 5), F(-3, 5), 2)),
]:
    print(f"{label:18s} -> {ncf_expand(x)}")

print("\nsqrt(14) = [4; (4,8)*]^-: the running example with a period-two tail.")

print("\n== purely periodic normal forms ==")
for a, b in [(2, 5), (4, 8), (3, 7), (5, 12)]:
    al = make_alpha(a, b)
    print(f"eta({a},{b})  -> {ncf_expand(al.eta)}   beta({a},{b}) -> {ncf_expand(al.beta)}")

print("\nA value whose expansion is period two can be recognized directly:")
e = ncf_expand(qnum(0, 1, 14))
print("period_two(sqrt 14) =", e.period_two())
