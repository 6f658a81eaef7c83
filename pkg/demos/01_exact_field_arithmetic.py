#!/usr/bin/env python3
"""A tour of the exact quadratic arithmetic underneath everything else.

Every number in this project is p + q*sqrt(N) with big-integer rationals
p, q.  Comparisons, floors and printed digits come from integer arithmetic
alone, so a printed digit is a certified digit.
"""

from fractions import Fraction as F

from inhomspec import QuadNum, qnum, make_alpha

print("== construction and printing ==")
sqrt2 = qnum(0, 1, 2)
print("sqrt(2)            =", sqrt2.decimal(30))
x = qnum(4, -1, 14)
print("4 - sqrt(14)       =", x.decimal(12), "  (this is eta for (a,b) = (4,8))")

print("\n== arithmetic stays exact ==")
y = qnum(2, F(-1, 2), 14)
print("(4-sqrt14)(2-sqrt14/2) =", x * y, "  -> equals 15 - 4*sqrt(14):", x * y == qnum(15, -4, 14))
z = qnum(3, 1, 5)
print("z * z^-1 =", z * z.inverse())

print("\n== ordering without floats ==")
# is sqrt(2) larger than 3/2?  cross-multiplied: 2*4 vs 9
print("sign(sqrt2 - 3/2)  =", (sqrt2 - F(3, 2)).sign())
print("sign(15 - 4sqrt14) =", qnum(15, -4, 14).sign(), " (225 vs 224 after squaring)")
phi = (1 + qnum(0, 1, 5)) / 2
print("floor(golden ratio) =", phi.floor(), "  ceil =", phi.ceil())

print("\n== the period-two constants ==")
al = make_alpha(4, 8)
print("eta  =", al.eta, "=", al.eta.decimal(15))
print("beta =", al.beta, "=", al.beta.decimal(15))
print("D    =", al.D.reduced(), "=", al.D.decimal(15))
print("a*eta == 1 + D:", al.eta * al.a == 1 + al.D)
print("b*beta == 1 + D:", al.beta * al.b == 1 + al.D)

print("\n== square-part normalization ==")
d = al.D
print("D lives in sqrt(896); reduced() moves the square part into q:")
print("   ", repr(d), "->", repr(d.reduced()))
