#!/usr/bin/env python3
"""From a periodic digit pattern to its exact approximation constant.

A target gamma is encoded by centered digits t_i relative to the quotient
pattern (a at odd positions, b at even).  Named blocks assemble the
catalogued periods; gamma itself, the two-sided tail sums, and the
normalized constant all come out in closed form.
"""

from inhomspec import (
    Block,
    TSequence,
    make_alpha,
    tseq_from_blocks,
    parse_period,
    gamma_value,
    d_plus,
    d_minus,
    m_star,
    m_value,
    reflect,
)

al = make_alpha(4, 8)

print("== blocks to digits ==")
seq = tseq_from_blocks([Block("A", 0)], al)
print("A_0 at (4,8): t-period", seq.period, " digits", seq.digits(al)[1])
gamma = gamma_value(seq, al)
print("gamma =", gamma, "=", gamma.decimal(15))

print("\n== the normalized constant of that target ==")
ms = m_star(seq, al)
print("M* =", ms, "=", ms.decimal(15))
print("   equals (1-eta)(1-beta):", ms == (1 - al.eta) * (1 - al.beta))
print("M  =", m_value(ms, al).decimal(15))

print("\n== tail sums at each cut ==")
word = parse_period("A1 A1 A1' A1'", make_alpha(4, 7))
al47 = make_alpha(4, 7)
for i in range(1, 5):
    dp, dm = d_plus(word, i, al47), d_minus(word, i, al47)
    print(f"  cut {i}: d+ = {dp.decimal(10)}   d- = {dm.decimal(10)}")
print("cut 3 has d- = D(1-D)/(1+D^2):",
      d_minus(word, 3, al47) == al47.D * (1 - al47.D) / (1 + al47.D**2))

print("\n== reflection: the expansion of 1 - alpha - gamma ==")
print("negating a max-free period:", reflect(word, al47).period)
al2 = make_alpha(2, 7)
f3 = TSequence((2, -3))
print("with a maximal digit, carries appear: (2,-3) ->", reflect(f3, al2).period)
print("both give the same constant:",
      m_star(f3, al2) == m_star(reflect(f3, al2), al2))

print("\n== shift invariance ==")
w = TSequence((0, 2, -2, 2, 0, -2))
vals = {m_star(w.rotated(r), al).decimal(12) for r in range(3)}
print("rotations of one period share the constant:", vals)
