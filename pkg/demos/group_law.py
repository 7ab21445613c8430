"""
Composing polynomial Weyl labels
================================

Walk through the group law on pairs (u, P) with exact fractions.
"""

from fractions import Fraction

from polyweyl import GroupElement, Poly, RescaleMap, compose, inverse, khat_apply, t_apply

# A label is a real number u together with a polynomial P of bounded degree.
# GroupElement.of(u, a0, a1, ...) lists the coefficients from the constant up.
g = GroupElement.of(1, 0, 1)  # u = 1, P = X
print("g o g      =", compose(g, g))
print("g o g^-1   =", compose(g, inverse(g)))

# For degree one the law is the familiar Heisenberg one, and the constant
# term collects half the symplectic form of the two labels.
h = GroupElement.of(-1, 0, 1)
print("g o h      =", compose(g, h), " (constant term 1 = (1*1 - (-1)*1)/2)")

# In degree two the averaging operator T_w starts to leave traces in the
# lower coefficients.
w = Fraction(3, 5)
print("T_w(X^2)   =", t_apply(w, Poly.monomial(2, 2)))
print("(0,X^2) o (1,0) =", compose(GroupElement.of(0, 0, 0, 1), GroupElement.of(1, 0, 0, 0)))

# Rescaling by a region length is a group automorphism. With a perfect square
# length everything stays exact.
m = RescaleMap(Fraction(9, 4))
a, b = GroupElement.of(Fraction(1, 2), 1, -2, 3), GroupElement.of(2, 0, 1, Fraction(-1, 3))
lhs, rhs = khat_apply(m, compose(a, b)), compose(khat_apply(m, a), khat_apply(m, b))
print("khat(a o b) == khat(a) o khat(b):", lhs == rhs)
