"""
Brackets of smeared generators
==============================

Step-function currents, the Jacobi identity, and the rescaling that sends a
region's generators to the one-mode algebra.
"""

from fractions import Fraction

from polyweyl import (
    CurrentElement,
    Region,
    StepFunction,
    bracket_current,
    bracket_one_mode,
    jacobi_defect,
    rescaling_constants,
    shat_apply,
)

n = 2
I = Region.interval(0, 4)
chi = StepFunction.indicator(I)
gens = [CurrentElement.generator(n, k, chi) for k in range(n + 2)]

# The top generator lowers the index of every other one.  Against L_1 the
# result is the central element, weighted by the length of the region.
print("[L_3, L_1] =", bracket_current(gens[3], gens[1]))

# Three currents with overlapping supports still satisfy Jacobi exactly.
f = StepFunction([(0, 2, 3), (2, 5, -1)])
g = StepFunction([(1, 3, Fraction(1, 2))])
x = CurrentElement.generator(n, 3, f) + CurrentElement.generator(n, 1, g)
y = CurrentElement.generator(n, 3, g)
z = CurrentElement.generator(n, 2, f * g)
print("Jacobi defect is zero:", jacobi_defect(x, y, z).is_zero())

# On a single region the currents look like the one-mode algebra once the
# coordinates are rescaled by b = |I|^(1/2) and c_k = |I|^(1 - k/2).
params = rescaling_constants(I.length, 1, n)
print("b =", params.b, " c =", params.c)
for i in range(n + 2):
    for j in range(i + 1, n + 2):
        lhs = shat_apply(params, bracket_current(gens[j], gens[i]), I)
        rhs = bracket_one_mode(shat_apply(params, gens[j], I), shat_apply(params, gens[i], I))
        assert lhs == rhs, (i, j)
print("brackets preserved on all generator pairs")
