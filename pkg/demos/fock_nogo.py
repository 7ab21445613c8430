"""
Vacuum states and the degree-two obstruction
============================================

For linear labels the vacuum value over a region is the product of the
values over any split. For quadratic labels a prefactor that ignores the
region's length spoils this.
"""

from fractions import Fraction

import numpy as np

from polyweyl import (
    GroupElement,
    Partition,
    Region,
    StateSpec,
    evaluate,
    factorizability_defect,
    nogo_experiment,
)
from polyweyl.fock import ratio_law
from polyweyl.oracle import vacuum_expectation

I = Region.interval(0, 1)
halves = Partition.from_points(0, Fraction(1, 2), 1)

rep = nogo_experiment(1, trials=1000, seed=7)
print(f"n=1: largest defect over 1000 random splits = {rep['max_defect']:.2e}")

# Put 2 in front of X^2, so A = 1. Two cells shrink the value by |1 - 2i|^(-1/2).
q = GroupElement.of(0, 0, 0, 2)
print("n=2 defect on halves:", factorizability_defect(StateSpec(2), I, halves, q))
for m in range(1, 5):
    measured, predicted = ratio_law(1, m)
    print(f"  {m} cells: |ratio| = {abs(measured):.7f}, predicted {abs(predicted):.7f}")

# A density gives weights a_I.  When I -> a_I |I| is not additive the n=1
# state stops factorizing too.
bad = StateSpec(1, weight_fn=lambda R: R.length)
print("non-additive weight defect:",
      factorizability_defect(bad, I, halves, GroupElement.of(2, 0, 0)))

# The closed forms agree with truncated oscillator matrices.
small = GroupElement.of(0, 0, 0, Fraction(1, 10))
print("matrix:", np.round(vacuum_expectation(small, N=64), 8),
      " formula:", np.round(evaluate(StateSpec(2), I, small), 8))
