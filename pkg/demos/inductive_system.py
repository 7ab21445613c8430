"""
Tensor words over refining partitions
=====================================

Embed a localized generator into finer and finer partitions and check that
the routes agree.
"""

from fractions import Fraction

from polyweyl import (
    AlgebraElement,
    GroupElement,
    LocalizedElement,
    Partition,
    Region,
    TensorElement,
    ambient_embed,
    embed_generator,
    embed_refine,
    merge_factorize,
)

g = GroupElement.of(1, 0, 1)
I = Region.interval(0, 2)
halves = Partition.from_points(0, 1, 2)
quarters = Partition.from_points(0, Fraction(1, 2), 1, Fraction(3, 2), 2)

# A generator on [0, 2) becomes the same label placed in each cell.
w = embed_generator(halves, LocalizedElement(I, AlgebraElement.generator(g)))
print(w, w.words)

# Going through the halves or going straight to the quarters gives the same word.
coarse = TensorElement(1, Partition.trivial(I), {(g,): 1})
print("two steps == one step:",
      embed_refine(embed_refine(coarse, halves), quarters) == embed_refine(coarse, quarters))

# The embedding is linear. A sum of generators does not turn into a tensor square.
h = GroupElement.of(0, 1, 0)
s = embed_generator(halves, LocalizedElement(I, AlgebraElement(1, {g: 2, h: 1j})))
print("words in the image of 2W_g + iW_h:", len(s.words))

# Disjoint regions glue, and padding with the unit places an element inside a
# larger region.
left = TensorElement(1, Partition.from_points(0, 1), {(g,): 1})
right = TensorElement(1, Partition.from_points(1, 2), {(h,): 1})
print("merged:", merge_factorize(left, right).words)
print("padded:", ambient_embed(left, Region.interval(0, 3)).words)
