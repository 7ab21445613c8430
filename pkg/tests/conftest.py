from fractions import Fraction

import hypothesis.strategies as st
import pytest

from polyweyl import AlgebraElement, GroupElement, Partition, Poly, StepFunction, TensorElement
from polyweyl.lie import CurrentElement

BOUND = 16


@st.composite
def rationals(draw, bound=BOUND, nonzero=False):
    den = draw(st.integers(1, bound))
    lo = 1 if nonzero else 0
    num = draw(st.integers(lo, bound)) * draw(st.sampled_from([1, -1]))
    return Fraction(num, den)


def polys(n, bound=BOUND):
    return st.lists(rationals(bound), min_size=n + 1, max_size=n + 1).map(
        lambda cs: Poly(n, tuple(cs))
    )


@st.composite
def group_elements(draw, n=None, bound=BOUND):
    if n is None:
        n = draw(st.integers(1, 5))
    return GroupElement(n, draw(rationals(bound)), draw(polys(n, bound)))


@st.composite
def step_functions(draw, max_pieces=4, bound=8):
    k = draw(st.integers(0, max_pieces))
    pieces = []
    for _ in range(k):
        lo = draw(rationals(bound))
        width = Fraction(draw(st.integers(1, bound)), draw(st.integers(1, 4)))
        pieces.append((lo, lo + width, draw(rationals(bound))))
    return StepFunction(pieces)


@st.composite
def current_elements(draw, n):
    return CurrentElement(
        n, draw(rationals()), tuple(draw(step_functions()) for _ in range(n + 1))
    )


@st.composite
def interval_partitions(draw, max_cells=8, lo=None, length=None):
    """A partition of a single interval into consecutive pieces."""
    if lo is None:
        lo = draw(rationals(8))
    if length is None:
        length = Fraction(draw(st.integers(1, 8)), draw(st.integers(1, 4)))
    m = draw(st.integers(1, max_cells))
    cuts = sorted(draw(st.sets(st.integers(1, 47), min_size=m - 1, max_size=m - 1)))
    pts = [lo] + [lo + length * Fraction(c, 48) for c in cuts] + [lo + length]
    return Partition.from_points(*pts)


@st.composite
def refinements(draw, p, max_cells=8):
    """A random partition refining ``p`` with at most ``max_cells`` cells."""
    budget = max_cells - len(p.cells)
    cells = []
    for cell in p.cells:
        iv = cell.intervals[0]
        extra = draw(st.integers(0, max(0, min(budget, 3))))
        budget -= extra
        cuts = sorted(draw(st.sets(st.integers(1, 47), min_size=extra, max_size=extra)))
        pts = [iv.lo] + [iv.lo + iv.length * Fraction(c, 48) for c in cuts] + [iv.hi]
        cells.extend(Partition.from_points(*pts).cells)
    return Partition(p.of, tuple(cells))


def small_coeffs():
    """Gaussian integers; products of a few stay exact in floating point."""
    return st.builds(complex, st.integers(-3, 3), st.integers(-3, 3)).filter(bool)


@st.composite
def algebra_elements(draw, n, max_terms=4, bound=4):
    k = draw(st.integers(1, max_terms))
    return AlgebraElement(n, {draw(group_elements(n, bound)): draw(small_coeffs()) for _ in range(k)})


@st.composite
def tensor_elements(draw, n, partition, max_words=3, bound=4):
    m = len(partition.cells)
    words = {}
    for _ in range(draw(st.integers(1, max_words))):
        key = tuple(draw(group_elements(n, bound)) for _ in range(m))
        words[key] = draw(small_coeffs())
    return TensorElement(n, partition, words)


@pytest.fixture
def unit_interval():
    from polyweyl import Region

    return Region.interval(0, 1)
