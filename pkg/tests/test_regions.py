from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyweyl import (
    Interval,
    Partition,
    Region,
    common_refinement,
    is_refinement,
    length,
    merge_partitions,
    split_partition,
)
from polyweyl.errors import RegionMismatchError

from conftest import interval_partitions, refinements

H = Fraction(3, 2)


def test_length():
    assert length(Region.interval(0, 1)) == 1
    assert length(Region.of((0, 1), (2, 3))) == 2
    assert length(Region()) == 0


def test_region_canonical_form():
    assert Region.of((1, 2), (0, 1)) == Region.interval(0, 2)
    assert Region.of((0, 2), (1, 3)).intervals == (Interval(0, 3),)
    r = Region.of((0, 1), (2, 3))
    assert r - Region.interval(Fraction(1, 2), Fraction(5, 2)) == Region.of((0, Fraction(1, 2)), (Fraction(5, 2), 3))
    assert (r & Region.interval(Fraction(1, 2), 2)) == Region.interval(Fraction(1, 2), 1)


def test_refinement_examples():
    halves = Partition.from_points(0, 1, 2)
    whole = Partition.from_points(0, 2)
    straddle = Partition.from_points(0, H, 2)
    assert is_refinement(halves, whole)
    assert is_refinement(halves, halves)
    assert not is_refinement(straddle, halves)
    with pytest.raises(RegionMismatchError):
        is_refinement(halves, Partition.from_points(0, 3))


def test_common_refinement_examples():
    halves = Partition.from_points(0, 1, 2)
    assert common_refinement(halves, halves) == halves
    assert common_refinement(Partition.from_points(0, 2), halves) == halves
    assert common_refinement(halves, Partition.from_points(0, H, 2)) == Partition.from_points(0, 1, H, 2)


def test_partition_validation():
    with pytest.raises(RegionMismatchError):
        Partition(Region.interval(0, 2), (Region.interval(0, 1),))
    with pytest.raises(RegionMismatchError):
        Partition(Region.interval(0, 2), (Region.interval(0, H), Region.interval(1, 2)))


def test_disconnected_cells():
    of = Region.interval(0, 3)
    p = Partition(of, (Region.of((0, 1), (2, 3)), Region.interval(1, 2)))
    assert len(p) == 2
    assert is_refinement(Partition.from_points(0, 1, 2, 3), p)


def test_merge_examples():
    merged = merge_partitions(Partition.from_points(0, 1), Partition.from_points(1, 2))
    assert merged == Partition.from_points(0, 1, 2)
    assert merged.of == Region.interval(0, 2)
    with pytest.raises(RegionMismatchError):
        merge_partitions(Partition.from_points(0, 2), Partition.from_points(1, 3))


@given(interval_partitions(lo=Fraction(0), length=Fraction(2)),
       interval_partitions(lo=Fraction(2), length=Fraction(3)))
def test_merge_split_roundtrip(pI, pJ):
    merged = merge_partitions(pI, pJ)
    assert split_partition(merged, pI.of) == (pI, pJ)


@given(st.data())
def test_merge_monotone(data):
    pI = data.draw(interval_partitions(max_cells=4, lo=Fraction(0), length=Fraction(1)))
    pJ = data.draw(interval_partitions(max_cells=4, lo=Fraction(1), length=Fraction(1)))
    pI2, pJ2 = data.draw(refinements(pI)), data.draw(refinements(pJ))
    assert is_refinement(merge_partitions(pI2, pJ2), merge_partitions(pI, pJ))


@given(interval_partitions())
def test_length_additive(p):
    assert sum((c.length for c in p.cells), Fraction(0)) == p.of.length


@settings(deadline=None)
@given(st.data())
def test_refinement_partial_order(data):
    p = data.draw(interval_partitions(max_cells=3))
    q = data.draw(refinements(p, max_cells=5))
    r = data.draw(refinements(q, max_cells=8))
    assert is_refinement(p, p)
    assert is_refinement(r, p)  # transitivity
    if is_refinement(p, q):
        assert p == q  # antisymmetry


def _grid_partitions():
    grid = [Fraction(k, 4) for k in (1, 2, 3)]
    out = []
    for mask in range(8):
        cuts = [x for i, x in enumerate(grid) if mask >> i & 1]
        out.append(Partition.from_points(0, *cuts, 1))
    return out


def test_common_refinement_universal():
    # brute force over every partition of [0,1) with cuts on a quarter grid
    parts = _grid_partitions()
    for p1 in parts:
        for p2 in parts:
            cr = common_refinement(p1, p2)
            assert is_refinement(cr, p1) and is_refinement(cr, p2)
            for q in parts:
                if is_refinement(q, p1) and is_refinement(q, p2):
                    assert is_refinement(q, cr)
