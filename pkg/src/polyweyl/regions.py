"""Finite unions of half-open rational intervals and their partitions."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import RegionMismatchError
from .scalars import as_rational

__all__ = [
    "Interval",
    "Region",
    "Partition",
    "length",
    "is_refinement",
    "common_refinement",
    "merge_partitions",
    "split_partition",
]


@dataclass(frozen=True, order=True)
class Interval:
    """``[lo, hi)``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if not lo < hi:
            raise RegionMismatchError(f"empty interval [{lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self):
        return self.hi - self.lo

    def __repr__(self):
        return f"[{self.lo}, {self.hi})"


def _canonical(intervals):
    ivs = sorted(intervals)
    merged = []
    for iv in ivs:
        if merged and iv.lo <= merged[-1].hi:
            last = merged[-1]
            if iv.hi > last.hi:
                merged[-1] = Interval(last.lo, iv.hi)
        else:
            merged.append(iv)
    return tuple(merged)


@dataclass(frozen=True)
class Region:
    """A finite union of intervals, kept as sorted maximal pieces."""

    intervals: tuple = ()

    def __post_init__(self):
        ivs = [iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.intervals]
        object.__setattr__(self, "intervals", _canonical(ivs))

    @classmethod
    def interval(cls, lo, hi):
        return cls((Interval(lo, hi),))

    @classmethod
    def of(cls, *bounds):
        """``Region.of((0, 1), (2, 3))``."""
        return cls(tuple(Interval(lo, hi) for lo, hi in bounds))

    @property
    def length(self):
        return sum((iv.length for iv in self.intervals), Fraction(0))

    @property
    def is_empty(self):
        return not self.intervals

    def breakpoints(self):
        pts = set()
        for iv in self.intervals:
            pts.update((iv.lo, iv.hi))
        return pts

    def __bool__(self):
        return bool(self.intervals)

    def __or__(self, other):
        return Region(self.intervals + other.intervals)

    def __and__(self, other):
        out = []
        for a, b in product(self.intervals, other.intervals):
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if lo < hi:
                out.append(Interval(lo, hi))
        return Region(tuple(out))

    def __sub__(self, other):
        out = []
        for a in self.intervals:
            pieces = [(a.lo, a.hi)]
            for b in other.intervals:
                nxt = []
                for lo, hi in pieces:
                    if b.hi <= lo or b.lo >= hi:
                        nxt.append((lo, hi))
                        continue
                    if lo < b.lo:
                        nxt.append((lo, b.lo))
                    if b.hi < hi:
                        nxt.append((b.hi, hi))
                pieces = nxt
            out.extend(Interval(lo, hi) for lo, hi in pieces)
        return Region(tuple(out))

    def __le__(self, other):
        return (self - other).is_empty

    def isdisjoint(self, other):
        return (self & other).is_empty

    def shift(self, t):
        t = as_rational(t)
        return Region(tuple(Interval(iv.lo + t, iv.hi + t) for iv in self.intervals))

    def sort_key(self):
        return tuple((iv.lo, iv.hi) for iv in self.intervals)

    def __repr__(self):
        if not self.intervals:
            return "Region()"
        return " u ".join(repr(iv) for iv in self.intervals)


def length(r):
    return r.length


@dataclass(frozen=True)
class Partition:
    """A finite partition of ``of`` into non-empty, pairwise disjoint cells."""

    of: Region
    cells: tuple

    def __post_init__(self):
        cells = []
        for c in self.cells:
            if isinstance(c, Interval):
                c = Region((c,))
            elif not isinstance(c, Region):
                c = Region(tuple(c))
            if c.is_empty:
                raise RegionMismatchError("partition cells must be non-empty")
            cells.append(c)
        cells.sort(key=Region.sort_key)
        total = Fraction(0)
        union = Region()
        for c in cells:
            total += c.length
            union = union | c
        # disjoint iff lengths add up
        if total != union.length:
            raise RegionMismatchError("partition cells overlap")
        if union != self.of:
            raise RegionMismatchError(f"cells cover {union!r}, not {self.of!r}")
        object.__setattr__(self, "cells", tuple(cells))

    @classmethod
    def trivial(cls, region):
        return cls(region, (region,))

    @classmethod
    def from_points(cls, *points):
        """Consecutive intervals ``[p0,p1), [p1,p2), ...``."""
        pts = [as_rational(p) for p in points]
        cells = tuple(Region.interval(a, b) for a, b in zip(pts, pts[1:]))
        return cls(Region(tuple(iv for c in cells for iv in c.intervals)), cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def index_of(self, region):
        """Index of the unique cell containing ``region``, or ``None``."""
        for i, c in enumerate(self.cells):
            if region <= c:
                return i
        return None

    def shift(self, t):
        return Partition(self.of.shift(t), tuple(c.shift(t) for c in self.cells))

    def __repr__(self):
        return "{" + ", ".join(repr(c) for c in self.cells) + "}"


def _same_region(p1, p2):
    if p1.of != p2.of:
        raise RegionMismatchError(f"partitions of different regions {p1.of!r} and {p2.of!r}")


def is_refinement(fine, coarse):
    _same_region(fine, coarse)
    return all(coarse.index_of(c) is not None for c in fine.cells)


def common_refinement(p1, p2):
    _same_region(p1, p2)
    cells = []
    for a, b in product(p1.cells, p2.cells):
        c = a & b
        if c:
            cells.append(c)
    return Partition(p1.of, tuple(cells))


def merge_partitions(pI, pJ):
    if not pI.of.isdisjoint(pJ.of):
        raise RegionMismatchError("cannot merge partitions of overlapping regions")
    return Partition(pI.of | pJ.of, pI.cells + pJ.cells)


def split_partition(p, I):
    """Inverse of :func:`merge_partitions`: split ``p`` along region ``I``."""
    if not I <= p.of:
        raise RegionMismatchError(f"{I!r} is not inside {p.of!r}")
    inside = tuple(c for c in p.cells if c <= I)
    outside = tuple(c for c in p.cells if c.isdisjoint(I))
    if len(inside) + len(outside) != len(p.cells):
        raise RegionMismatchError(f"a cell of {p!r} straddles {I!r}")
    J = p.of - I
    pI = Partition(I, inside)
    return pI, (Partition(J, outside) if J else None)
