"""Free group *-algebra of Heis(1, n) and partition-indexed tensor words.

An :class:`AlgebraElement` is a finite sum ``sum_g c_g W_g`` with
``W_g W_h = W_{g o h}`` and ``W_g^* = W_{g^-1}``.  A
:class:`TensorElement` lives over a :class:`~polyweyl.regions.Partition`
and is stored fully expanded, as a sum of elementary words
``W_{g_1} (x) ... (x) W_{g_m}`` (one factor per cell, cells in canonical
order).  Because the words form a basis, two tensor elements over the
same partition are equal exactly when their word dictionaries agree.

Generators carry the same label ``(u, P)`` in every cell: the
localizing isomorphisms identify ``W_I(u, P)`` with ``W(u, P)``, so
refining a partition copies each cell's label into its sub-cells.
"""

from dataclasses import dataclass
from itertools import product
from numbers import Number

from .errors import DegreeMismatchError, RegionMismatchError
from .group import compose, identity, inverse
from .regions import Partition, Region, common_refinement, is_refinement, merge_partitions
from .scalars import checked_complex

__all__ = [
    "AlgebraElement",
    "LocalizedElement",
    "TensorElement",
    "alg_mul",
    "alg_star",
    "embed_generator",
    "embed_refine",
    "tensor_mul",
    "tensor_star",
    "merge_factorize",
    "ambient_embed",
]


def _add_term(terms, key, c):
    c = terms.get(key, 0) + c
    if c == 0:
        terms.pop(key, None)
    else:
        terms[key] = c


def _coeff(c):
    return checked_complex(c) if isinstance(c, complex) else c


class AlgebraElement:
    """``sum_g c_g W_g`` over exact group labels ``g``."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for g, c in (terms or {}).items():
            if g.n != n:
                raise DegreeMismatchError(f"term with n={g.n} in an n={n} element")
            _add_term(clean, g, _coeff(c))
        self.terms = clean

    @classmethod
    def generator(cls, g, c=1):
        return cls(g.n, {g: c})

    @classmethod
    def unit(cls, n):
        return cls(n, {identity(n): 1})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})W{g.u, str(g.P)}" for g, c in self.terms.items())

    def __add__(self, other):
        _same_n(self, other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            _add_term(terms, g, c)
        return AlgebraElement(self.n, terms)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        if isinstance(other, Number):
            return AlgebraElement(self.n, {g: c * other for g, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, s):
        if isinstance(s, Number):
            return self * s
        return NotImplemented

    def star(self):
        return alg_star(self)

    def isclose(self, other, atol=1e-12):
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.terms.get(k, 0) - other.terms.get(k, 0)) <= atol for k in keys)


def _same_n(x, y):
    if x.n != y.n:
        raise DegreeMismatchError(f"cannot combine n={x.n} with n={y.n}")


def alg_mul(x, y):
    _same_n(x, y)
    terms = {}
    for (g, a), (h, b) in product(x.terms.items(), y.terms.items()):
        _add_term(terms, compose(g, h), a * b)
    return AlgebraElement(x.n, terms)


def alg_star(x):
    return AlgebraElement(x.n, {inverse(g): c.conjugate() for g, c in x.terms.items()})


@dataclass(frozen=True)
class LocalizedElement:
    """An algebra element whose generators are localized on ``region``."""

    region: Region
    elem: AlgebraElement

    def __post_init__(self):
        if self.region.is_empty:
            raise RegionMismatchError("localized elements need a non-empty region")


class TensorElement:
    """Sum of elementary words over the cells of ``partition``.

    ``words`` maps a tuple of group labels (one per cell, in the
    partition's cell order) to a coefficient.
    """

    __slots__ = ("n", "partition", "words")

    def __init__(self, n, partition, words=None):
        self.n = n
        self.partition = partition
        clean = {}
        m = len(partition.cells)
        for key, c in (words or {}).items():
            key = tuple(key)
            if len(key) != m:
                raise RegionMismatchError(f"word has {len(key)} factors for {m} cells")
            if any(g.n != n for g in key):
                raise DegreeMismatchError(f"word factor with wrong degree bound (n={n})")
            _add_term(clean, key, _coeff(c))
        self.words = clean

    @classmethod
    def unit(cls, n, partition):
        return cls(n, partition, {(identity(n),) * len(partition.cells): 1})

    @classmethod
    def from_factors(cls, partition, factors, coeff=1):
        """Expand ``coeff * factors[0] (x) factors[1] (x) ...`` into words.

        ``factors`` lists one :class:`AlgebraElement` per cell.
        """
        if len(factors) != len(partition.cells):
            raise RegionMismatchError("one factor per cell is required")
        n = factors[0].n
        words = {}
        for combo in product(*(f.terms.items() for f in factors)):
            c = coeff
            for _, ci in combo:
                c = c * ci
            _add_term(words, tuple(g for g, _ in combo), c)
        return cls(n, partition, words)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.n == other.n and self.partition == other.partition and self.words == other.words

    def __hash__(self):
        return hash((self.n, self.partition, frozenset(self.words.items())))

    def __repr__(self):
        return f"TensorElement(n={self.n}, partition={self.partition!r}, words={len(self.words)})"

    def __add__(self, other):
        if self.partition != other.partition:
            cr = common_refinement(self.partition, other.partition)
            return embed_refine(self, cr) + embed_refine(other, cr)
        words = dict(self.words)
        for k, c in other.words.items():
            _add_term(words, k, c)
        return TensorElement(self.n, self.partition, words)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        if isinstance(other, Number):
            return TensorElement(self.n, self.partition, {k: c * other for k, c in self.words.items()})
        return NotImplemented

    def __rmul__(self, s):
        if isinstance(s, Number):
            return self * s
        return NotImplemented

    def star(self):
        return tensor_star(self)

    def equivalent(self, other):
        """Equality after both sides are refined to a common partition.

        This is equality of the images in the inductive limit; it
        identifies, for example, ``W (x) 1 (x) 1`` with ``W (x) 1``.
        """
        if self.partition.of != other.partition.of:
            return False
        cr = common_refinement(self.partition, other.partition)
        return embed_refine(self, cr) == embed_refine(other, cr)


def embed_generator(partition, w):
    """Send ``W_I(u,P)`` to ``W_{I_1}(u,P) (x) ... (x) W_{I_m}(u,P)``, linearly."""
    if w.region != partition.of:
        raise RegionMismatchError(f"element lives on {w.region!r}, partition covers {partition.of!r}")
    m = len(partition.cells)
    return TensorElement(w.elem.n, partition, {(g,) * m: c for g, c in w.elem.terms.items()})


def _refine_map(coarse, fine):
    if not is_refinement(fine, coarse):
        raise RegionMismatchError(f"{fine!r} does not refine {coarse!r}")
    return [coarse.index_of(c) for c in fine.cells]


def embed_refine(t, finer):
    """Copy each cell's labels diagonally into the sub-cells of ``finer``."""
    if finer == t.partition:
        return t
    parent = _refine_map(t.partition, finer)
    words = {}
    for key, c in t.words.items():
        _add_term(words, tuple(key[j] for j in parent), c)
    return TensorElement(t.n, finer, words)


def tensor_mul(t1, t2):
    _same_n(t1, t2)
    if t1.partition.of != t2.partition.of:
        raise RegionMismatchError("tensor elements over different regions")
    cr = common_refinement(t1.partition, t2.partition)
    a, b = embed_refine(t1, cr), embed_refine(t2, cr)
    words = {}
    for (k1, c1), (k2, c2) in product(a.words.items(), b.words.items()):
        _add_term(words, tuple(compose(g, h) for g, h in zip(k1, k2)), c1 * c2)
    return TensorElement(t1.n, cr, words)


def tensor_star(t):
    return TensorElement(
        t.n, t.partition, {tuple(inverse(g) for g in k): c.conjugate() for k, c in t.words.items()}
    )


def _reorder(merged, parts):
    """For each merged cell, the (part index, cell index) it came from."""
    where = {}
    for pi, p in enumerate(parts):
        for ci, cell in enumerate(p.cells):
            where[cell] = (pi, ci)
    return [where[cell] for cell in merged.cells]


def merge_factorize(tI, tJ):
    """The isomorphism ``W_{I;pi_I} (x) W_{J;pi_J} -> W_{I u J; pi_I u pi_J}``."""
    _same_n(tI, tJ)
    merged = merge_partitions(tI.partition, tJ.partition)
    src = _reorder(merged, (tI.partition, tJ.partition))
    words = {}
    for (kI, cI), (kJ, cJ) in product(tI.words.items(), tJ.words.items()):
        pair = (kI, kJ)
        _add_term(words, tuple(pair[pi][ci] for pi, ci in src), cI * cJ)
    return TensorElement(tI.n, merged, words)


def ambient_embed(t, J):
    """``w_I -> w_I (x) 1_{J minus I}``; the complement is a single cell."""
    I = t.partition.of
    if not I <= J:
        raise RegionMismatchError(f"{I!r} is not contained in {J!r}")
    rest = J - I
    if rest.is_empty:
        return t
    pad = TensorElement.unit(t.n, Partition.trivial(rest))
    return merge_factorize(t, pad)
