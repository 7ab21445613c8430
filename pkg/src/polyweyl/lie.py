"""The Lie algebra heis(1, n) and its current algebra over step functions.

Basis ``L_0, ..., L_{n+1}`` with ``[L_i, L_j] = 0`` for ``i, j <= n`` and
``[L_{n+1}, L_k] = k L_{k-1}`` (``L_{-1} = 0``).  In the current algebra
the generators are smeared by test functions, ``[L_{n+1}(f), L_k(g)] =
k L_{k-1}(fg)``, and the central direction only remembers the integral:
``L_0(f) = (integral of f) L_0``.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from .errors import DegreeMismatchError, DomainError, ShapeError
from .group import GroupElement
from .regions import Interval, Region
from .scalars import as_rational, is_exact, pow_half_int

__all__ = [
    "LieElement",
    "StepFunction",
    "CurrentElement",
    "RescalingParams",
    "bracket_one_mode",
    "bracket_current",
    "jacobi_defect",
    "rescaling_constants",
    "shat_apply",
    "ell_0",
    "ell_I",
]


def _close(a, b, rtol=1e-12):
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)


@dataclass(frozen=True)
class LieElement:
    """``u L_{n+1} + sum_k a[k] L_k``."""

    n: int
    u: Fraction
    a: tuple

    def __post_init__(self):
        if len(self.a) != self.n + 1:
            raise ShapeError(f"expected {self.n + 1} coefficients, got {len(self.a)}")

    @classmethod
    def basis(cls, n, k, coeff=1):
        """``coeff * L_k``."""
        if k == n + 1:
            return cls(n, coeff, (0,) * (n + 1))
        a = [0] * (n + 1)
        a[k] = coeff
        return cls(n, 0, tuple(a))

    def __add__(self, other):
        _same_n(self, other)
        return LieElement(self.n, self.u + other.u, tuple(x + y for x, y in zip(self.a, other.a)))

    def __mul__(self, s):
        if not isinstance(s, Number):
            return NotImplemented
        return LieElement(self.n, s * self.u, tuple(s * x for x in self.a))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.u == 0 and all(x == 0 for x in self.a)

    def isclose(self, other, rtol=1e-12):
        _same_n(self, other)
        return _close(self.u, other.u, rtol) and all(
            _close(x, y, rtol) for x, y in zip(self.a, other.a)
        )


def _same_n(x, y):
    if x.n != y.n:
        raise DegreeMismatchError(f"cannot combine n={x.n} with n={y.n}")


def bracket_one_mode(x, y):
    _same_n(x, y)
    n = x.n
    out = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        out[k - 1] += k * (x.u * y.a[k] - y.u * x.a[k])
    return LieElement(n, Fraction(0), tuple(out))


class StepFunction:
    """A finitely supported, piecewise constant function with rational data.

    Stored canonically as sorted ``(lo, hi, value)`` triples: no zero
    values, no two touching pieces with the same value.  Overlapping
    input pieces are summed.
    """

    __slots__ = ("pieces",)

    def __init__(self, pieces=()):
        raw = []
        for p in pieces:
            if isinstance(p[0], Interval):
                iv, val = p
                lo, hi = iv.lo, iv.hi
            else:
                lo, hi, val = p
            lo, hi, val = as_rational(lo), as_rational(hi), as_rational(val)
            if not lo < hi:
                raise DomainError(f"empty step piece [{lo}, {hi})")
            raw.append((lo, hi, val))
        self.pieces = self._canonical(raw)

    @staticmethod
    def _canonical(raw):
        pts = sorted({x for lo, hi, _ in raw for x in (lo, hi)})
        out = []
        for a, b in zip(pts, pts[1:]):
            val = sum((v for lo, hi, v in raw if lo <= a and b <= hi), Fraction(0))
            if val == 0:
                continue
            if out and out[-1][1] == a and out[-1][2] == val:
                out[-1] = (out[-1][0], b, val)
            else:
                out.append((a, b, val))
        return tuple(out)

    @classmethod
    def indicator(cls, region, value=1):
        return cls(tuple((iv.lo, iv.hi, value) for iv in region.intervals))

    @classmethod
    def zero(cls):
        return cls()

    def __eq__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __bool__(self):
        return bool(self.pieces)

    def __repr__(self):
        body = ", ".join(f"[{lo}, {hi}):{v}" for lo, hi, v in self.pieces)
        return f"StepFunction({body})"

    def __call__(self, x):
        x = as_rational(x)
        for lo, hi, v in self.pieces:
            if lo <= x < hi:
                return v
        return Fraction(0)

    def __add__(self, other):
        return StepFunction(self.pieces + other.pieces)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, StepFunction):
            out = []
            for a_lo, a_hi, a in self.pieces:
                for b_lo, b_hi, b in other.pieces:
                    lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
                    if lo < hi:
                        out.append((lo, hi, a * b))
            return StepFunction(out)
        if isinstance(other, Number):
            s = as_rational(other)
            return StepFunction(tuple((lo, hi, s * v) for lo, hi, v in self.pieces))
        return NotImplemented

    __rmul__ = __mul__

    def integral(self):
        return sum(((hi - lo) * v for lo, hi, v in self.pieces), Fraction(0))

    def support(self):
        return Region(tuple(Interval(lo, hi) for lo, hi, _ in self.pieces))

    def restrict(self, region):
        return self * StepFunction.indicator(region)

    def constant_on(self, region):
        """The value ``c`` if this equals ``c * chi_region``, else ``None``."""
        if not self:
            return Fraction(0)
        vals = {v for _, _, v in self.pieces}
        if len(vals) != 1 or self.support() != region:
            return None
        return vals.pop()


@dataclass(frozen=True)
class CurrentElement:
    """``c0 L_0 + sum_{k=1}^{n+1} L_k(fields[k-1])``.

    ``c0`` is already the integral of the ``L_0`` test function.
    """

    n: int
    c0: Fraction
    fields: tuple

    def __post_init__(self):
        if len(self.fields) != self.n + 1:
            raise ShapeError(f"expected {self.n + 1} smeared components, got {len(self.fields)}")
        object.__setattr__(self, "c0", as_rational(self.c0))

    @classmethod
    def zero(cls, n):
        return cls(n, Fraction(0), tuple(StepFunction() for _ in range(n + 1)))

    @classmethod
    def generator(cls, n, k, f):
        """``L_k(f)``; for ``k = 0`` only the integral of ``f`` survives."""
        if not 0 <= k <= n + 1:
            raise ShapeError(f"no generator L_{k} at n={n}")
        if k == 0:
            return cls(n, f.integral(), cls.zero(n).fields)
        fields = [StepFunction() for _ in range(n + 1)]
        fields[k - 1] = f
        return cls(n, Fraction(0), tuple(fields))

    def field(self, k):
        """Test function multiplying ``L_k`` (``1 <= k <= n+1``)."""
        return self.fields[k - 1]

    def __add__(self, other):
        _same_n(self, other)
        return CurrentElement(
            self.n, self.c0 + other.c0, tuple(f + g for f, g in zip(self.fields, other.fields))
        )

    def __mul__(self, s):
        if not isinstance(s, Number):
            return NotImplemented
        s = as_rational(s)
        return CurrentElement(self.n, s * self.c0, tuple(f * s for f in self.fields))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.c0 == 0 and not any(self.fields)


def bracket_current(x, y):
    _same_n(x, y)
    n = x.n
    xp, yp = x.field(n + 1), y.field(n + 1)
    c0 = (xp * y.field(1) - yp * x.field(1)).integral()
    fields = [StepFunction() for _ in range(n + 1)]
    for k in range(2, n + 1):
        fields[k - 2] = (xp * y.field(k) - yp * x.field(k)) * k
    return CurrentElement(n, c0, tuple(fields))


def jacobi_defect(x, y, z):
    return (
        bracket_current(x, bracket_current(y, z))
        + bracket_current(y, bracket_current(z, x))
        + bracket_current(z, bracket_current(x, y))
    )


@dataclass(frozen=True)
class RescalingParams:
    """Constants of a linear map ``L_0 -> a_I i1``, ``L_{n+1}(chi_I) -> b_I ip``,
    ``L_k(chi_I) -> c_k iq^k``."""

    length: Fraction
    a_I: Fraction
    b: object
    c: tuple

    def __post_init__(self):
        if self.length <= 0:
            raise DomainError("region length must be positive")
        if self.a_I == 0 or self.b == 0 or any(ck == 0 for ck in self.c):
            raise DomainError("rescaling constants must be non-zero")

    @property
    def n(self):
        return len(self.c)

    @property
    def exact(self):
        return is_exact(self.b) and all(is_exact(ck) for ck in self.c)

    def structure_holds(self, rtol=1e-12):
        """``c_k = b^-k |I| a_I`` for every k: the bracket-preservation condition."""
        target = self.length * self.a_I
        return all(_close(ck, target / self.b**k, rtol) for k, ck in enumerate(self.c, 1))


def rescaling_constants(length, a_I, n):
    """Constants normalised by ``c_1 = b``: ``c_k = (|I| a_I)^(1 - k/2)``."""
    length, a_I = as_rational(length), as_rational(a_I)
    if length <= 0 or a_I <= 0:
        raise DomainError(f"need |I| > 0 and a_I > 0, got {length}, {a_I}")
    m = length * a_I
    return RescalingParams(
        length, a_I, pow_half_int(m, 1), tuple(pow_half_int(m, 2 - k) for k in range(1, n + 1))
    )


def ell_0(g):
    """The Lie element ``u L_{n+1} + P(L)`` with the coordinates of ``g``."""
    return LieElement(g.n, g.u, tuple(g.P.coeffs))


def ell_I(region, g):
    """``u L_{n+1}(chi_I) + a_0 |I| L_0 + sum_j a_j L_j(chi_I)``."""
    chi = StepFunction.indicator(region)
    fields = tuple(chi * a for a in g.P.coeffs[1:]) + (chi * g.u,)
    return CurrentElement(g.n, g.P.coeffs[0] * region.length, fields)


def _region_of(x):
    supports = [f.support() for f in x.fields if f]
    if not supports:
        return None
    region = supports[0]
    for s in supports[1:]:
        if s != region:
            raise ShapeError("components are supported on different regions")
    return region


def shat_apply(params, x, region=None):
    """Image of a single-region element under the rescaling isomorphism.

    ``x`` must be of the form ``ell_I(region, (u, P))``.  The result
    coordinates are ``(u b, c0 a_I, a_1 c_1, ..., a_n c_n)``; with the
    standard constants this is ``ell_0(khat_apply(RescaleMap(|I|), g))``.
    """
    if params.n != x.n:
        raise DegreeMismatchError(f"params for n={params.n}, element has n={x.n}")
    if params.a_I != 1 and x.n >= 2:
        raise ShapeError("weighted rescaling (a_I != 1) is only defined for n = 1")
    found = _region_of(x)
    if region is None:
        region = found
    elif found is not None and found != region:
        raise ShapeError(f"element supported on {found!r}, expected {region!r}")
    if region is not None and region.length != params.length:
        raise ShapeError(f"region length {region.length} does not match |I| = {params.length}")
    coords = []
    for k in range(1, x.n + 2):
        val = x.field(k).constant_on(region) if region is not None else Fraction(0)
        if val is None:
            raise ShapeError(f"component L_{k} is not a multiple of the region indicator")
        coords.append(val)
    u = coords[-1] * params.b
    a = (x.c0 * params.a_I,) + tuple(ak * ck for ak, ck in zip(coords[:-1], params.c))
    return LieElement(x.n, u, a)


def lie_to_group(y):
    """Read a Lie element's coordinates as a group label ``(u, P)``."""
    return GroupElement(y.n, y.u, y.a)
