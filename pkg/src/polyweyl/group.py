"""The polynomial Heisenberg group Heis(1, n).

Elements are pairs ``(u, P)`` with ``u`` a scalar and ``P`` in
``R_n[X]``; they stand for the unitaries ``exp(i(u p + P(q)))``.  The
product is

    (u, P) o (v, Q) = (u + v, T_{u+v}^{-1}(T_u P + T_v S_u Q))

which at ``n = 1`` is the usual Weyl cocycle.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatchError, DomainError
from .poly import Poly, _scalar, s_apply, t_apply, t_inv_apply
from .scalars import as_rational, is_exact, pow_half_int

__all__ = [
    "GroupElement",
    "RescaleMap",
    "compose",
    "identity",
    "inverse",
    "khat_apply",
    "khat_inverse",
]


@dataclass(frozen=True)
class GroupElement:
    n: int
    u: object
    P: Poly

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"degree bound must be >= 1, got {self.n}")
        P = self.P
        if not isinstance(P, Poly):
            P = Poly(self.n, tuple(P))
        if P.n != self.n:
            if P.n > self.n:
                P = Poly(self.n, P.coeffs)  # raises if it does not fit
            else:
                P = P.padded(self.n)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "u", _scalar(self.u))

    @classmethod
    def of(cls, u, *coeffs, n=None):
        """Shorthand: ``GroupElement.of(1, 0, 1)`` is ``(1, X)`` at ``n=1``."""
        if n is None:
            n = max(len(coeffs) - 1, 1)
        return cls(n, u, Poly(n, coeffs))

    @property
    def coeffs(self):
        return self.P.coeffs

    @property
    def is_exact(self):
        return is_exact(self.u) and self.P.is_exact

    def __matmul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __repr__(self):
        return f"GroupElement(n={self.n}, u={self.u}, P={self.P})"


def _check_same_n(g, h):
    if g.n != h.n:
        raise DegreeMismatchError(f"cannot combine n={g.n} with n={h.n}")


def compose(g, h):
    _check_same_n(g, h)
    u, v = g.u, h.u
    inner = t_apply(u, g.P) + t_apply(v, s_apply(u, h.P))
    return GroupElement(g.n, u + v, t_inv_apply(u + v, inner))


def identity(n):
    return GroupElement(n, Fraction(0), Poly.zero(n))


def inverse(g):
    # exp(i(up + P(q)))^* = exp(-i(up + P(q)))
    return GroupElement(g.n, -g.u, -g.P)


@dataclass(frozen=True)
class RescaleMap:
    """The coordinate rescaling attached to a region of length ``length``.

    ``u -> u L^(1/2)`` and ``a_j -> a_j L^(1 - j/2)``.
    """

    length: Fraction

    def __post_init__(self):
        L = as_rational(self.length)
        if L <= 0:
            raise DomainError(f"rescale length must be positive, got {L}")
        object.__setattr__(self, "length", L)

    @property
    def exact(self):
        """True when every weight is rational, i.e. ``length`` is a square."""
        return is_exact(pow_half_int(self.length, 1))

    def inverted(self):
        return RescaleMap(1 / self.length)

    def weights(self, n):
        """``(u weight, [a_0 weight, ..., a_n weight])``."""
        return (
            pow_half_int(self.length, 1),
            [pow_half_int(self.length, 2 - j) for j in range(n + 1)],
        )


def khat_apply(m, g):
    wu, wa = m.weights(g.n)
    return GroupElement(
        g.n, g.u * wu, Poly(g.n, tuple(c * w for c, w in zip(g.P.coeffs, wa)))
    )


def khat_inverse(m, g):
    return khat_apply(m.inverted(), g)
