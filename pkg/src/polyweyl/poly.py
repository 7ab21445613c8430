"""Polynomials of bounded degree and the transport operators on them.

``T_w`` averages a polynomial over a translation window,
``(T_w P)(X) = (1/w) * integral_0^w P(X + s) ds``, written out on
monomials as

    T_w(X^k) = sum_{h<=k} k! / ((k+1-h)! h!) * w^(k-h) * X^h

and ``S_u`` is the plain shift ``P(X) -> P(X + u)``.  Both are
unipotent on ``R_n[X]``, so ``T_w`` is inverted exactly by
back-substitution.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from numbers import Number

from .errors import DegreeMismatchError
from .scalars import as_rational, is_exact

__all__ = ["Poly", "t_apply", "t_inv_apply", "s_apply", "t_coefficient"]


def _scalar(x):
    # floats are allowed here: the rescaling map produces them for
    # non-square lengths, and the operators are linear in coefficients
    if isinstance(x, float):
        return x
    return as_rational(x)


@dataclass(frozen=True, eq=False)
class Poly:
    """``a_0 + a_1 X + ... + a_n X^n`` with ``coeffs[j] = a_j``.

    ``n`` is a structural bound, not the exact degree; trailing zeros
    are kept.  Equality and hashing ignore trailing zeros so that
    polynomials with different bounds compare as the same polynomial.
    """

    n: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree bound must be non-negative")
        coeffs = tuple(_scalar(c) for c in self.coeffs)
        if len(coeffs) > self.n + 1:
            if any(c != 0 for c in coeffs[self.n + 1 :]):
                raise DegreeMismatchError(
                    f"{len(coeffs) - 1}-degree coefficients do not fit bound n={self.n}"
                )
            coeffs = coeffs[: self.n + 1]
        coeffs = coeffs + (Fraction(0),) * (self.n + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def one(cls, n):
        return cls(n, (1,))

    @classmethod
    def monomial(cls, n, k, coeff=1):
        if k > n:
            raise DegreeMismatchError(f"X^{k} does not fit bound n={n}")
        return cls(n, (0,) * k + (coeff,))

    @property
    def is_exact(self):
        return all(is_exact(c) for c in self.coeffs)

    def padded(self, n):
        """Same polynomial with degree bound ``n``."""
        if n == self.n:
            return self
        return Poly(n, self.coeffs)

    def _trimmed(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self):
        return hash(self._trimmed())

    def __getitem__(self, j):
        return self.coeffs[j] if j <= self.n else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(self.n, other.n)
        return Poly(n, tuple(self[j] + other[j] for j in range(n + 1)))

    def __neg__(self):
        return Poly(self.n, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, Number):
            return NotImplemented
        s = _scalar(scalar)
        return Poly(self.n, tuple(s * c for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("X" if j == 1 else f"X^{j}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(f"{c}")
        return " + ".join(terms) if terms else "0"


def t_coefficient(k, h):
    """Coefficient ``k!/((k+1-h)! h!)`` of ``w^(k-h) X^h`` in ``T_w(X^k)``."""
    return Fraction(factorial(k), factorial(k + 1 - h) * factorial(h))


def t_apply(w, P):
    w = _scalar(w)
    out = [Fraction(0)] * (P.n + 1)
    for k, a in enumerate(P.coeffs):
        if a == 0:
            continue
        for h in range(k + 1):
            out[h] += a * t_coefficient(k, h) * w ** (k - h)
    return Poly(P.n, out)


def t_inv_apply(w, P):
    """Solve ``t_apply(w, Q) == P`` for ``Q`` from the top degree down."""
    w = _scalar(w)
    q = [Fraction(0)] * (P.n + 1)
    for k in range(P.n, -1, -1):
        acc = P.coeffs[k]
        for j in range(k + 1, P.n + 1):
            if q[j] != 0:
                acc -= t_coefficient(j, k) * w ** (j - k) * q[j]
        q[k] = acc
    return Poly(P.n, q)


def s_apply(u, P):
    """``P(X + u)`` expanded binomially."""
    u = _scalar(u)
    out = [Fraction(0)] * (P.n + 1)
    for k, a in enumerate(P.coeffs):
        if a == 0:
            continue
        for h in range(k + 1):
            out[h] += a * comb(k, h) * u ** (k - h)
    return Poly(P.n, out)
