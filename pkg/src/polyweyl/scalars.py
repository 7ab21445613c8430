"""Scalar helpers: exact rationals, half-integer powers, principal roots.

Exact work uses :class:`fractions.Fraction`.  Anything that needs an
irrational square root or a complex exponential falls back to Python
floats/complex numbers.
"""

import cmath
import math
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

__all__ = [
    "as_rational",
    "is_exact",
    "rat_sqrt_exact",
    "pow_half_int",
    "complex_principal_sqrt",
    "checked_complex",
]


def as_rational(x):
    """Coerce ``x`` to a :class:`Fraction` without losing exactness.

    Accepts ints, Fractions and strings such as ``"3/4"`` or ``"-2"``.
    Floats are rejected: silently turning ``0.1`` into a 55-bit
    dyadic fraction would break every exact identity downstream.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ValueError(f"not a rational literal: {x!r}") from None
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def is_exact(x):
    return isinstance(x, Rational) and not isinstance(x, bool)


def _isqrt_exact(m):
    r = math.isqrt(m)
    return r if r * r == m else None


def rat_sqrt_exact(q):
    """Return the rational square root of ``q`` or ``None`` if irrational."""
    q = as_rational(q)
    if q < 0:
        raise DomainError(f"square root of negative rational {q}")
    num = _isqrt_exact(q.numerator)
    if num is None:
        return None
    den = _isqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def pow_half_int(length, k):
    """``length ** (k/2)`` for a positive rational ``length``.

    The result is a Fraction whenever that is possible (``k`` even, or
    ``length`` a perfect rational square), otherwise a float.
    """
    length = as_rational(length)
    if length <= 0:
        raise DomainError(f"half-integer power needs a positive base, got {length}")
    k = int(k)
    if k % 2 == 0:
        return length ** (k // 2)
    root = rat_sqrt_exact(length)
    if root is not None:
        return root**k
    # sqrt of numerator and denominator separately keeps huge rationals finite
    val = math.sqrt(length.numerator) / math.sqrt(length.denominator)
    return val**k


def complex_principal_sqrt(z):
    """Principal square root (non-negative real part)."""
    z = checked_complex(z)
    if z == 0:
        raise DomainError("principal square root requested at 0")
    return cmath.sqrt(z)


def checked_complex(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex value {z}")
    return z
