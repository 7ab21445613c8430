"""Truncated-oscillator cross-check.

Builds ``q = (a + a^+)/sqrt2`` and ``p = (a - a^+)/(i sqrt2)`` on the
first ``N`` number states, exponentiates ``i(up + P(q))`` with
:func:`scipy.linalg.expm`, and compares vacuum expectations against the
group law and the closed-form state values.  Nothing here shares code
with :mod:`polyweyl.fock`.
"""

import warnings

import numpy as np
from scipy.linalg import expm

from .errors import DomainError
from .fock import StateSpec, evaluate
from .group import compose
from .regions import Region

__all__ = ["ladder", "weyl_matrix", "vacuum_expectation", "oracle_matrix_check",
           "TruncationWarning"]


class TruncationWarning(RuntimeWarning):
    """The truncated matrices have not converged at the requested size."""


def ladder(N):
    """Truncated ``(q, p)``."""
    a = np.diag(np.sqrt(np.arange(1, N)), 1)
    q = (a + a.T) / np.sqrt(2)
    p = (a - a.T) / (1j * np.sqrt(2))
    return q, p


def weyl_matrix(g, N):
    q, p = ladder(N)
    H = float(g.u) * p
    qk = np.eye(N)
    for c in g.P.coeffs:
        H = H + float(c) * qk
        qk = qk @ q
    return expm(1j * H)


def vacuum_expectation(*gs, N=64):
    """``<0| W(g_1) W(g_2) ... |0>`` in the truncated space."""
    M = np.eye(N, dtype=complex)
    for g in gs:
        M = M @ weyl_matrix(g, N)
    return complex(M[0, 0])


def oracle_matrix_check(n, g, h, N=64, tol=1e-3):
    """Compare truncated-matrix vacuum expectations with the exact layer.

    Checks (i) ``<W(g) W(h)>`` against ``<W(g o h)>`` and (ii) ``<W(g)>``
    against the closed-form state on ``[0, 1)``.  Convergence is judged
    by repeating the computation at ``2N``; a residual above ``tol``
    raises a :class:`TruncationWarning`.
    """
    if n not in (1, 2):
        raise DomainError(f"oracle supports n in (1, 2), not {n}")
    if g.n != n or h.n != n:
        raise DomainError("oracle elements must have the requested degree bound")
    if N < 2:
        raise DomainError("truncation must be at least 2")
    gh = compose(g, h)

    def run(size):
        return (vacuum_expectation(g, h, N=size), vacuum_expectation(gh, N=size),
                vacuum_expectation(g, N=size))

    prod, composed, single = run(N)
    prod2, composed2, single2 = run(2 * N)
    residual = max(abs(prod - prod2), abs(composed - composed2), abs(single - single2))
    if residual > tol:
        warnings.warn(
            f"truncation N={N} not converged: residual {residual:.3g} > {tol}",
            TruncationWarning,
            stacklevel=2,
        )
    formula = evaluate(StateSpec(n), Region.interval(0, 1), g)
    compose_err = abs(prod - composed)
    state_err = abs(single - formula)
    return {
        "n": n,
        "N": N,
        "compose": {"product": prod, "composed": composed, "abs_err": compose_err},
        "state": {"matrix": single, "formula": formula, "abs_err": state_err},
        "residual": residual,
        "tolerance": tol,
        "ok": compose_err <= tol and state_err <= tol and residual <= tol,
    }
