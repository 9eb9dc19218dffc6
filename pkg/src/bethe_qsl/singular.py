"""Indicial equation at the singular points and the auxiliary rho / phi bases."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .awop import QParam, phi_poly
from .poly import LaurentPoly, Poly
from .qsl import XxzParams, build_pi_phi

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class IndicialResult:
    """Exponents t = q^alpha at zeta_pivot, with indicial-function residuals.

    ``base_point_index`` is the 1-based pivot. ``complete`` records whether |a_j| <= 1 holds, which
    guarantees there are no other exponents.
    """

    base_point_index: int
    exponents: np.ndarray
    residual: np.ndarray
    complete: bool


def _pivot_index(params: XxzParams, pivot: int) -> int:
    if not 1 <= pivot <= len(params.a):
        raise IndexError(f"pivot must lie in 1..{len(params.a)}")
    return pivot - 1


def base_point(params: XxzParams, pivot: int) -> complex:
    """zeta_j = (a_j + 1/a_j) / 2 for the 1-based pivot j."""
    a = params.a[_pivot_index(params, pivot)]
    return (a + 1 / a) / 2


def indicial_function(t, params: XxzParams, pivot: int = 1) -> complex:
    """(1 - t) Phi(x*; a') with a'_pivot = t a_pivot / q and x* = (a'_pivot + 1/a'_pivot) / 2."""
    t = complex(t)
    if t == 0:
        raise ValueError("t = q^alpha must be nonzero")
    i = _pivot_index(params, pivot)
    shifted = list(params.a)
    shifted[i] = t * shifted[i] / params.q.q
    _, phi = build_pi_phi(XxzParams(params.q, tuple(shifted)))
    ap = shifted[i]
    return (1 - t) * complex(phi((ap + 1 / ap) / 2))


def indicial_exponents(params: XxzParams, pivot: int = 1) -> IndicialResult:
    """{1} together with q / (a_pivot a_j) for j != pivot, each residual-checked."""
    i = _pivot_index(params, pivot)
    q = params.q.q
    ap = params.a[i]
    if ap == 0:
        raise ValueError("pivot parameter must be nonzero")
    exps = [1.0 + 0j]
    for j, aj in enumerate(params.a):
        if j != i and aj != 0:
            exps.append(q / (ap * aj))
    exps = np.array(exps, dtype=complex)
    res = np.array([abs(indicial_function(t, params, pivot)) for t in exps])
    complete = all(abs(v) <= 1 for v in params.a)
    return IndicialResult(pivot, exps, res, complete)


def rho_basis(n: int, q) -> Poly:
    """(1 + z^2) (-q^{2-n} z^2; q^2)_{n-1} z^{-n} as a polynomial in x (z = e^{i theta})."""
    q = QParam.coerce(q).q
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Poly([1.0])
    lp = LaurentPoly.from_dict({0: 1.0, 2: 1.0})
    for k in range(n - 1):
        lp = lp * LaurentPoly.from_dict({0: 1.0, 2: q ** (2 - n + 2 * k)})
    lp = LaurentPoly(lp.coeffs, lp.low - n)
    if not lp.is_symmetric():
        raise ArithmeticError("rho_n is not symmetric in z <-> 1/z")
    return lp.to_poly()


def ophi_basis(n: int, q) -> Poly:
    """(q^{1/4} e^{i theta}, q^{1/4} e^{-i theta}; q^{1/2})_n expanded in x."""
    q = QParam.coerce(q)
    return phi_poly(n, q.quarter, QParam(q.half, q.quarter))
