"""Askey-Wilson divided-difference calculus on polynomials in x = cos(theta)."""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .poly import LaurentPoly, Poly


@dataclass(frozen=True)
class QParam:
    """Base q together with the square root used by the shift operators.

    ``half`` is q**(1/2). Built from ``eta`` it is exp(i eta) (so that
    q = exp(2 i eta)); built from ``q`` it is the principal square root.
    """

    q: complex
    half: complex

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if abs(self.half * self.half - self.q) > 1e-14 * max(1.0, abs(self.q)):
            raise ValueError("half does not square to q")

    @classmethod
    def from_q(cls, q) -> QParam:
        q = complex(q)
        return cls(q, cmath.sqrt(q))

    @classmethod
    def from_eta(cls, eta) -> QParam:
        half = cmath.exp(1j * complex(eta))
        return cls(half * half, half)

    @classmethod
    def coerce(cls, q) -> QParam:
        return q if isinstance(q, QParam) else cls.from_q(q)

    @property
    def eta(self) -> complex:
        return -1j * cmath.log(self.half)

    @property
    def quarter(self) -> complex:
        """q**(1/4) on the branch exp(i eta / 2)."""
        return cmath.exp(0.5j * self.eta)

    def power(self, e) -> complex:
        """q**e on the branch exp(2 i eta e)."""
        return cmath.exp(2j * self.eta * e)

    def inverse(self) -> QParam:
        return QParam(1 / self.q, 1 / self.half)

    def near_root_of_unity(self, max_order, tol=1e-6) -> bool:
        if abs(abs(self.q) - 1.0) > tol:
            return False
        return any(abs(self.q**k - 1.0) < tol for k in range(1, max_order + 1))


def eta_shift(f: Poly, q, direction: int = +1) -> LaurentPoly:
    """The Laurent polynomial f((q^{d/2} z + q^{-d/2}/z)/2), d = +1 or -1."""
    q = QParam.coerce(q)
    h = q.half if direction > 0 else 1 / q.half
    return f.to_laurent().substitute_scaled(h)


def aw_D(f: Poly, q) -> Poly:
    q = QParam.coerce(q)
    if f.degree < 1:
        return Poly([0.0])
    diff = eta_shift(f, q, +1) - eta_shift(f, q, -1)
    # (1 - x^2)^{1/2} = (z - 1/z)/(2i)
    quot = diff.divide_z_minus_zinv() * (2.0 / (q.half - 1 / q.half))
    return quot.to_poly()


def aw_A(f: Poly, q) -> Poly:
    q = QParam.coerce(q)
    avg = (eta_shift(f, q, +1) + eta_shift(f, q, -1)) * 0.5
    return avg.to_poly()


def phi_poly(n: int, a, q) -> Poly:
    """(a e^{i theta}, a e^{-i theta}; q)_n expanded in x."""
    q = QParam.coerce(q)
    out = Poly([1.0])
    for k in range(n):
        ak = a * q.q**k
        out = out * Poly([1 + ak * ak, -2 * ak])
    return out


def phi_alpha(x, alpha, a, q, tol=1e-16):
    """Pointwise (a e^{i theta}, a e^{-i theta}; q)_alpha for real or complex alpha.

    Uses (b; q)_alpha = (b; q)_inf / (b q^alpha; q)_inf, which needs |q| < 1.
    """
    from .weights import qpoch

    q = QParam.coerce(q)
    x = np.asarray(x, dtype=complex)
    z = x + 1j * np.sqrt(1 - x * x + 0j)
    qa = q.power(alpha)
    out = np.empty(x.shape, dtype=complex)
    for idx, zz in np.ndenumerate(z):
        val = 1.0 + 0j
        for b in (a * zz, a / zz):
            val *= qpoch(b, q.q, math.inf) / qpoch(b * qa, q.q, math.inf)
        out[idx] = val
    return out if out.ndim else complex(out)


def expand_in_phi(f: Poly, a, q) -> np.ndarray:
    """Coefficients c_n with f = sum_n c_n phi_n(x; a)."""
    if a == 0:
        raise ValueError("a must be nonzero")
    q = QParam.coerce(q)
    d = max(f.degree, 0)
    basis = np.zeros((d + 1, d + 1), dtype=complex)
    for n in range(d + 1):
        basis[: n + 1, n] = phi_poly(n, a, q).padded(d + 1)[: n + 1]
    cond = np.linalg.cond(basis)
    if cond > 1e12:
        warnings.warn(f"phi-basis expansion is ill-conditioned (cond={cond:.2e})", RuntimeWarning)
    return np.linalg.solve(basis, f.padded(d + 1))


def _gauss_chebyshev(m):
    k = np.arange(1, m + 1)
    return np.cos((2 * k - 1) * np.pi / (2 * m)), np.pi / m


def inner_product(f: Poly, g: Poly) -> complex:
    """<f, g> = int_{-1}^{1} f conj(g) (1 - x^2)^{-1/2} dx, exact for polynomials."""
    m = (max(f.degree, 0) + max(g.degree, 0)) // 2 + 1
    x, w = _gauss_chebyshev(m)
    return complex(w * np.sum(f(x) * np.conj(g(x))))


class QuadratureError(RuntimeError):
    pass


def chebyshev_weighted_integral(func, rtol=1e-10, m0=16, m_max=2**16):
    """int_{-1}^{1} func(x) (1 - x^2)^{-1/2} dx by Gauss-Chebyshev node doubling.

    Returns (value, node count). ``func`` must accept an array of nodes.
    """
    m = m0
    x, w = _gauss_chebyshev(m)
    vals = func(x)
    prev = w * np.sum(vals)
    while m < m_max:
        m *= 2
        x, w = _gauss_chebyshev(m)
        vals = func(x)
        cur = w * np.sum(vals)
        scale = max(abs(cur), w * np.sum(np.abs(vals)))
        if abs(cur - prev) <= rtol * scale:
            return complex(cur), m
        prev = cur
    raise QuadratureError(f"no convergence up to {m_max} nodes: {prev} vs {cur}")


LEGENDRE_MAX = 1024


def weighted_inner_product(f: Poly, g: Poly, w, rtol=1e-10) -> complex:
    """int_{-1}^{1} f conj(g) w dx for a pointwise-evaluable weight w.

    Gauss-Chebyshev doubling suits weights with inverse-square-root endpoint
    behaviour; a Gauss-Legendre ladder (up to LEGENDRE_MAX nodes) runs
    alongside it for weights that are smooth at x = +-1. The first rule whose
    successive estimates agree to ``rtol`` wins.
    """

    def plain(x):
        return f(x) * np.conj(g(x)) * w(x)

    m, prev_c, prev_l = 16, None, None
    while m <= 2**16:
        x, wc = _gauss_chebyshev(m)
        vals = plain(x) * np.sqrt(1 - x * x)
        cur_c = wc * np.sum(vals)
        if prev_c is not None and abs(cur_c - prev_c) <= rtol * max(abs(cur_c), wc * np.sum(np.abs(vals))):
            return complex(cur_c)
        prev_c = cur_c
        if m <= LEGENDRE_MAX:
            xl, wl = np.polynomial.legendre.leggauss(m)
            vals = wl * plain(xl)
            cur_l = np.sum(vals)
            if prev_l is not None and abs(cur_l - prev_l) <= rtol * max(abs(cur_l), np.sum(np.abs(vals))):
                return complex(cur_l)
            prev_l = cur_l
        m *= 2
    raise QuadratureError(f"no convergence up to {m // 2} nodes: last estimates {prev_c}, {prev_l}")


def aw_D_pointwise(h, x, q):
    """D_q applied to an arbitrary function of z at x = cos(theta) in (-1, 1).

    ``h`` takes z = e^{i theta} (and its q-shifts) and returns h-breve(z).
    """
    q = QParam.coerce(q)
    x = np.asarray(x, dtype=float)
    z = np.exp(1j * np.arccos(x))
    sin_t = (z - 1 / z) / 2j
    return (h(q.half * z) - h(z / q.half)) / (1j * (q.half - 1 / q.half) * sin_t)


def ibp_sides(f: Poly, g: Poly, q, rtol=1e-12):
    """Both sides of the Askey-Wilson integration-by-parts identity, 0 < q < 1.

    Returns (lhs, rhs) with lhs = <D_q f, g>.
    """
    q = QParam.coerce(q)
    lhs = inner_product(aw_D(f, q), g)
    s = (q.half + 1 / q.half) / 2
    boundary = (math.pi * q.half / (1 - q.q)) * (
        f(s) * np.conj(g(1.0)) - f(-s) * np.conj(g(-1.0))
    )

    def g_over_sin(zz):
        xx = (zz + 1 / zz) / 2
        return g(xx) / ((zz - 1 / zz) / 2j)

    def integrand(x):
        sin_t = np.sqrt(1 - x * x)
        return f(x) * np.conj(sin_t * aw_D_pointwise(g_over_sin, x, q))

    bulk = chebyshev_weighted_integral(integrand, rtol)[0]
    return lhs, complex(boundary - bulk)
