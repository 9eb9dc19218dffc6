"""q-shifted factorials, q-Gamma, complex log-Gamma and the spin-chain weights."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .awop import QParam

# Lanczos coefficients for g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)

TAIL_CUTOFF = 1e-16


@dataclass(frozen=True)
class QPochhammer:
    """(a; q)_n with the relative truncation bound for n = inf."""

    a: complex
    q: complex
    n: float
    value: complex
    tail_bound: float


def _log_qpoch_inf(a, q):
    """log (a; q)_inf summed termwise, plus the number of factors used and tail bound."""
    a, q = complex(a), complex(q)
    aq = abs(a)
    if aq == 0:
        return 0j, 0, 0.0
    lq = abs(q)
    if aq < TAIL_CUTOFF:
        count = 0
    elif lq == 0:
        count = 1
    else:
        count = max(0, math.ceil(math.log(TAIL_CUTOFF / aq) / math.log(lq))) + 1
    k = np.arange(count)
    terms = a * q**k
    total = complex(np.sum(np.log1p(-terms)))
    rest = aq * lq**count
    # |log prod_{k >= K}(1 - a q^k)| <= 2 |a q^K| / (1 - |q|) once |a q^K| <= 1/2
    tail = math.expm1(2 * rest / (1 - lq))
    return total, count, tail


def qpoch_full(a, q, n=math.inf) -> QPochhammer:
    a, q = complex(a), complex(q)
    if n == math.inf:
        if abs(q) >= 1:
            raise ValueError("(a; q)_inf needs |q| < 1")
        logv, _, tail = _log_qpoch_inf(a, q)
        return QPochhammer(a, q, n, cmath.exp(logv), tail)
    if n < 0 or int(n) != n:
        raise ValueError("n must be a nonnegative integer or inf")
    val = 1.0 + 0j
    for k in range(int(n)):
        val *= 1 - a * q**k
    return QPochhammer(a, q, n, val, 0.0)


def qpoch(a, q, n=math.inf) -> complex:
    """(a; q)_n for integer n >= 0 or n = inf."""
    return qpoch_full(a, q, n).value


def q_gamma(y, q, pole_tol=1e-10) -> complex:
    """(1 - q)^{1 - y} (q; q)_inf / (q^y; q)_inf for 0 < q < 1."""
    q = float(q)
    if not 0 < q < 1:
        raise ValueError("q must lie in (0, 1)")
    y = complex(y)
    qy = cmath.exp(y * math.log(q))
    # poles where q^{y + m} = 1
    m = round(-y.real)
    if m >= 0 and abs(1 - qy * q**m) < pole_tol:
        raise ValueError(f"q_gamma pole at y = {y}")
    logv = (1 - y) * math.log1p(-q) + _log_qpoch_inf(q, q)[0] - _log_qpoch_inf(qy, q)[0]
    return cmath.exp(logv)


def _lanczos(z):
    z = z - 1
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z): Lanczos on Re z >= 1/2, reflection elsewhere."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise ValueError(f"log_gamma pole at z = {z.real:g}")
    if z.real >= 0.5:
        return _lanczos(z)
    val = math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _lanczos(1 - z)
    # the branch is fixed by log Gamma(z) = log Gamma(z + m) - sum log(z + k)
    m = math.ceil(0.5 - z.real)
    ref = _lanczos(z + m) - sum(cmath.log(z + k) for k in range(m))
    turns = round((ref.imag - val.imag) / (2 * math.pi))
    return complex(val.real, val.imag + 2 * math.pi * turns)


def _check_unit_q(params):
    q = params.q.q
    if abs(q.imag) > 1e-15 or not 0 < q.real < 1:
        raise ValueError("the XXZ weight needs 0 < q < 1")
    return q.real


def xxz_weight(x, params) -> np.ndarray:
    """The XXZ weight on (-1, 1), with the k = 0 factor of the numerator cancelled.

    (e^{iN t}, e^{-iN t}; q^{N/2})_inf / sin(N t / 2) equals
    4 sin(N t / 2) |(q^{N/2} e^{iN t}; q^{N/2})_inf|^2, which removes the
    0/0 points of the defining quotient.
    """
    q = _check_unit_q(params)
    N = params.N
    p = q ** (N / 2)
    x = np.asarray(x, dtype=float)
    theta = np.arccos(x)
    out = np.empty(x.shape, dtype=complex)
    for idx, th in np.ndenumerate(theta):
        z = cmath.exp(1j * th)
        num = _log_qpoch_inf(p * z**N, p)[0] + _log_qpoch_inf(p / z**N, p)[0]
        den = sum(_log_qpoch_inf(a * z, q)[0] + _log_qpoch_inf(a / z, q)[0] for a in params.a)
        out[idx] = 4 * math.sin(N * th / 2) * cmath.exp(num - den)
    return out if out.ndim else complex(out)


def xxz_weight_forms(x, params):
    """The two one-sided product forms of the XXZ weight, for cross-checking."""
    q = _check_unit_q(params)
    N = params.N
    p = q ** (N / 2)
    theta = math.acos(float(x))
    z = cmath.exp(1j * theta)
    den = 1.0 + 0j
    for a in params.a:
        den *= qpoch(a * z, q) * qpoch(a / z, q)
    first = 2j * cmath.exp(-0.5j * N * theta) * qpoch(z**N, p) * qpoch(p / z**N, p) / den
    second = -2j * cmath.exp(0.5j * N * theta) * qpoch(p * z**N, p) * qpoch(z ** (-N), p) / den
    return first, second


def xxx_weight(y, s) -> float:
    """|prod Gamma(-s_l + i y) / Gamma(i N y)|^2 with 2N = len(s)."""
    y = float(y)
    if y == 0:
        raise ValueError("y must be nonzero")
    N = len(s) // 2
    logv = sum(log_gamma(-complex(sl) + 1j * y).real for sl in s) - log_gamma(1j * N * y).real
    return math.exp(2 * logv)


def xxx_weight_closed(y, L) -> float:
    """Closed forms of the XXX ground-configuration weight for even L (x = y^2)."""
    if L % 2 or L < 2:
        raise ValueError("L must be even and at least 2")
    y = float(y)
    x = y * y
    pi = math.pi
    if L % 4 == 2:
        m = L / 2 + 1
        return (m * pi ** (L + 1) * y * math.sinh(m * pi * y)
                / ((x + 0.25) ** L * math.sinh(pi * y) ** 2 * math.cosh(pi * y) ** L))
    h = L / 2
    return h * pi ** (L - 1) * y * math.sinh(h * pi * y) / ((x + 0.25) ** L * math.cosh(pi * y) ** L)


def orthogonality_check(params, maxdeg: int, rtol=1e-12) -> np.ndarray:
    """Normalized Gram matrix of p_0..p_maxdeg under the XXZ weight (N = 2).

    Entry (i, j) is <p_i, p_j> / sqrt(<p_i, p_i> <p_j, p_j>).
    """
    from .awop import weighted_inner_product
    from .qsl import aw_poly

    if params.N != 2:
        raise ValueError("orthogonality_check needs N = 2")
    q = QParam.coerce(params.q)
    s = params.spins()
    polys = [aw_poly(n, s, q.eta) for n in range(maxdeg + 1)]

    def w(x):
        return xxz_weight(x, params)

    gram = np.empty((maxdeg + 1, maxdeg + 1), dtype=complex)
    for i in range(maxdeg + 1):
        for j in range(i, maxdeg + 1):
            gram[i, j] = weighted_inner_product(polys[i], polys[j], w, rtol)
            gram[j, i] = np.conj(gram[i, j])
    d = np.sqrt(np.abs(np.diag(gram)))
    return gram / np.outer(d, d)
