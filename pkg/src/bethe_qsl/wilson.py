"""Wilson-operator sector: XXX data, Bethe residuals and cleared Heine solves.

Polynomials live in x = y^2. The shifts act as y -> y +/- i/2, i.e.
x -> x +/- i y - 1/4, so f((y + i/2)^2) is a polynomial in y whose even
part gives A f and whose odd part, divided by i y, gives W f.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as nppoly

from . import heine
from .heine import Diagnostics, HeineSolution, SolverOptions
from .poly import Poly, elem_sym

ZERO_ROOT_TOL = 1e-10
# every factor tends to 1 as |y| grows, so far-out iterates look converged;
# roots beyond DIVERGENT * (n + sum |s_l|) are rejected
DIVERGENT = 10.0
SINGULAR_POINT_TOL = 1e-6


def _shifted_in_y(f: Poly) -> np.ndarray:
    """Coefficients (in y) of f((y + i/2)^2)."""
    sub = np.array([-0.25, 1j, 1.0])
    out = np.zeros(1, dtype=complex)
    power = np.ones(1, dtype=complex)
    for c in f.coeffs:
        out = nppoly.polyadd(out, c * power)
        power = nppoly.polymul(power, sub)
    return out


def wilson_A(f: Poly) -> Poly:
    g = _shifted_in_y(f)
    return Poly(g[0::2])


def wilson_W(f: Poly) -> Poly:
    g = _shifted_in_y(f)
    odd = g[1::2]
    if odd.size == 0:
        return Poly([0.0])
    return Poly(odd / 1j)


def wilson_shift_pointwise(f: Poly, y, sign: int):
    """f((y + sign i/2)^2) evaluated directly."""
    y = np.asarray(y, dtype=complex)
    return f((y + sign * 0.5j) ** 2)


@dataclass(frozen=True)
class XxxParams:
    s: tuple

    def __post_init__(self):
        if len(self.s) % 2 or not self.s:
            raise ValueError("spin vector must have even length 2N > 0")
        if self.N % 2:
            raise ValueError("N must be even; use XxxParams.from_spins to pad")

    @property
    def N(self) -> int:
        return len(self.s) // 2

    @property
    def varsigma(self) -> np.ndarray:
        return elem_sym(self.s)

    @classmethod
    def from_spins(cls, s) -> XxxParams:
        """Pads an odd-N spin vector with two zero spins (they contribute y/y = 1)."""
        s = tuple(complex(v) for v in s)
        if len(s) % 2:
            raise ValueError("spin vector must have even length")
        if (len(s) // 2) % 2:
            s = s + (0j, 0j)
        return cls(s)


@dataclass(frozen=True)
class WilsonProblem:
    """P W^2 f + Q A W f = R f with P = x Pi and Q = x Phi."""

    P: Poly
    Q: Poly
    n: int
    cleared: bool = True
    spins: tuple = ()

    def __post_init__(self):
        if abs(self.P(0.0)) > 1e-12 * max(1.0, float(np.max(np.abs(self.P.coeffs)))):
            raise ValueError("P must vanish at x = 0")
        if self.P.degree < 2 or self.Q.degree > self.P.degree - 1:
            raise ValueError("need deg Q <= deg P - 1 and deg P >= 2")

    @classmethod
    def from_params(cls, params: XxxParams, n: int) -> WilsonProblem:
        Pi, xPhi = xxx_pi_phi(params)
        return cls(Poly.x() * Pi, xPhi, n, spins=params.s)

    @property
    def r_degree(self) -> int:
        return self.P.degree - 2


def xxx_pi_phi(params: XxxParams):
    """(Pi, x Phi) for the XXX data of a spin vector with N even."""
    N = params.N
    vs = params.varsigma
    sign = (-1) ** (N // 2)
    pi = np.zeros(N + 1, dtype=complex)
    xphi = np.zeros(N + 1, dtype=complex)
    pi[N] = 1.0
    for j in range(N):
        pi[N - j - 1] += (-1) ** j * (0.5 * vs[2 * j + 1] - vs[2 * j + 2])
        xphi[N - j] += (-1) ** j * (0.5 * vs[2 * j] - vs[2 * j + 1])
    xphi[0] += 0.5 * vs[2 * N]
    return Poly(sign * pi), Poly(sign * xphi)


def xxx_pi_phi_product_form(y, params: XxxParams):
    """Pointwise (Pi, Phi) at x = y^2 from the Gamma-ratio product expressions."""
    y = np.asarray(y, dtype=complex)
    sign = (-1) ** (params.N // 2)
    minus = np.ones_like(y)
    plus = np.ones_like(y)
    for sj in params.s:
        minus = minus * (y - 1j * sj)
        plus = plus * (y + 1j * sj)
    left = (y + 0.5j) * minus
    right = (y - 0.5j) * plus
    pi = sign / (2 * y) * (left + right)
    phi = sign / (2j * y * y) * (left - right)
    return pi, phi


@dataclass(frozen=True)
class GroundForm:
    """How a symmetric ground-state sector maps onto the Wilson problem."""

    L: int
    spin: float
    zero_root: bool
    n_ground: int
    extra_factor: bool = True


def xxx_ground_config(L: int, spin=0.5):
    """Spin vector and sector data for the sign-symmetric ground state of an L-site chain."""
    if L % 2 or L < 2:
        raise ValueError("L must be even and at least 2")
    if spin <= 0 or (2 * spin) != int(2 * spin):
        raise ValueError("spin must be a positive half-integer")
    spin = float(spin)
    if L % 4 == 2:
        M = (L - 2) // 4
        if spin == 1:
            N = 2 * M + 1
            s = (0.0,) + (1.0,) * (2 * N - 1)
        else:
            N = 2 * M + 2
            s = (0.0, -1.0) + (spin,) * (2 * N - 2)
        form = GroundForm(L, spin, True, M)
    else:
        M = L // 4
        s = (spin,) * L
        form = GroundForm(L, spin, False, M)
    return XxxParams.from_spins(s), form


def _apply(problem: WilsonProblem, f: Poly) -> Poly:
    wf = wilson_W(f)
    return problem.P * wilson_W(wf) + problem.Q * wilson_A(wf)


def apply_wilson_L(problem: WilsonProblem, f: Poly) -> Poly:
    return _apply(problem, f)


def singular_points(spins) -> np.ndarray:
    """x-values where a factor of the Bethe system vanishes: y = +/- i s_l and y = +/- i/2."""
    pts = {complex(-(complex(v) ** 2)) for v in spins} | {-0.25 + 0j}
    return np.array(sorted(pts, key=lambda z: (z.real, z.imag)))


def _flagger(problem: WilsonProblem):
    points = singular_points(problem.spins)

    def flag(sol: HeineSolution):
        scale = float(np.max(np.abs(sol.y.coeffs)))
        flags = []
        if abs(sol.y(0.0)) < ZERO_ROOT_TOL * scale:
            flags.append("zero_root")
        # multiple roots are only resolved to about sqrt(tolerance)
        if sol.roots.size and np.min(np.abs(sol.roots[:, None] - points[None, :])) < SINGULAR_POINT_TOL:
            flags.append("singular_point")
        flags.extend(heine.root_flags(sol.roots, boundary=()))
        return tuple(flags)

    return flag


def xxx_heine_solve(problem: WilsonProblem, opts: SolverOptions = SolverOptions(), extra_starts=()):
    """Monic f of degree n with P W^2 f + Q A W f = R f; returns (solutions, Diagnostics)."""
    return heine.solve(
        lambda f: _apply(problem, f),
        problem.n,
        problem.r_degree,
        opts,
        extra_starts=extra_starts,
        flagger=_flagger(problem),
    )


def display_normalization(P: Poly, Q: Poly, max_den=10**6) -> float:
    """Smallest scalar making (P, Q) integral with a positive leading Q coefficient."""
    coeffs = np.concatenate([P.coeffs, Q.coeffs])
    if np.max(np.abs(coeffs.imag)) > 1e-12:
        raise ValueError("display normalization needs real data")
    den = 1
    for c in coeffs.real:
        den = math.lcm(den, Fraction(float(c)).limit_denominator(max_den).denominator)
    return float(den) * (1.0 if Q.leading.real > 0 else -1.0)


def _log_factor(values):
    values = np.asarray(values, dtype=complex)
    if values.size and np.min(np.abs(values)) < 1e-13:
        return None
    return complex(np.sum(np.log(values)))


def xxx_residuals(yroots, s, extra_factor: bool = False) -> np.ndarray:
    """LHS_k / RHS_k - 1 of the rational Bethe system; NaN marks indeterminate entries.

    With ``extra_factor`` the left side carries (y_k - i/2)/(y_k + i/2) as in
    the system satisfied by zeros of the Wilson-problem solutions.
    """
    y = np.asarray(yroots, dtype=complex)
    s = np.asarray(s, dtype=complex)
    out = np.empty(y.size, dtype=complex)
    for k in range(y.size):
        yk = y[k]
        others = np.delete(y, k)
        num = [yk + 1j * s]
        den = [yk - 1j * s]
        if extra_factor:
            num.append([yk - 0.5j])
            den.append([yk + 0.5j])
        ln = _log_factor(np.concatenate(num))
        ld = _log_factor(np.concatenate(den))
        rn = _log_factor(np.concatenate([yk - others + 1j, yk + others + 1j]))
        rd = _log_factor(np.concatenate([yk - others - 1j, yk + others - 1j]))
        if None in (ln, ld, rn, rd):
            out[k] = complex("nan+nanj")
        else:
            out[k] = np.exp((ln - ld) - (rn - rd)) - 1
    return out


def _log_system(y, s, extra):
    n = y.size
    F = np.empty(n, dtype=complex)
    J = np.zeros((n, n), dtype=complex)
    for k in range(n):
        yk = y[k]
        others = np.delete(y, k)
        idx = [j for j in range(n) if j != k]
        a, b = yk - others + 1j, yk + others + 1j
        c, d = yk - others - 1j, yk + others - 1j
        val = np.sum(np.log(yk + 1j * s) - np.log(yk - 1j * s))
        jkk = np.sum(1 / (yk + 1j * s) - 1 / (yk - 1j * s))
        if extra:
            val += np.log(yk - 0.5j) - np.log(yk + 0.5j)
            jkk += 1 / (yk - 0.5j) - 1 / (yk + 0.5j)
        val -= np.sum(np.log(a) + np.log(b) - np.log(c) - np.log(d))
        F[k] = complex(val.real, np.angle(np.exp(1j * val.imag)))
        J[k, k] = jkk - np.sum(1 / a + 1 / b - 1 / c - 1 / d)
        J[k, idx] = -(-1 / a + 1 / b + 1 / c - 1 / d)
    return F, J


def _newton_y(y, s, extra, tol, max_iter):
    it = 0
    with np.errstate(all="ignore"):
        F, J = _log_system(y, s, extra)
        norm = np.max(np.abs(F))
        while it < max_iter and np.isfinite(norm) and norm > tol * 1e-2:
            try:
                step = np.linalg.solve(J, -F)
            except np.linalg.LinAlgError:
                break
            t = 1.0
            while t > 1e-6:
                cand = y + t * step
                Fc, Jc = _log_system(cand, s, extra)
                nc = np.max(np.abs(Fc))
                if np.isfinite(nc) and nc < norm:
                    break
                t *= 0.5
            it += 1
            if t <= 1e-6:
                break
            y, F, J, norm = cand, Fc, Jc, nc
    return y, it


def xxx_newton_solve(s, n: int, starts=None, extra_factor: bool = True,
                     opts: SolverOptions = SolverOptions(), radius=None):
    """Direct Newton on the rational Bethe system in y.

    Solutions are deduplicated on x = y^2 (sign flips and permutations);
    configurations with y_k = 0 or colliding x_k are discarded as singular.
    Returns (list of root arrays y, Diagnostics).
    """
    s = np.asarray(s, dtype=complex)
    diag = Diagnostics()
    if n == 0:
        diag.starts_tried = diag.converged = 1
        return [np.zeros(0, dtype=complex)], diag
    if starts is None:
        rad = radius if radius is not None else opts.radius
        xs = heine.default_starts(n, opts.starts, opts.seed, rad)
        starts = [np.sqrt(np.asarray(x, dtype=complex)) for x in xs]
    found = []
    for start in starts:
        diag.starts_tried += 1
        y, _ = _newton_y(np.asarray(start, dtype=complex), s, extra_factor, opts.tolerance, opts.max_iter)
        res = xxx_residuals(y, s, extra_factor)
        if np.any(np.isnan(res)) or not np.max(np.abs(res)) < opts.tolerance:
            diag.note("no_convergence")
            continue
        if np.max(np.abs(y)) > DIVERGENT * (n + np.sum(np.abs(s))):
            diag.note("divergent")
            continue
        x = y * y
        if np.min(np.abs(y)) < 1e-8 or heine.root_flags(x, boundary=()):
            diag.note("singular_configuration")
            continue
        diag.converged += 1
        if any(heine.multiset_distance(f * f, x) < opts.dedup_tol for f in found):
            diag.duplicates += 1
            continue
        # canonical branch: Re y >= 0
        y = np.where((y.real < 0) | ((y.real == 0) & (y.imag < 0)), -y, y)
        found.append(y)
    found.sort(key=lambda v: [(round(z.real, 10), round(z.imag, 10)) for z in np.sort_complex(v * v)])
    return found, diag
