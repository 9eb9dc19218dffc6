"""Bethe residual evaluators and direct solvers (XXZ, general, classical)."""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from . import heine
from .heine import Diagnostics, SolverOptions
from .poly import Poly, poly_roots

SINGULAR = 1e-13
BOUNDARY_TOL = 1e-10
# sin ratios saturate for large |Im lambda|, so such iterates look converged
DIVERGENT = 30.0


@dataclass(frozen=True)
class BetheRoots:
    lambdas: np.ndarray
    x: np.ndarray
    residuals: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))
    flags: tuple = ()

    def __post_init__(self):
        if np.any(np.abs(np.cos(2 * self.lambdas) - self.x) > 1e-12 * np.maximum(1, np.abs(self.x))):
            raise ValueError("x_k != cos 2 lambda_k")

    @property
    def n(self) -> int:
        return len(self.lambdas)

    @property
    def max_residual(self) -> float:
        if self.residuals.size == 0:
            return 0.0
        if np.any(np.isnan(self.residuals)):
            return float("nan")
        return float(np.max(np.abs(self.residuals)))


def _boundary_flags(x):
    return tuple(
        "boundary" if min(abs(xk - 1), abs(xk + 1)) < BOUNDARY_TOL else "" for xk in x
    )


def extract_lambdas(y: Poly) -> BetheRoots:
    """lambda_k = arccos(x_k) / 2 on the principal branch for the roots x_k of y."""
    x = poly_roots(y).roots
    lam = 0.5 * np.arccos(x.astype(complex))
    return BetheRoots(lam, x, flags=_boundary_flags(x))


def _log_sum(values):
    """Sum of logs, or None when a factor is numerically zero."""
    values = np.asarray(values, dtype=complex)
    if values.size and np.min(np.abs(values)) < SINGULAR:
        return None
    return complex(np.sum(np.log(values)))


def _pair_log(lam, k, eta):
    """log of prod_{j != k} sin(l_k+l_j+eta) sin(l_k-l_j+eta) / (sin(l_k+l_j-eta) sin(l_k-l_j-eta))."""
    others = np.delete(lam, k)
    num = _log_sum(np.concatenate([np.sin(lam[k] + others + eta), np.sin(lam[k] - others + eta)]))
    den = _log_sum(np.concatenate([np.sin(lam[k] + others - eta), np.sin(lam[k] - others - eta)]))
    if num is None or den is None:
        return None
    return num - den


def _ratio_minus_one(log_lhs, log_rhs):
    if log_lhs is None or log_rhs is None:
        return complex("nan+nanj")
    return cmath.exp(log_lhs - log_rhs) - 1


def xxz_residuals(lambdas, s, eta) -> np.ndarray:
    """LHS_k / RHS_k - 1 of the XXZ Bethe system; NaN marks an indeterminate equation."""
    lam = np.asarray(lambdas, dtype=complex)
    s = np.asarray(s, dtype=complex)
    eta = complex(eta)
    out = np.empty(lam.size, dtype=complex)
    for k in range(lam.size):
        num = _log_sum(np.sin(lam[k] + s * eta))
        den = _log_sum(np.sin(lam[k] - s * eta))
        lhs = None if num is None or den is None else num - den
        out[k] = _ratio_minus_one(lhs, _pair_log(lam, k, eta))
    return out


def general_residuals(lambdas, Pi: Poly, Phi: Poly, eta) -> np.ndarray:
    """Residuals of the Bethe system attached to an arbitrary (Pi, Phi) pair."""
    lam = np.asarray(lambdas, dtype=complex)
    eta = complex(eta)
    x = np.cos(2 * lam)
    pv = Pi(x)
    fv = Phi(x) * cmath.sin(eta) * np.sin(2 * lam)
    out = np.empty(lam.size, dtype=complex)
    for k in range(lam.size):
        plus, minus = pv[k] + fv[k], pv[k] - fv[k]
        lhs = None
        if min(abs(plus), abs(minus)) >= SINGULAR:
            lhs = cmath.log(plus) - cmath.log(minus)
        out[k] = _ratio_minus_one(lhs, _pair_log(lam, k, eta))
    return out


def _cot(u):
    return np.cos(u) / np.sin(u)


def _xxz_log_system(lam, s, eta):
    """Wrapped log-residuals F and their Jacobian for the XXZ system."""
    n = lam.size
    F = np.empty(n, dtype=complex)
    J = np.zeros((n, n), dtype=complex)
    for k in range(n):
        lk = lam[k]
        others = np.delete(lam, k)
        idx = [j for j in range(n) if j != k]
        val = np.sum(np.log(np.sin(lk + s * eta)) - np.log(np.sin(lk - s * eta)))
        val -= np.sum(np.log(np.sin(lk + others + eta)) + np.log(np.sin(lk - others + eta))
                      - np.log(np.sin(lk + others - eta)) - np.log(np.sin(lk - others - eta)))
        # the branch integer is fixed by wrapping the phase into (-pi, pi]
        F[k] = complex(val.real, np.angle(np.exp(1j * val.imag)))
        ca, cb = _cot(lk + others + eta), _cot(lk - others + eta)
        cc, cd = _cot(lk + others - eta), _cot(lk - others - eta)
        J[k, k] = np.sum(_cot(lk + s * eta) - _cot(lk - s * eta)) - np.sum(ca + cb - cc - cd)
        J[k, idx] = -(ca - cb - cc + cd)
    return F, J


def _newton_lambda(lam, s, eta, tol, max_iter):
    it = 0
    with np.errstate(all="ignore"):
        F, J = _xxz_log_system(lam, s, eta)
        norm = np.max(np.abs(F))
        while it < max_iter and np.isfinite(norm) and norm > tol * 1e-2:
            try:
                step = np.linalg.solve(J, -F)
            except np.linalg.LinAlgError:
                break
            t = 1.0
            while t > 1e-6:
                cand = lam + t * step
                Fc, Jc = _xxz_log_system(cand, s, eta)
                nc = np.max(np.abs(Fc))
                if np.isfinite(nc) and nc < norm:
                    break
                t *= 0.5
            it += 1
            if t <= 1e-6:
                break
            lam, F, J, norm = cand, Fc, Jc, nc
    return lam, it


def bethe_newton_solve(s, eta, n: int, starts=None, opts: SolverOptions = SolverOptions()):
    """Direct Newton on the logarithmic XXZ Bethe system.

    ``starts`` are lambda-vectors; by default they come from x-space starts
    mapped through arccos / 2. Returns (solutions, Diagnostics) with
    solutions deduplicated modulo sign flips, permutations and pi-shifts
    (all of which leave x = cos 2 lambda invariant).
    """
    s = np.asarray(s, dtype=complex)
    eta = complex(eta)
    diag = Diagnostics()
    if n == 0:
        diag.starts_tried = diag.converged = 1
        empty = np.zeros(0, dtype=complex)
        return [BetheRoots(empty, empty, empty)], diag
    if starts is None:
        xs = heine.default_starts(n, opts.starts, opts.seed, opts.radius)
        starts = [0.5 * np.arccos(np.asarray(x, dtype=complex)) for x in xs]
    found: list[BetheRoots] = []
    for start in starts:
        diag.starts_tried += 1
        lam, it = _newton_lambda(np.asarray(start, dtype=complex), s, eta, opts.tolerance, opts.max_iter)
        res = xxz_residuals(lam, s, eta)
        if np.any(np.isnan(res)) or not np.max(np.abs(res)) < opts.tolerance:
            diag.note("no_convergence")
            continue
        if np.max(np.abs(lam.imag)) > DIVERGENT:
            diag.note("divergent")
            continue
        x = np.cos(2 * lam)
        if heine.root_flags(x, collision_tol=1e-8):
            diag.note("singular_configuration")
            continue
        diag.converged += 1
        sol = BetheRoots(lam, x, res, tuple("" for _ in x))
        if any(heine.multiset_distance(f.x, x) < opts.dedup_tol for f in found):
            diag.duplicates += 1
            continue
        found.append(sol)
    order = sorted(range(len(found)), key=lambda i: [(round(v.real, 10), round(v.imag, 10))
                                                     for v in np.sort_complex(found[i].x)])
    return [found[i] for i in order], diag


def newton_iterations_from(s, eta, start, opts: SolverOptions = SolverOptions()) -> int:
    """Iterations used by the direct solver from one start (consistency checks)."""
    return _newton_lambda(np.asarray(start, dtype=complex), np.asarray(s, dtype=complex),
                          complex(eta), opts.tolerance, opts.max_iter)[1]


def heine_ode_residuals(x, Pi: Poly, Phi: Poly) -> np.ndarray:
    """sum_{j != k} 1/(x_j - x_k) - Phi(x_k) / (2 Pi(x_k)) for each k."""
    x = np.asarray(x, dtype=complex)
    if x.size > 1:
        gaps = np.abs(x[:, None] - x[None, :])
        np.fill_diagonal(gaps, np.inf)
        if np.min(gaps) < 1e-12:
            raise ValueError("coincident points")
    pv = Pi(x)
    if np.any(np.abs(pv) < 1e-300):
        raise ValueError("Pi vanishes at a point")
    out = np.empty(x.size, dtype=complex)
    for k in range(x.size):
        out[k] = np.sum(1 / (np.delete(x, k) - x[k])) - Phi(x[k]) / (2 * pv[k])
    return out


def heine_ode_solve(Pi: Poly, Phi: Poly, n: int, opts: SolverOptions = SolverOptions()):
    """Polynomial solutions of Pi y'' + Phi y' = r y (r = minus the usual Van Vleck polynomial)."""
    N = Pi.degree
    if N < 1 or Phi.degree > N - 1:
        raise ValueError("need deg Phi <= deg Pi - 1")
    r_degree = max(N - 2, 0)
    return heine.solve(lambda f: Pi * f.deriv().deriv() + Phi * f.deriv(), n, r_degree, opts)
