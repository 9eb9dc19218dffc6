"""Bilinear Newton solver for Heine-Stieltjes problems  L y = r y.

``L`` is any linear operator on polynomials raising degree by at most
``r_degree``. The unknowns are the n lower coefficients of a monic y and
the r_degree + 1 coefficients of r; the equations are the coefficients of
the defect L y - r y, so the system is square.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import comb
from typing import Callable

import numpy as np
from scipy.optimize import linear_sum_assignment

from .poly import Poly, RootFindingError, from_roots, poly_roots


@dataclass(frozen=True)
class SolverOptions:
    tolerance: float = 1e-10
    starts: int = 32
    seed: int = 0
    max_iter: int = 100
    radius: float = 1.2
    dedup_tol: float = 1e-6


@dataclass(frozen=True)
class HeineSolution:
    y: Poly
    r: Poly
    residual_norm: float
    newton_iterations: int
    roots: np.ndarray
    flags: tuple = ()
    error_estimate: float = 0.0

    @property
    def degenerate(self) -> bool:
        return bool(self.flags)


@dataclass
class Diagnostics:
    starts_tried: int = 0
    converged: int = 0
    duplicates: int = 0
    failures: dict = field(default_factory=dict)

    def note(self, reason):
        self.failures[reason] = self.failures.get(reason, 0) + 1

    def as_dict(self):
        return {
            "starts_tried": self.starts_tried,
            "converged": self.converged,
            "duplicates": self.duplicates,
            "failures": dict(sorted(self.failures.items())),
        }


INEXACT = 1e-8


class HeineBoundError(RuntimeError):
    pass


def heine_bound(n: int, r_degree: int) -> int:
    """Heine's upper bound on the number of admissible r for degree-n solutions."""
    return comb(n + r_degree, r_degree)


def operator_matrix(apply_op: Callable[[Poly], Poly], n: int, r_degree: int) -> np.ndarray:
    rows = n + r_degree + 1
    cols = []
    for i in range(n + 1):
        img = apply_op(Poly.monomial(i))
        if img.degree >= rows:
            raise ValueError(f"operator raises degree by more than {r_degree}")
        cols.append(img.padded(rows))
    return np.array(cols).T


def _defect(lmat, y, rho):
    return lmat @ y - np.convolve(rho, y)


def _jacobian(lmat, y, rho, n, r_degree):
    rows = lmat.shape[0]
    jac = np.zeros((rows, n + r_degree + 1), dtype=complex)
    for i in range(n):
        jac[:, i] = lmat[:, i]
        jac[i: i + r_degree + 1, i] -= rho
    for j in range(r_degree + 1):
        jac[j: j + n + 1, n + j] -= y
    return jac


def _initial_r(lmat, y, r_degree):
    rows = lmat.shape[0]
    a = np.zeros((rows, r_degree + 1), dtype=complex)
    for j in range(r_degree + 1):
        a[j: j + y.size, j] = y
    return np.linalg.lstsq(a, lmat @ y, rcond=None)[0]


def newton(lmat, n, r_degree, y0, tol, max_iter):
    """Damped Newton from monic y0 (length n + 1). Returns (y, rho, norm, iters)."""
    y = np.asarray(y0, dtype=complex).copy()
    rho = _initial_r(lmat, y, r_degree)
    res = _defect(lmat, y, rho)
    norm = np.max(np.abs(res))
    it = 0
    while it < max_iter:
        if norm <= tol:
            break
        jac = _jacobian(lmat, y, rho, n, r_degree)
        step = np.linalg.lstsq(jac, -res, rcond=None)[0]
        t = 1.0
        for _ in range(30):
            y_new = y.copy()
            y_new[:n] += t * step[:n]
            rho_new = rho + t * step[n:]
            res_new = _defect(lmat, y_new, rho_new)
            norm_new = np.max(np.abs(res_new))
            if norm_new < norm or t < 1e-6:
                break
            t *= 0.5
        it += 1
        if not np.isfinite(norm_new) or (norm_new >= norm and t < 1e-6):
            break
        y, rho, res, norm = y_new, rho_new, res_new, norm_new
    # one polishing step once inside tolerance
    if norm <= tol:
        jac = _jacobian(lmat, y, rho, n, r_degree)
        step = np.linalg.lstsq(jac, -res, rcond=None)[0]
        y_new = y.copy()
        y_new[:n] += step[:n]
        rho_new = rho + step[n:]
        res_new = _defect(lmat, y_new, rho_new)
        if np.max(np.abs(res_new)) < norm:
            y, rho, norm = y_new, rho_new, np.max(np.abs(res_new))
    return y, rho, float(norm), it


def multiset_distance(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.size != b.size:
        return np.inf
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    i, j = linear_sum_assignment(cost)
    return float(np.max(cost[i, j]))


def default_starts(n, count, seed, radius, extra=()):
    """Root vectors: Chebyshev points, caller-supplied seeds, then random disk points."""
    starts = []
    k = np.arange(1, n + 1)
    starts.append(np.cos((2 * k - 1) * np.pi / (2 * n)).astype(complex))
    starts.extend(np.asarray(e, dtype=complex) for e in extra)
    rng = np.random.default_rng(seed)
    while len(starts) < count:
        rad = radius * np.sqrt(rng.uniform(size=n))
        ang = rng.uniform(0, 2 * np.pi, size=n)
        starts.append(rad * np.exp(1j * ang))
    return starts[:max(count, 1 + len(extra))]


def solve(
    apply_op,
    n: int,
    r_degree: int,
    opts: SolverOptions,
    extra_starts=(),
    flagger: Callable[[HeineSolution], tuple] | None = None,
):
    """Multistart Newton for L y = r y. Returns (solutions, Diagnostics)."""
    diag = Diagnostics()
    if n == 0:
        sol = HeineSolution(Poly([1.0]), Poly([0.0]), 0.0, 0, np.zeros(0, dtype=complex))
        diag.starts_tried = diag.converged = 1
        return [sol], diag
    lmat = operator_matrix(apply_op, n, r_degree)
    found: list[HeineSolution] = []
    found_u: list[np.ndarray] = []
    for start in default_starts(n, opts.starts, opts.seed, opts.radius, extra_starts):
        diag.starts_tried += 1
        y0 = from_roots(start).padded(n + 1)
        y, rho, norm, iters = newton(lmat, n, r_degree, y0, opts.tolerance, opts.max_iter)
        if not norm <= opts.tolerance:
            diag.note("no_convergence")
            continue
        diag.converged += 1
        ypoly = Poly(y)
        try:
            roots = poly_roots(ypoly).roots
        except RootFindingError:
            diag.note("root_finding")
            continue
        flags = []
        jac = _jacobian(lmat, y, rho, n, r_degree)
        sv = np.linalg.svd(jac, compute_uv=False)
        if sv[-1] == 0 or sv[0] / sv[-1] > 1e12:
            flags.append("degenerate")
        # forward error of the unknowns: near a multiple root the defect is
        # tiny while the coefficients are only good to about sqrt(tolerance)
        err = float(norm * np.sqrt(jac.shape[0]) / sv[-1]) if sv[-1] > 0 else np.inf
        if err > INEXACT:
            flags.append("inexact")
        sol = HeineSolution(ypoly, Poly(rho), norm, iters, roots, tuple(flags), err)
        if flagger is not None:
            sol = replace(sol, flags=tuple(flags) + tuple(flagger(sol)))
        unknowns = np.concatenate([y[:n], rho])
        dup = None
        for idx, (other, other_u) in enumerate(zip(found, found_u)):
            close = np.max(np.abs(other_u - unknowns)) <= max(opts.dedup_tol * max(1.0, np.max(np.abs(unknowns))),
                                                            2 * (err + other.error_estimate))
            if close or multiset_distance(other.roots, roots) < opts.dedup_tol:
                dup = idx
                break
        if dup is None:
            found.append(sol)
            found_u.append(unknowns)
        else:
            diag.duplicates += 1
            if norm < found[dup].residual_norm:
                found[dup] = sol
                found_u[dup] = unknowns
    found.sort(key=lambda s: (s.residual_norm, [(round(z.real, 10), round(z.imag, 10)) for z in s.roots]))
    bound = heine_bound(n, r_degree)
    if len(found) > bound:
        raise HeineBoundError(f"{len(found)} distinct solutions exceed Heine's bound {bound}")
    return found, diag


def root_flags(roots, boundary=(-1.0, 1.0), boundary_tol=1e-10, collision_tol=1e-8):
    flags = []
    for b in boundary:
        if np.any(np.abs(roots - b) < boundary_tol):
            flags.append("root_at_boundary")
            break
    if roots.size > 1:
        gaps = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(gaps, np.inf)
        if np.min(gaps) < collision_tol:
            flags.append("root_collision")
    return tuple(flags)
