"""XXZ q-Sturm-Liouville data (Pi, Phi), Askey-Wilson closed forms, Heine solves."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import heine
from .awop import QParam, aw_A, aw_D
from .heine import HeineSolution, SolverOptions
from .poly import Poly, cheb_decompose, elem_sym, from_cheb, poly_roots

QslSolution = HeineSolution


@dataclass(frozen=True)
class XxzParams:
    q: QParam
    a: tuple
    s: tuple | None = None

    def __post_init__(self):
        if len(self.a) % 2 or not self.a:
            raise ValueError("parameter vector must have even length 2N > 0")
        if self.s is not None:
            for aj, sj in zip(self.a, self.s):
                if abs(aj - self.q.power(-sj)) >= 1e-12 * max(1.0, abs(aj)):
                    raise ValueError("a_j != q^{-s_j}")

    @property
    def N(self) -> int:
        return len(self.a) // 2

    @classmethod
    def from_spins(cls, s, eta) -> XxzParams:
        q = QParam.from_eta(eta)
        s = tuple(complex(v) for v in s)
        return cls(q, tuple(q.power(-v) for v in s), s)

    @classmethod
    def from_a(cls, a, q) -> XxzParams:
        return cls(QParam.coerce(q), tuple(complex(v) for v in a))

    def spins(self) -> tuple:
        """s_j with a_j = q^{-s_j} (principal logarithm when not given)."""
        if self.s is not None:
            return self.s
        if any(v == 0 for v in self.a):
            raise ValueError("a_j = 0 has no spin representation")
        return tuple(cmath.log(v) / (-2j * self.q.eta) for v in self.a)


@dataclass(frozen=True)
class QslProblem:
    Pi: Poly
    Phi: Poly
    q: QParam
    n: int

    def __post_init__(self):
        N = self.Pi.degree
        if N < 2 or self.Phi.degree != N - 1:
            raise ValueError("need deg Pi = 1 + deg Phi = N >= 2")

    @property
    def N(self) -> int:
        return self.Pi.degree

    @classmethod
    def from_params(cls, params: XxzParams, n: int) -> QslProblem:
        Pi, Phi = build_pi_phi(params)
        return cls(Pi, Phi, params.q, n)


def build_pi_phi(params: XxzParams):
    """Polynomial coefficients (Pi, Phi) of the XXZ equation from a_1..a_2N."""
    N = params.N
    if N < 2:
        raise ValueError("N must be at least 2")
    q = params.q
    sig = elem_sym(params.a)
    pref = -(q.quarter ** (-N))
    t = np.zeros(N + 1, dtype=complex)
    t[0] = pref * (-1) ** N * sig[N]
    u = np.zeros(N, dtype=complex)
    phi_pref = -2 * pref / (q.half - 1 / q.half)
    for l in range(N):
        t[N - l] = pref * (-1) ** l * (sig[l] + sig[2 * N - l])
        u[N - l - 1] = phi_pref * (-1) ** l * (sig[l] - sig[2 * N - l])
    return from_cheb(t, "first"), from_cheb(u, "second")


def pi_phi_product_form(x, params: XxzParams):
    """Pointwise (Pi, Phi) from the Laurent-product expressions, x in (-1, 1)."""
    q, N = params.q, params.N
    x = np.asarray(x, dtype=complex)
    z = x + 1j * np.sqrt(1 - x * x)
    plus = np.ones_like(z)
    minus = np.ones_like(z)
    for aj in params.a:
        plus = plus * (1 - aj * z)
        minus = minus * (1 - aj / z)
    e_minus = z ** (-N) * plus
    e_plus = z**N * minus
    pref = q.quarter ** (-N)
    pi = -pref / 2 * (e_minus + e_plus)
    sin_t = (z - 1 / z) / 2j
    phi = 1j * pref / ((q.half - 1 / q.half) * sin_t) * (e_minus - e_plus)
    return pi, phi


class NotInImageError(ValueError):
    pass


def recover_params(Pi: Poly, Phi: Poly, q, tol=1e-8) -> np.ndarray:
    """The multiset a_1..a_2N with build_pi_phi(a) = (Pi, Phi)."""
    q = QParam.coerce(q)
    N = Pi.degree
    if N < 2 or Phi.degree != N - 1:
        raise ValueError("need deg Pi = 1 + deg Phi = N >= 2")
    t = cheb_decompose(Pi, "first")
    u = cheb_decompose(Phi, "second")
    pref = -(q.quarter ** (-N))
    phi_pref = -2 * pref / (q.half - 1 / q.half)
    sig = np.zeros(2 * N + 1, dtype=complex)
    sig[N] = t[0] * (-1) ** N / pref
    for l in range(N):
        plus = t[N - l] * (-1) ** l / pref
        minus = u[N - l - 1] * (-1) ** l / phi_pref
        sig[l] = (plus + minus) / 2
        sig[2 * N - l] = (plus - minus) / 2
    if abs(sig[0] - 1) > tol:
        raise NotInImageError(f"not in the image of build_pi_phi (sigma_0 = {sig[0]:.6g})")
    sig[0] = 1.0
    # prod (t - a_j) = sum_l (-1)^l sigma_l t^{2N-l}
    coeffs = np.array([(-1) ** l * sig[l] for l in range(2 * N + 1)])[::-1]
    return poly_roots(Poly(coeffs)).roots


def apply_L(problem: QslProblem, f: Poly) -> Poly:
    """Pi D_q^2 f + Phi A_q D_q f."""
    df = aw_D(f, problem.q)
    return problem.Pi * aw_D(df, problem.q) + problem.Phi * aw_A(df, problem.q)


def aw_eigenvalue(n: int, sigma4, q) -> complex:
    """lambda_n in  pi_2 D^2 y + pi_1 A D y + lambda_n y = 0  (N = 2)."""
    q = QParam.coerce(q).q
    if q == 1:
        raise ValueError("q = 1 is excluded")
    return -4 * q * (1 - q ** (-n)) * (1 - sigma4 * q ** (n - 1)) / (1 - q) ** 2


def _sin(v):
    return cmath.sin(v)


def aw_recurrence(n: int, s, eta, tiny=1e-12):
    """(A_n, C_n, b_n) of the monic recurrence  x p_n = p_{n+1} + b_n p_n + 4 A_{n-1} C_n p_{n-1}."""
    s = [complex(v) for v in s]
    if len(s) != 4:
        raise ValueError("need four spins")
    eta = complex(eta)
    sig1 = sum(s)

    def den(*args):
        vals = [_sin(v * eta) for v in args]
        if min(abs(v) for v in vals) < tiny:
            raise ZeroDivisionError(f"recurrence singular at n={n}")
        return np.prod(vals)

    num_a = _sin((n - 1 - sig1) * eta)
    for j in (1, 2, 3):
        num_a *= _sin((n - s[0] - s[j]) * eta)
    A = num_a / den(2 * n - 1 - sig1, 2 * n - sig1)
    if n == 0:
        C = 0j
    else:
        num_c = _sin(n * eta)
        for j in range(1, 4):
            for k in range(j + 1, 4):
                num_c *= _sin((n - 1 - s[j] - s[k]) * eta)
        C = num_c / den(2 * n - 1 - sig1, 2 * n - 2 - sig1)
    b = cmath.cos(2 * s[0] * eta) + 2 * A + 2 * C
    return complex(A), complex(C), complex(b)


def _recurrence_table(n, s, eta):
    a_list, c_list, b_list = [], [], []
    for k in range(n):
        A, C, b = aw_recurrence(k, s, eta)
        a_list.append(A)
        c_list.append(C)
        b_list.append(b)
    # off-diagonal products 4 A_{k-1} C_k for k = 1..n-1
    prods = [4 * a_list[k - 1] * c_list[k] for k in range(1, n)]
    return np.array(b_list), np.array(prods, dtype=complex)


def aw_poly(n: int, s, eta) -> Poly:
    """Monic Askey-Wilson polynomial p_n with a_j = q^{-s_j}, q = e^{2 i eta}."""
    b, prods = _recurrence_table(n, s, eta)
    p_prev, p = Poly([0.0]), Poly([1.0])
    for k in range(n):
        nxt = (Poly.x() - b[k]) * p
        if k >= 1:
            nxt = nxt - prods[k - 1] * p_prev
        p_prev, p = p, nxt
    return p


def aw_zeros(n: int, s, eta) -> np.ndarray:
    """Zeros of p_n as eigenvalues of the tridiagonal recurrence matrix."""
    if n == 0:
        return np.zeros(0)
    b, prods = _recurrence_table(n, s, eta)
    real = np.all(np.abs(b.imag) < 1e-12 * (1 + np.abs(b))) and np.all(
        (np.abs(prods.imag) < 1e-12 * (1 + np.abs(prods))) & (prods.real > 0)
    )
    if real:
        return np.sort(eigh_tridiagonal(b.real, np.sqrt(prods.real), eigvals_only=True))
    mat = np.diag(b) + np.diag(np.ones(n - 1), 1) + np.diag(prods, -1)
    z = np.linalg.eigvals(mat)
    return z[np.lexsort((z.imag, z.real))]


def orthogonality_window(s, eta, cap: int = 512) -> int:
    """Largest M with A_{k-1} C_k > 0 for 1 <= k <= M (capped)."""
    prev_a = aw_recurrence(0, s, eta)[0]
    m = 0
    for k in range(1, cap + 1):
        A, C, _ = aw_recurrence(k, s, eta)
        prod = prev_a * C
        if not (abs(prod.imag) <= 1e-12 * abs(prod) and prod.real > 0):
            break
        m = k
        prev_a = A
    return m


def heine_stieltjes_solve(problem: QslProblem, opts: SolverOptions = SolverOptions()):
    """Polynomial eigenfunctions y (monic, degree n) of Pi D^2 y + Phi A D y = r y.

    Returns (solutions, diagnostics). Solutions are deduplicated and never
    exceed Heine's bound C(N + n - 2, N - 2).
    """
    N, n, q = problem.N, problem.n, problem.q
    if q.near_root_of_unity(2 * (N + n)):
        raise ValueError("q is too close to a root of unity")
    extra = []
    if N == 2 and n > 0:
        try:
            a = recover_params(problem.Pi, problem.Phi, q)
            s = XxzParams.from_a(a, q).spins()
            extra.append(aw_zeros(n, s, q.eta))
        except (ValueError, ZeroDivisionError, ArithmeticError):
            pass
    return heine.solve(
        lambda f: apply_L(problem, f),
        n,
        N - 2,
        opts,
        extra_starts=extra,
        flagger=lambda sol: heine.root_flags(sol.roots),
    )
