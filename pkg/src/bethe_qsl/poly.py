"""Dense complex polynomials in x, Laurent polynomials in z = e^{i theta}, roots.

The two representations are tied together by x = (z + 1/z)/2: a Laurent
polynomial that is symmetric under z -> 1/z is a polynomial in x.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as npcheb
from numpy.polynomial import polynomial as nppoly


@dataclass(frozen=True)
class PolyOptions:
    zero_threshold: float = 1e-13
    root_tol: float = 1e-12
    max_iter: int = 200


DEFAULT_OPTIONS = PolyOptions()


class RepresentationError(ArithmeticError):
    """An exact operation left a remainder; signals an internal inconsistency."""


class RootFindingError(RuntimeError):
    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


def _trim(coeffs, threshold):
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    big = np.max(np.abs(c))
    if big == 0.0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(np.abs(c) > threshold * big)[0]
    return c[: keep[-1] + 1].copy()


class Poly:
    """Immutable polynomial in the monomial basis, ``coeffs[k]`` multiplies x**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, options: PolyOptions = DEFAULT_OPTIONS):
        c = _trim(coeffs, options.zero_threshold)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors
    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0.0, 1.0])

    @classmethod
    def monomial(cls, k):
        c = np.zeros(k + 1, dtype=complex)
        c[k] = 1.0
        return cls(c)

    @classmethod
    def chebyshev_t(cls, n):
        return cls(npcheb.cheb2poly(np.eye(n + 1)[n]))

    @classmethod
    def chebyshev_u(cls, n):
        return from_cheb(np.eye(n + 1)[n], kind="second")

    # basic properties
    @property
    def degree(self) -> int:
        if self.coeffs.size == 1 and self.coeffs[0] == 0:
            return -1
        return self.coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1])

    def is_zero(self) -> bool:
        return self.degree < 0

    def monic(self) -> Poly:
        return Poly(self.coeffs / self.coeffs[-1])

    def __call__(self, x):
        return nppoly.polyval(np.asarray(x, dtype=complex), self.coeffs)

    def deriv(self) -> Poly:
        return Poly(nppoly.polyder(self.coeffs))

    def padded(self, length) -> np.ndarray:
        out = np.zeros(length, dtype=complex)
        out[: self.coeffs.size] = self.coeffs
        return out

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        return Poly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(np.convolve(self.coeffs, other.coeffs))
        return Poly(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Poly(self.coeffs / complex(scalar))

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"Poly([{terms}])"

    def allclose(self, other, rtol=1e-10) -> bool:
        """Coefficient-wise comparison relative to the larger coefficient scale."""
        other = self._coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        a, b = self.padded(n), other.padded(n)
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
        return bool(np.max(np.abs(a - b)) <= rtol * scale)

    def to_laurent(self) -> LaurentPoly:
        t = cheb_decompose(self, "first")
        n = t.size - 1
        c = np.zeros(2 * n + 1, dtype=complex)
        c[n] = t[0]
        c[n + 1:] = t[1:] / 2
        c[:n] = t[1:][::-1] / 2
        return LaurentPoly(c, low=-n)


def cheb_decompose(f: Poly, kind: str = "first") -> np.ndarray:
    """Coefficients of f in the Chebyshev T (first) or U (second) basis."""
    t = np.asarray(npcheb.poly2cheb(f.coeffs), dtype=complex)
    if kind == "first":
        return t
    if kind != "second":
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    # T_0 = U_0, T_1 = U_1/2, T_k = (U_k - U_{k-2})/2
    tp = np.concatenate([t, [0.0, 0.0]])
    u = (tp[:-2] - tp[2:]) / 2
    u[0] = tp[0] - tp[2] / 2
    return u


def from_cheb(coeffs, kind: str = "first") -> Poly:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if kind == "second":
        n = c.size
        t = np.zeros(n + 2, dtype=complex)
        for k in range(n - 1, 0, -1):
            t[k] = 2 * c[k] + t[k + 2]
        t[0] = c[0] + t[2] / 2
        c = t[:n]
    elif kind != "first":
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    return Poly(npcheb.cheb2poly(c))


def elem_sym(values) -> np.ndarray:
    """Elementary symmetric functions (sigma_0 = 1, ..., sigma_m) of ``values``."""
    e = np.ones(1, dtype=complex)
    for v in np.atleast_1d(np.asarray(values, dtype=complex)):
        nxt = np.zeros(e.size + 1, dtype=complex)
        nxt[:-1] = e
        nxt[1:] += v * e
        e = nxt
    return e


def from_roots(roots, leading=1.0) -> Poly:
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    c = np.array([complex(leading)])
    for r in np.atleast_1d(np.asarray(roots, dtype=complex)):
        c = np.convolve(c, [-r, 1.0])
    return Poly(c)


# -- roots ---------------------------------------------------------------


@dataclass(frozen=True)
class ComplexRootSet:
    roots: np.ndarray
    tolerance: float

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


_EPS = np.finfo(float).eps


def _backward_ok(c, z, factor):
    bound = factor * _EPS * nppoly.polyval(np.abs(z), np.abs(c))
    return np.abs(nppoly.polyval(z, c)) <= bound


def _aberth(c, z, max_iter, tol):
    dc = nppoly.polyder(c)
    n = z.size
    active = np.ones(n, dtype=bool)
    for it in range(max_iter):
        pv = nppoly.polyval(z, c)
        done = _backward_ok(c, z, 4.0)
        active &= ~done
        if not active.any():
            return z, True, it
        dpv = nppoly.polyval(z, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dpv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            w = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(w)
        w[bad] = 1e-3 * (1 + np.abs(z[bad]))
        small = np.abs(w) <= tol * np.maximum(1.0, np.abs(z))
        z = np.where(active, z - w, z)
        active &= ~small
        if not active.any():
            return z, True, it + 1
    return z, False, max_iter


def _sort_roots(z):
    order = np.lexsort((np.round(z.imag, 12), np.round(z.real, 12)))
    return z[order]


def poly_roots(f: Poly, options: PolyOptions = DEFAULT_OPTIONS) -> ComplexRootSet:
    """All complex roots of f with multiplicity, sorted by (real, imag)."""
    if f.degree < 1:
        raise ValueError("constant polynomial has no roots")
    c = f.coeffs / f.coeffs[-1]
    n = f.degree
    # Roots at the origin are exact; strip them first.
    nzero = int(np.argmax(np.abs(c) > 0))
    c = c[nzero:]
    m = c.size - 1
    zs = [np.zeros(nzero, dtype=complex)]
    if m > 0:
        radius = np.abs(c[0]) ** (1.0 / m)
        angles = 2 * np.pi * np.arange(m) / m + 0.4
        z0 = radius * np.exp(1j * angles)
        z, ok, _ = _aberth(c, z0, options.max_iter, options.root_tol)
        if not ok or not _backward_ok(c, z, 64.0).all():
            comp = nppoly.polycompanion(c)
            z, ok, _ = _aberth(c, np.linalg.eigvals(comp).astype(complex), 20, options.root_tol)
            if not _backward_ok(c, z, 1e3).all():
                raise RootFindingError("root iteration did not converge", _sort_roots(z))
        zs.append(z)
    roots = _sort_roots(np.concatenate(zs))
    assert roots.size == n
    scale = np.max(np.abs(f.coeffs))
    achieved = float(np.max(np.abs(f(roots))) / scale)
    return ComplexRootSet(roots, achieved)


# -- Laurent polynomials -------------------------------------------------


class LaurentPoly:
    """Finite two-sided Laurent polynomial sum_k c_k z^k, stored densely from ``low``."""

    __slots__ = ("coeffs", "low")

    def __init__(self, coeffs, low: int = 0):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "low", int(low))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_dict(cls, mapping):
        if not mapping:
            return cls([0.0])
        lo, hi = min(mapping), max(mapping)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in mapping.items():
            c[k - lo] = v
        return cls(c, lo)

    @classmethod
    def from_poly(cls, f: Poly) -> LaurentPoly:
        return f.to_laurent()

    @property
    def high(self) -> int:
        return self.low + self.coeffs.size - 1

    def as_dict(self):
        return {self.low + i: complex(v) for i, v in enumerate(self.coeffs) if v != 0}

    def __getitem__(self, k):
        i = k - self.low
        if 0 <= i < self.coeffs.size:
            return complex(self.coeffs[i])
        return 0j

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return z ** self.low * nppoly.polyval(z, self.coeffs)

    def _aligned(self, other):
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        a = np.zeros(hi - lo + 1, dtype=complex)
        b = np.zeros(hi - lo + 1, dtype=complex)
        a[self.low - lo: self.low - lo + self.coeffs.size] = self.coeffs
        b[other.low - lo: other.low - lo + other.coeffs.size] = other.coeffs
        return a, b, lo

    def __add__(self, other):
        a, b, lo = self._aligned(other)
        return LaurentPoly(a + b, lo)

    def __sub__(self, other):
        a, b, lo = self._aligned(other)
        return LaurentPoly(a - b, lo)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly(np.convolve(self.coeffs, other.coeffs), self.low + other.low)
        return LaurentPoly(self.coeffs * complex(other), self.low)

    __rmul__ = __mul__

    def substitute_scaled(self, c) -> LaurentPoly:
        """z -> c z, i.e. coefficient k is multiplied by c**k."""
        k = np.arange(self.low, self.high + 1)
        return LaurentPoly(self.coeffs * complex(c) ** k, self.low)

    def divide_z_minus_zinv(self, rtol=1e-10) -> LaurentPoly:
        """Exact quotient by (z - 1/z); a remainder above ``rtol`` raises."""
        p = self.coeffs
        m = p.size - 1
        if m < 2:
            q = np.zeros(1, dtype=complex)
            rem = p
        else:
            q = np.zeros(m + 1, dtype=complex)
            for i in range(m, 1, -1):
                q[i - 2] = p[i] + q[i]
            rem = np.array([p[0] + q[0], p[1] + q[1]])
            q = q[: m - 1]
        scale = max(np.max(np.abs(p)), 1e-300)
        if np.max(np.abs(rem)) > rtol * scale:
            raise RepresentationError("Laurent division by z - 1/z left a remainder")
        # z^low * P(z) / (z^2 - 1) * z
        return LaurentPoly(q, self.low + 1)

    def is_symmetric(self, rtol=1e-10) -> bool:
        a, b, _ = self._aligned(LaurentPoly(self.coeffs[::-1], -self.high))
        scale = max(np.max(np.abs(a)), 1e-300)
        return bool(np.max(np.abs(a - b)) <= rtol * scale)

    def to_poly(self, rtol=1e-10) -> Poly:
        """Convert a z <-> 1/z symmetric Laurent polynomial to a polynomial in x."""
        if not self.is_symmetric(rtol):
            raise RepresentationError("Laurent polynomial is not symmetric under z -> 1/z")
        n = max(self.high, -self.low, 0)
        t = np.zeros(n + 1, dtype=complex)
        t[0] = self[0]
        for k in range(1, n + 1):
            t[k] = self[k] + self[-k]
        return Poly(npcheb.cheb2poly(t))
