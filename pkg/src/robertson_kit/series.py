"""Truncated complex power-series kernel.

Every analytic object in the toolkit (class members, their derivatives,
pre-Schwarzians, Schwarzians) is represented as a finite Taylor expansion
about 0.  Operations on series of mixed order truncate to the smallest
common order; all values are immutable and every operation is pure.
"""

from __future__ import annotations

import cmath
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER = 256
MAX_ORDER = 4096
TOL_DIV = 1e-14
COEFF_LIMIT = 1e100


class SeriesError(Exception):
    """Base class for series-kernel failures."""


class DivisionByZeroConstantTerm(SeriesError):
    """Division, log or pow needs a constant term bounded away from 0."""


class NonzeroInnerConstantTerm(SeriesError):
    """Composition a(b(z)) about 0 requires b(0) = 0."""


class RadiusExceeded(SeriesError):
    """Evaluation point lies outside the certified truncation radius."""


class CoefficientOverflow(SeriesError):
    """Coefficient magnitudes signal a divergent intermediate."""


def _as_coeff_array(coeffs: Iterable[complex]) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(c)):
        raise CoefficientOverflow("non-finite coefficient")
    return c


class TruncatedSeries:
    """Power series c0 + c1 z + ... + cN z^N of fixed order N >= 0.

    Supports ring arithmetic (+, -, *, /), calculus (deriv/integ),
    exp/log/pow, composition, point evaluation with a tail estimate, and
    JSON round-tripping.  Complex scalars mix freely with series.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex]):
        c = _as_coeff_array(coeffs).copy()
        c.flags.writeable = False
        self._c = c

    # -- basic structure ------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        head = np.array2string(self._c[:4], precision=6)
        return f"TruncatedSeries(order={self.order}, coeffs={head}...)"

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def constant(cls, value: complex, order: int) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series of z itself."""
        c = np.zeros(order + 1, dtype=np.complex128)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self.pad(order)
        return TruncatedSeries(self._c[: order + 1])

    def pad(self, order: int) -> "TruncatedSeries":
        if order <= self.order:
            return self
        c = np.zeros(order + 1, dtype=np.complex128)
        c[: self._c.size] = self._c
        return TruncatedSeries(c)

    def max_abs_diff(self, other: "TruncatedSeries") -> float:
        """Largest coefficient difference up to the common order."""
        n = min(self.order, other.order)
        return float(np.max(np.abs(self._c[: n + 1] - other._c[: n + 1])))

    # -- guards ----------------------------------------------------------

    def _guard(self) -> None:
        if np.max(np.abs(self._c)) > COEFF_LIMIT:
            raise CoefficientOverflow(
                "coefficient magnitude exceeds %.0e" % COEFF_LIMIT
            )

    @staticmethod
    def _coerce(value) -> "TruncatedSeries | None":
        if isinstance(value, TruncatedSeries):
            return value
        if isinstance(value, (int, float, complex, np.number)):
            return None  # scalar; handled inline
        return NotImplemented  # pragma: no cover

    def _common(self, other: "TruncatedSeries"):
        n = min(self.order, other.order)
        return self._c[: n + 1], other._c[: n + 1], n

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._guard()
            other._guard()
            a, b, _ = self._common(other)
            return TruncatedSeries(a + b)
        if isinstance(other, (int, float, complex, np.number)):
            c = self._c.copy()
            c[0] += other
            return TruncatedSeries(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._guard()
            other._guard()
            a, b, _ = self._common(other)
            return TruncatedSeries(a - b)
        if isinstance(other, (int, float, complex, np.number)):
            c = self._c.copy()
            c[0] -= other
            return TruncatedSeries(c)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._guard()
            other._guard()
            a, b, n = self._common(other)
            return TruncatedSeries(np.convolve(a, b)[: n + 1])
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return self * (1.0 / other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._guard()
        other._guard()
        a, b, n = self._common(other)
        if abs(b[0]) <= TOL_DIV:
            raise DivisionByZeroConstantTerm(
                "divisor constant term %r below tolerance" % b[0]
            )
        q = np.zeros(n + 1, dtype=np.complex128)
        q[0] = a[0] / b[0]
        for m in range(1, n + 1):
            q[m] = (a[m] - np.dot(b[1 : m + 1], q[m - 1 :: -1])) / b[0]
        return TruncatedSeries(q)

    def __rtruediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries.constant(other, self.order) / self
        return NotImplemented

    # -- calculus ----------------------------------------------------------

    def deriv(self) -> "TruncatedSeries":
        """Term-by-term derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries.zero(0)
        n = np.arange(1, self.order + 1)
        return TruncatedSeries(self._c[1:] * n)

    def integ(self, max_order: int = MAX_ORDER) -> "TruncatedSeries":
        """Antiderivative with constant term 0; order rises by one, capped."""
        n = np.arange(1, self.order + 2)
        c = np.concatenate(([0.0 + 0.0j], self._c / n))
        if c.size - 1 > max_order:
            c = c[: max_order + 1]
        return TruncatedSeries(c)

    # -- transcendental ------------------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """exp of the series via the recurrence (exp a)' = a' * exp a."""
        self._guard()
        c = self._c
        n = self.order
        e = np.zeros(n + 1, dtype=np.complex128)
        e[0] = cmath.exp(c[0])
        ja = np.arange(1, n + 1) * c[1:]
        for m in range(1, n + 1):
            e[m] = np.dot(ja[:m], e[m - 1 :: -1]) / m
        return TruncatedSeries(e)

    def log(self) -> "TruncatedSeries":
        """Principal-branch log; inverse of exp when defined."""
        self._guard()
        if abs(self._c[0]) <= TOL_DIV:
            raise DivisionByZeroConstantTerm("log needs a nonzero constant term")
        body = (self.deriv() / self).integ(max_order=self.order)
        return body + cmath.log(self._c[0])

    def pow(self, exponent: complex) -> "TruncatedSeries":
        """Principal-branch power a(z)**exponent = exp(exponent * log a)."""
        return (self.log() * exponent).exp()

    # -- composition -----------------------------------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Horner-style a(inner(z)); requires inner(0) = 0."""
        self._guard()
        inner._guard()
        if abs(inner._c[0]) > TOL_DIV:
            raise NonzeroInnerConstantTerm(
                "inner constant term %r exceeds tolerance" % inner._c[0]
            )
        n = min(self.order, inner.order)
        a = self._c
        b = inner._c[: n + 1]
        acc = np.zeros(n + 1, dtype=np.complex128)
        acc[0] = a[-1]
        for m in range(a.size - 2, -1, -1):
            acc = np.convolve(acc, b)[: n + 1]
            acc[0] += a[m]
        return TruncatedSeries(acc)

    # -- evaluation --------------------------------------------------------------

    def eval_at(self, z: complex, r_trunc: float):
        """Horner evaluation at one point (or array) inside |z| <= r_trunc < 1."""
        if not 0 <= r_trunc < 1:
            raise RadiusExceeded("truncation radius must lie in [0, 1)")
        zs = np.asarray(z, dtype=np.complex128)
        if np.any(np.abs(zs) > r_trunc * (1 + 1e-12)):
            raise RadiusExceeded("evaluation point outside radius %g" % r_trunc)
        acc = np.full_like(zs, self._c[-1])
        for m in range(self.order - 1, -1, -1):
            acc = acc * zs + self._c[m]
        if acc.ndim == 0:
            return complex(acc)
        return acc

    def eval_on_circle(self, r: float, n_angles: int) -> np.ndarray:
        """Values at z = r e^{2*pi*i*j/n} for j = 0..n-1, via one FFT.

        Folding the coefficients modulo n makes this O(N + n log n) per
        radius, which is what keeps dense polar norm scans cheap.
        """
        if not 0 <= r < 1:
            raise RadiusExceeded("circle radius must lie in [0, 1)")
        scaled = self._c * (r ** np.arange(self._c.size))
        pad = (-scaled.size) % n_angles
        folded = np.pad(scaled, (0, pad)).reshape(-1, n_angles).sum(axis=0)
        return np.fft.ifft(folded) * n_angles

    def tail_bound(self, r: float) -> float:
        """Geometric-ratio estimate of the dropped tail at radius r.

        Models |c_n| beyond the truncation as rho * q**(n - N).  The growth
        ratio q comes from the last max(8, N/4) coefficients, comparing the
        magnitude envelopes of the two halves of that window (robust to the
        phase oscillation of complex-coefficient series), clamped to
        [0, 1/r).  Exact for geometric coefficients.
        """
        if not 0 <= r < 1:
            raise RadiusExceeded("tail radius must lie in [0, 1)")
        if r == 0:
            return 0.0
        n = self.order
        w = min(max(8, (n + 1) // 4), n + 1)
        window = np.abs(self._c[n + 1 - w :])
        if window.max() == 0.0:
            return 0.0
        half = w // 2
        m1 = float(np.max(window[:half])) if half else 0.0
        m2 = float(np.max(window[half:]))
        if m1 <= 0.0:
            q = 1.0 / r  # no usable envelope; clamp makes this conservative
        else:
            q = (m2 / m1) ** (1.0 / (w - half))
        q = min(max(q, 0.0), (1.0 / r) * (1 - 1e-9)) * (1 + 1e-12)
        # back-extrapolated magnitude scale for the first dropped coefficient
        powers = q ** np.arange(w, 0, -1)
        rho = float(np.max(window * powers)) * (1 + 1e-12)
        return rho * r ** (n + 1) / (1.0 - q * r)

    # -- serialization ----------------------------------------------------------

    def to_pairs(self) -> list[list[float]]:
        """JSON form: list of [re, im] pairs, index = power."""
        return [[float(c.real), float(c.imag)] for c in self._c]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "TruncatedSeries":
        return cls([complex(p[0], p[1]) for p in pairs])


def chebyshev_radii(n: int, r_max: float) -> np.ndarray:
    """n radii in (0, r_max), ascending, clustered toward r_max."""
    j = np.arange(1, n + 1)
    return np.sort(r_max * np.cos((2 * j - 1) * np.pi / (4 * n)))
