"""Closed-form sharp bounds: norms, pointwise Schwarzian, growth/distortion.

All bound formulas are driven by the order constant k = (1-beta)cos(alpha).
The growth envelopes need the integrals of (1 -+ t^2)^{-k}, evaluated by
adaptive Gauss-Legendre quadrature with closed-form oracles at k = 1
(arctan / artanh) and k = 1/2 (arcsin) available for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .robertson import ClassParams, MemberSeries, ParamOutOfRange, SchwarzSpec
from .series import chebyshev_radii


class XiOutOfRange(ValueError):
    """|f''(0)|/(2k) exceeded 1; the input cannot be a class member."""


class QuadratureNotConverged(RuntimeError):
    """Adaptive quadrature hit the depth limit before the tolerance."""


# ---------------------------------------------------------------------------
# norm bounds and the pointwise Schwarzian bound
# ---------------------------------------------------------------------------


def pre_norm_bound(params: ClassParams) -> float:
    """Sharp bound 2k on the pre-Schwarzian norm of SP0 members."""
    return 2 * params.k


def schwarzian_norm_bound(params: ClassParams) -> float:
    """The bound 2k(2-k) on the Schwarzian norm of SP0 members.

    Its derivation replaces |1 - G1| by 1 - |G1|, which is only valid at
    alpha = 0; for alpha != 0 the toolkit treats violations as findings.
    """
    return 2 * params.k * (2 - params.k)


def xi_of_member(member: MemberSeries) -> float:
    """xi = |phi(0)| = |f''(0)| / (2k), the normalized initial coefficient."""
    xi = abs(complex(member.f_prime.coeffs[1])) / (2 * member.params.k)
    if xi > 1 + 1e-9:
        raise XiOutOfRange(f"xi = {xi} exceeds 1; not a class member")
    return min(xi, 1.0)


def schwarzian_pointwise_bound(params: ClassParams, xi: float, r: float) -> float:
    """Bound 2k(2 + k (xi+r)^2/(1-xi^2)) on (1-|z|^2)^2 |S_f(z)|."""
    if not 0 <= xi < 1:
        raise XiOutOfRange(f"xi={xi} outside [0, 1)")
    if not 0 <= r < 1:
        raise ParamOutOfRange(f"r={r} outside [0, 1)")
    k = params.k
    return 2 * k * (2 + k * (xi + r) ** 2 / (1 - xi**2))


def lemma_a_bound(phi0: float, r: float, variant: str = "literal") -> float:
    """Upper bound on |phi(z)|^2 / (1 - |phi(z)|^2) for Schwarz-type phi.

    variant "literal" uses the printed denominator (1-phi0)^2 (1-r^2);
    variant "corrected" uses the standard hyperbolic form with
    (1-phi0^2)(1-r^2), which is sharper and also certified by the suite.
    """
    if not 0 <= phi0 < 1:
        raise ParamOutOfRange(f"phi0={phi0} outside [0, 1)")
    if not 0 <= r < 1:
        raise ParamOutOfRange(f"r={r} outside [0, 1)")
    num = (phi0 + r) ** 2
    if variant == "literal":
        return num / ((1 - phi0) ** 2 * (1 - r**2))
    if variant == "corrected":
        return num / ((1 - phi0**2) * (1 - r**2))
    raise ParamOutOfRange(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadOpts:
    abs_tol: float = 1e-10
    max_depth: int = 40
    nodes: int = 16


@lru_cache(maxsize=8)
def _gl_nodes(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def adaptive_gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    opts: QuadOpts = QuadOpts(),
) -> float:
    """Integral of f on [a, b] by bisection-adaptive Gauss-Legendre panels."""
    x, w = _gl_nodes(opts.nodes)

    def panel(lo: float, hi: float) -> float:
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        return half * float(np.dot(w, f(mid + half * x)))

    def refine(lo: float, hi: float, whole: float, tol: float, depth: int) -> float:
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid)
        right = panel(mid, hi)
        if abs(left + right - whole) <= tol:
            return left + right
        if depth >= opts.max_depth:
            raise QuadratureNotConverged(
                f"panel [{lo}, {hi}] not converged at depth {depth}"
            )
        return refine(lo, mid, left, tol / 2, depth + 1) + refine(
            mid, hi, right, tol / 2, depth + 1
        )

    if a == b:
        return 0.0
    return refine(a, b, panel(a, b), opts.abs_tol, 0)


# ---------------------------------------------------------------------------
# growth / distortion envelopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Envelope:
    r: float
    lower: float
    upper: float
    kind: str  # "distortion" | "growth"


def distortion_envelope(params: ClassParams, r: float) -> Envelope:
    """(1+r^2)^{-k} <= |f'| <= (1-r^2)^{-k} for SP0 members."""
    if not 0 <= r < 1:
        raise ParamOutOfRange(f"r={r} outside [0, 1)")
    k = params.k
    return Envelope(
        r=r, lower=(1 + r * r) ** (-k), upper=(1 - r * r) ** (-k), kind="distortion"
    )


def growth_envelope(
    params: ClassParams, r: float, quad: QuadOpts = QuadOpts()
) -> Envelope:
    """int_0^r (1+t^2)^{-k} dt <= |f| <= int_0^r (1-t^2)^{-k} dt."""
    if not 0 <= r < 1:
        raise ParamOutOfRange(f"r={r} outside [0, 1)")
    k = params.k
    lower = adaptive_gauss_legendre(lambda t: (1 + t * t) ** (-k), 0.0, r, quad)
    upper = adaptive_gauss_legendre(lambda t: (1 - t * t) ** (-k), 0.0, r, quad)
    return Envelope(r=r, lower=lower, upper=upper, kind="growth")


def growth_oracle(params: ClassParams, r: float) -> Optional[Envelope]:
    """Closed-form growth envelope where it exists (k = 1 and k = 1/2)."""
    k = params.k
    if abs(k - 1) < 1e-15:
        return Envelope(r=r, lower=math.atan(r), upper=math.atanh(r), kind="growth")
    if abs(k - 0.5) < 1e-15:
        lower = math.asinh(r)  # int (1+t^2)^{-1/2}
        return Envelope(r=r, lower=lower, upper=math.asin(r), kind="growth")
    return None


@dataclass(frozen=True)
class EnvelopeReport:
    distortion_min_margin: float
    growth_min_margin: float
    worst_z_distortion: complex
    worst_z_growth: complex
    samples: int


def _is_sp0(member: MemberSeries) -> bool:
    if isinstance(member.provenance, SchwarzSpec):
        return member.provenance.vanishing_order() >= 2
    return member.closed_form is not None and member.closed_form.variant == "disk_symmetric"


def envelope_check(
    member: MemberSeries,
    radii: Optional[np.ndarray] = None,
    n_angles: int = 64,
    quad: QuadOpts = QuadOpts(),
) -> EnvelopeReport:
    """Margins of a member against both envelopes over a polar grid.

    Requires an SP0 member (f''(0) = 0).  Margins are
    min(upper - value, value - lower); the least one over the grid is
    reported per envelope together with where it occurred.
    """
    if not _is_sp0(member):
        raise ParamOutOfRange("envelope check requires an SP0 member (f''(0)=0)")
    if radii is None:
        radii = chebyshev_radii(24, 0.9)
    p = member.params
    best_d = math.inf
    best_g = math.inf
    z_d = 0j
    z_g = 0j
    for r in radii:
        if member.closed_form is not None:
            zs = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
            fp = np.abs(member.closed_form.fprime(zs))
        else:
            zs = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
            fp = np.abs(member.f_prime.eval_on_circle(r, n_angles))
        fv = np.abs(member.f.eval_on_circle(r, n_angles))
        denv = distortion_envelope(p, float(r))
        genv = growth_envelope(p, float(r), quad)
        dmarg = np.minimum(denv.upper - fp, fp - denv.lower)
        gmarg = np.minimum(genv.upper - fv, fv - genv.lower)
        i = int(np.argmin(dmarg))
        j = int(np.argmin(gmarg))
        if dmarg[i] < best_d:
            best_d, z_d = float(dmarg[i]), complex(zs[i])
        if gmarg[j] < best_g:
            best_g, z_g = float(gmarg[j]), complex(zs[j])
    return EnvelopeReport(
        distortion_min_margin=best_d,
        growth_min_margin=best_g,
        worst_z_distortion=z_d,
        worst_z_growth=z_g,
        samples=len(radii) * n_angles,
    )
