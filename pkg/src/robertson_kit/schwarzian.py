"""Pre-Schwarzian/Schwarzian operators and hyperbolic sup-norm estimation.

The weighted quantities are (1-|z|^2)|P_f(z)| and (1-|z|^2)^2 |S_f(z)|,
the powers of the reciprocal unit-disk Poincare density.  Norms are
estimated by a dense polar scan clustered toward the scan radius followed
by golden-section refinement; the result is a certified lower estimate of
the supremum on the scanned region, with tail and scan-gap metadata.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .series import TruncatedSeries, chebyshev_radii
from .robertson import ClassParams, MemberSeries, SchwarzSpec, phi_series


class TailToleranceUnmet(ValueError):
    """The series tail at the requested scan radius cannot be certified."""


@dataclass(frozen=True)
class ScanOpts:
    """Polar-scan configuration for norm estimation.

    r_max defaults to 0.9995 for members with closed-form evaluators and
    0.95 for series-only members.
    """

    radial: int = 128
    angular: int = 256
    r_max: Optional[float] = None
    refine_tol: float = 1e-10
    tail_tol: float = 1e-6


@dataclass(frozen=True)
class NormEstimate:
    """Result of a weighted sup-norm scan.

    value is a lower estimate of the true supremum; value + scan_gap is an
    upper estimate on the scanned region.  weight_exponent is 1 for the
    pre-Schwarzian norm and 2 for the Schwarzian norm.
    """

    value: float
    argmax: complex
    weight_exponent: int
    r_max: float
    tail_error: float
    refinement_steps: int
    scan_gap: float

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "argmax": [self.argmax.real, self.argmax.imag],
            "weight_exponent": self.weight_exponent,
            "r_max": self.r_max,
            "tail_error": self.tail_error,
            "refinement_steps": self.refinement_steps,
            "scan_gap": self.scan_gap,
        }


def pre_schwarzian(member: MemberSeries) -> TruncatedSeries:
    """Series of P_f = f''/f'; closed-form members also evaluate exactly."""
    return member.p_series()


def schwarzian(member: MemberSeries) -> TruncatedSeries:
    """Series of S_f = P' - P^2/2, cached on the member."""
    if member._s_series is None:
        p = member.p_series()
        member._s_series = p.deriv() - p * p * 0.5
    return member._s_series


def schwarzian_via_phi(
    params: ClassParams, spec: SchwarzSpec, order: int
) -> TruncatedSeries:
    """S_f straight from the Schwarz data phi.

    S_f = 2 G1 (2 phi' + (2 - 2 G1) phi^2) / (2 (1 - z phi)^2), the form
    used in the norm-bound derivations; cross-checks the operator route.
    """
    phi = phi_series(spec, order)
    omega = TruncatedSeries(np.concatenate(([0.0 + 0.0j], phi.coeffs[:order])))
    num = phi.deriv() * 2 + phi * phi * (2 - 2 * params.g1)
    den = (1 - omega) * (1 - omega) * 2
    return (num * (2 * params.g1)) / den


def eval_s(member: MemberSeries, z, r_trunc: float = 0.95):
    """Schwarzian values, through the closed form when available."""
    if member.closed_form is not None:
        return member.closed_form.s(z)
    return schwarzian(member).eval_at(z, r_trunc)


def s_on_circle(member: MemberSeries, r: float, n_angles: int):
    if member.closed_form is not None:
        z = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
        return member.closed_form.s(z)
    return schwarzian(member).eval_on_circle(r, n_angles)


def weighted_value(member: MemberSeries, z, weight_exponent: int, r_trunc: float):
    """(1-|z|^2)^w |P_f| or |S_f| at a point or array."""
    zs = np.asarray(z, dtype=np.complex128)
    w = (1 - np.abs(zs) ** 2) ** weight_exponent
    if weight_exponent == 1:
        vals = member.eval_p(zs, r_trunc)
    else:
        vals = eval_s(member, zs, r_trunc)
    return w * np.abs(vals)


_INV_PHI = (math.sqrt(5) - 1) / 2


def golden_max(f: Callable[[float], float], a: float, b: float, tol: float):
    """Golden-section maximizer on [a, b]; returns (x, f(x), evals)."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    evals = 2
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
        evals += 1
    x = c if fc > fd else d
    return x, max(fc, fd), evals


def norm_estimate(
    member: MemberSeries, weight_exponent: int, opts: ScanOpts = ScanOpts()
) -> NormEstimate:
    """Estimate sup over |z| <= r_max of the weighted derivative modulus.

    Coarse scan on radial x angular polar nodes (radii clustered toward
    r_max), then alternating golden-section refinement in r and theta.
    Raises TailToleranceUnmet when a series-only member cannot certify the
    scan radius.
    """
    if weight_exponent not in (1, 2):
        raise ValueError("weight_exponent must be 1 or 2")
    r_max = opts.r_max
    if r_max is None:
        r_max = 0.9995 if member.closed_form is not None else 0.95
    if not 0 < r_max < 1:
        raise ValueError("r_max must lie in (0, 1)")

    tail_error = 0.0
    if member.closed_form is None:
        series = member.p_series() if weight_exponent == 1 else schwarzian(member)
        tail_error = series.tail_bound(r_max)
        if tail_error > opts.tail_tol:
            raise TailToleranceUnmet(
                f"series tail {tail_error:.3e} at r={r_max} above {opts.tail_tol:.1e}"
            )

    radii = np.append(chebyshev_radii(opts.radial, r_max), r_max)
    n_ang = opts.angular
    best = -math.inf
    best_r = radii[0]
    best_i_ang = 0
    per_radius_best = np.empty(radii.size)
    for j, r in enumerate(radii):
        if weight_exponent == 1:
            vals = np.abs(member.p_on_circle(r, n_ang))
        else:
            vals = np.abs(s_on_circle(member, r, n_ang))
        vals = vals * (1 - r * r) ** weight_exponent
        i = int(np.argmax(vals))
        per_radius_best[j] = vals[i]
        if vals[i] > best:
            best = float(vals[i])
            best_r = float(r)
            best_i_ang = i

    # local variation around the winning cell, as an upper-bound gap hint
    j_best = int(np.argmax(per_radius_best))
    neighbors = per_radius_best[max(0, j_best - 1) : j_best + 2]
    scan_gap = float(np.max(np.abs(neighbors - per_radius_best[j_best])))

    theta = 2 * math.pi * best_i_ang / n_ang
    dr = r_max / (opts.radial + 1)
    dth = 2 * math.pi / n_ang
    r_cur, th_cur, val_cur = best_r, theta, best
    steps = 0
    for _ in range(3):
        lo, hi = max(0.0, r_cur - dr), min(r_max, r_cur + dr)
        r_cur, v1, e1 = golden_max(
            lambda r: float(
                weighted_value(
                    member, r * np.exp(1j * th_cur), weight_exponent, r_max
                )
            ),
            lo,
            hi,
            opts.refine_tol,
        )
        th_cur, v2, e2 = golden_max(
            lambda t: float(
                weighted_value(
                    member, r_cur * np.exp(1j * t), weight_exponent, r_max
                )
            ),
            th_cur - dth,
            th_cur + dth,
            opts.refine_tol,
        )
        steps += e1 + e2
        if abs(v2 - val_cur) < opts.refine_tol:
            val_cur = max(val_cur, v1, v2)
            break
        val_cur = max(val_cur, v1, v2)
        dr /= 4
        dth /= 4

    return NormEstimate(
        value=float(val_cur),
        argmax=complex(r_cur * np.exp(1j * th_cur)),
        weight_exponent=weight_exponent,
        r_max=float(r_max),
        tail_error=float(tail_error),
        refinement_steps=steps,
        scan_gap=scan_gap,
    )


@dataclass(frozen=True)
class NehariCertificates:
    """Margins against the classical univalence thresholds.

    necessary_margin = 6 - ||S_f|| (negative would contradict univalence);
    sufficient_margin = 2 - ||S_f|| (positive certifies univalence);
    qc_k = ||S_f||/2 is the quasiconformal-extension constant, reported
    only when it does not exceed 1.
    """

    schwarzian_norm: NormEstimate
    necessary_margin: float
    sufficient_margin: float
    qc_k: Optional[float]

    def to_json(self) -> dict:
        return {
            "schwarzian_norm": self.schwarzian_norm.to_json(),
            "necessary_margin": self.necessary_margin,
            "sufficient_margin": self.sufficient_margin,
            "qc_k": self.qc_k,
        }


def nehari_certificates(
    member: MemberSeries, scan: ScanOpts = ScanOpts()
) -> NehariCertificates:
    est = norm_estimate(member, 2, scan)
    qc = est.value / 2
    return NehariCertificates(
        schwarzian_norm=est,
        necessary_margin=6 - est.value,
        sufficient_margin=2 - est.value,
        qc_k=qc if qc <= 1 else None,
    )
