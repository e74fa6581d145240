"""Radius of concavity and radius of convexity, with sharpness probes.

The concavity test operator for the parameter A_co in (1, 2] is

    T_f(z) = (2/(A_co - 1)) ((A_co + 1)/2 (1+z)/(1-z) - 1 - z f''(z)/f'(z)),

normalized so T_f(0) = 1.  The class radius is the largest R with
Re T_f > 0 on |z| < R for every member.  Two candidate radii are exposed:

* mode "paper": the printed quadratic (A+1-2k, -2(A+1+k), A-1), which
  rests on the falsified one-sided bound Re(z P_f) <= k r/(1-r);
* mode "corrected": the quadratic (A+3-4k, -2(A+1+2k), A-1) obtained by
  substituting the sharp subordination bound Re(z P_f) <= 2 k r/(1-r)
  (alpha = 0) and clearing denominators:
  (A+1)/2 (1-r)^2 - (1-r^2) - 2 k r (1+r) expands to
  ((A+3-4k) r^2 - 2 (A+1+2k) r + (A-1)) / 2.

The probe searches members and circles for the empirical radius at which
some member first loses Re T_f > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .robertson import (
    ClassParams,
    GridSpec,
    MemberSeries,
    ParamOutOfRange,
    SchwarzSpec,
    generate_member,
)
from .sampling import sample_schwarz_specs
from .series import DEFAULT_ORDER, chebyshev_radii


class RootNotBracketed(RuntimeError):
    """The quadratic failed its guaranteed sign change on [0, 1]."""


@dataclass(frozen=True)
class ConcavitySetting:
    """The Co(A) family parameter; distinct from the subordination constant."""

    a_co: float

    def __post_init__(self):
        if not 1 < self.a_co <= 2:
            raise ParamOutOfRange(f"A_co={self.a_co} outside (1, 2]")


@dataclass(frozen=True)
class RadiusResult:
    value: float
    method: str  # "closed_form" | "bisection" | "formula_degenerate"
    residual: float
    mode: str
    degenerate: bool = False
    margin: Optional[float] = None
    note: str = ""

    def to_json(self) -> dict:
        def clean(x: float):
            return x if math.isfinite(x) else None

        d = {
            "value": clean(self.value),
            "method": self.method,
            "residual": clean(self.residual),
            "mode": self.mode,
            "degenerate": self.degenerate,
        }
        if self.margin is not None:
            d["margin"] = self.margin
        if self.note:
            d["note"] = self.note
        return d


# ---------------------------------------------------------------------------
# the concavity operator
# ---------------------------------------------------------------------------


def t_values(member: MemberSeries, setting: ConcavitySetting, z, r_trunc=0.95):
    """T_f at a point or array of points."""
    a = setting.a_co
    zs = np.asarray(z, dtype=np.complex128)
    p = member.eval_p(zs, r_trunc)
    return (2 / (a - 1)) * ((a + 1) / 2 * (1 + zs) / (1 - zs) - 1 - zs * p)


def t_operator(
    member: MemberSeries, setting: ConcavitySetting, z: complex, r_trunc=0.95
) -> complex:
    return complex(t_values(member, setting, z, r_trunc))


def _t_on_circle(member: MemberSeries, setting: ConcavitySetting, r, n_angles):
    a = setting.a_co
    zs = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
    pv = member.p_on_circle(r, n_angles)
    return (2 / (a - 1)) * ((a + 1) / 2 * (1 + zs) / (1 - zs) - 1 - zs * pv), zs


# ---------------------------------------------------------------------------
# radius of concavity
# ---------------------------------------------------------------------------


def phi_quadratic(
    params: ClassParams, setting: ConcavitySetting, mode: str = "paper"
) -> tuple[float, float, float]:
    """Coefficients (a, b, c) of the radius quadratic Phi(r) = a r^2 + b r + c."""
    a_co, k = setting.a_co, params.k
    if mode == "paper":
        return (a_co + 1 - 2 * k, -2 * (a_co + 1 + k), a_co - 1)
    if mode == "corrected":
        return (a_co + 3 - 4 * k, -2 * (a_co + 1 + 2 * k), a_co - 1)
    raise ParamOutOfRange(f"unknown mode {mode!r}")


def phi_value(coeffs: tuple[float, float, float], r) -> np.ndarray:
    a, b, c = coeffs
    return (a * r + b) * r + c


def radius_concavity(
    params: ClassParams, setting: ConcavitySetting, mode: str = "paper"
) -> RadiusResult:
    """Smaller root of the radius quadratic, cross-checked by bisection.

    Phi(0) = A-1 > 0 and Phi(1) < 0 in both modes, so the root is unique
    in (0, 1); the closed form uses the cancellation-free q-formula and
    positivity of Phi on [0, root) is spot-checked at 1000 samples.
    """
    a, b, c = phi_quadratic(params, setting, mode)
    disc = b * b - 4 * a * c
    if disc < 0 or phi_value((a, b, c), 1.0) >= 0:
        raise RootNotBracketed(f"no sign change for mode={mode}, {params}, {setting}")
    root = 2 * c / (-b + math.sqrt(disc))

    lo, hi = 0.0, 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if phi_value((a, b, c), mid) > 0:
            lo = mid
        else:
            hi = mid
    if abs(root - 0.5 * (lo + hi)) > 1e-12:
        raise RootNotBracketed(
            f"closed form {root} disagrees with bisection {0.5 * (lo + hi)}"
        )

    samples = np.linspace(0.0, root, 1000, endpoint=False)
    if np.any(phi_value((a, b, c), samples) <= 0):
        raise RootNotBracketed("Phi not positive left of the computed root")
    return RadiusResult(
        value=float(root),
        method="closed_form",
        residual=abs(float(phi_value((a, b, c), root))),
        mode=mode,
    )


# ---------------------------------------------------------------------------
# radius of convexity
# ---------------------------------------------------------------------------


def radius_convexity(
    params: ClassParams, mode: str = "derived_bound", characterization: str = "corrected"
) -> RadiusResult:
    """Candidate radii for Re(1 + z f''/f') > 0 over the class.

    mode "paper_literal" reproduces the printed formula 1/(k-1), which is
    non-positive (or divides by zero) for the entire admissible range
    k <= 1 and is returned flagged degenerate, for documentation only.
    mode "derived_bound" returns the largest r in (0, 1] keeping the lower
    envelope 1 - c k r/(1+r) positive, where c is 1 for the printed
    characterization and 2 for the corrected one; since c k <= 2 this is
    the whole disk, reported with the boundary margin 1 - c k / 2.
    """
    k = params.k
    if mode == "paper_literal":
        if abs(k - 1) < 1e-15:
            return RadiusResult(
                value=math.inf,
                method="formula_degenerate",
                residual=math.nan,
                mode=mode,
                degenerate=True,
                note="division by zero at k = 1",
            )
        value = 1 / (k - 1)
        return RadiusResult(
            value=value,
            method="formula_degenerate",
            residual=math.nan,
            mode=mode,
            degenerate=value <= 0 or value > 1,
            note="non-positive for every admissible k <= 1",
        )
    if mode == "derived_bound":
        c = 1.0 if characterization == "paper" else 2.0
        ck = c * k
        value = 1.0 if ck <= 2 else min(1.0, 1 / (ck - 1))
        return RadiusResult(
            value=value,
            method="closed_form",
            residual=0.0,
            mode=f"{mode}:{characterization}",
            margin=1 - ck / 2,
        )
    raise ParamOutOfRange(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# soundness scan and sharpness probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SoundnessReport:
    min_re_t: float
    witness_index: int
    witness_z: complex
    samples: int


def concavity_soundness_scan(
    members: Sequence[MemberSeries],
    setting: ConcavitySetting,
    radius: float,
    grid: GridSpec = GridSpec(n_radii=24, n_angles=96),
) -> SoundnessReport:
    """Minimum of Re T_f over the members and |z| <= radius - 1e-3."""
    r_cap = radius - 1e-3 if radius > 2e-3 else radius / 2
    radii = chebyshev_radii(grid.n_radii, r_cap)
    best = math.inf
    w_i, w_z = -1, 0j
    for i, m in enumerate(members):
        for r in radii:
            tv, zs = _t_on_circle(m, setting, float(r), grid.n_angles)
            j = int(np.argmin(tv.real))
            if tv.real[j] < best:
                best = float(tv.real[j])
                w_i, w_z = i, complex(zs[j])
    return SoundnessReport(
        min_re_t=best,
        witness_index=w_i,
        witness_z=w_z,
        samples=len(members) * radii.size * grid.n_angles,
    )


@dataclass(frozen=True)
class SearchOpts:
    seed: int = 0
    budget: int = 2000  # circle evaluations (member at one radius)
    rotations: int = 16
    sampled_specs: int = 24
    theta_count: int = 96
    r_lo: float = 0.02
    r_hi: float = 0.9
    r_tol: float = 1e-6
    order: int = DEFAULT_ORDER


@dataclass(frozen=True)
class ProbeResult:
    empirical_radius: float
    witness_spec: Optional[dict]
    witness_z: complex
    evaluations: int
    budget_exhausted: bool
    violation_found: bool

    def to_json(self) -> dict:
        return {
            "empirical_radius": self.empirical_radius,
            "witness_spec": self.witness_spec,
            "witness_z": [self.witness_z.real, self.witness_z.imag],
            "evaluations": self.evaluations,
            "budget_exhausted": self.budget_exhausted,
            "violation_found": self.violation_found,
        }


def sharpness_probe(
    params: ClassParams,
    setting: ConcavitySetting,
    search: SearchOpts = SearchOpts(),
    specs: Optional[Sequence[SchwarzSpec]] = None,
) -> ProbeResult:
    """Smallest radius at which some member attains Re T_f <= 0.

    The member family combines pure rotations omega = lam z (which realize
    the extremal boundary values of Re(z P_f) on every circle) with seeded
    Blaschke/polynomial specs; pass `specs` to restrict the search to a
    fixed family.  A coarse ascending scan brackets the first failure
    radius and bisection narrows it to r_tol; the budget counts
    member-circle evaluations and exhaustion returns the best-so-far with
    a flag.
    """
    if specs is None:
        specs = [
            SchwarzSpec(
                kind="unit_constant_times_z",
                rotation=complex(np.exp(2j * np.pi * j / search.rotations)),
            )
            for j in range(search.rotations)
        ] + sample_schwarz_specs(search.seed, search.sampled_specs, sp0=False)
    else:
        specs = list(specs)
    members = [
        generate_member(params, s, order=search.order, validate=False) for s in specs
    ]

    evals = 0
    witness: tuple[int, complex] | None = None

    def min_re_t(r: float) -> float:
        nonlocal evals, witness
        best = math.inf
        for i, m in enumerate(members):
            tv, zs = _t_on_circle(m, setting, r, search.theta_count)
            evals += 1
            j = int(np.argmin(tv.real))
            if tv.real[j] < best:
                best = float(tv.real[j])
                if best <= 0:
                    witness = (i, complex(zs[j]))
        return best

    exhausted = False
    lo, hi = None, None
    for r in np.linspace(search.r_lo, search.r_hi, 48):
        if evals + len(members) > search.budget:
            exhausted = True
            break
        if min_re_t(float(r)) <= 0:
            hi = float(r)
            break
        lo = float(r)

    if hi is None:
        return ProbeResult(
            empirical_radius=search.r_hi if not exhausted else (lo or search.r_lo),
            witness_spec=None,
            witness_z=0j,
            evaluations=evals,
            budget_exhausted=exhausted,
            violation_found=False,
        )
    if lo is None:
        lo = 0.0

    w_spec, w_z = specs[witness[0]], witness[1]
    while hi - lo > search.r_tol:
        if evals + len(members) > search.budget:
            exhausted = True
            break
        mid = 0.5 * (lo + hi)
        if min_re_t(mid) <= 0:
            hi = mid
            w_spec, w_z = specs[witness[0]], witness[1]
        else:
            lo = mid

    return ProbeResult(
        empirical_radius=0.5 * (lo + hi),
        witness_spec=w_spec.to_json(),
        witness_z=w_z,
        evaluations=evals,
        budget_exhausted=exhausted,
        violation_found=True,
    )
