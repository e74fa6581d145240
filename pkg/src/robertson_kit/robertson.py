"""Class parameters, member generation, and pointwise characterization checks.

The generalized Robertson class SP_alpha(beta) consists of normalized
analytic functions f on the unit disk with

    Re(e^{i*alpha} (1 + z f''(z)/f'(z))) > beta * cos(alpha).

Every member arises from a Schwarz function omega (analytic self-map of
the disk fixing 0) through the half-plane subordination

    1 + z f''/f' = (1 + A omega)/(1 - omega),

which gives f''/f' = 2 G1 phi / (1 - z phi) with omega = z phi and
G1 = (A + 1)/2 = k e^{-i*alpha}, k = (1 - beta) cos(alpha).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Union

import numpy as np

from .series import (
    DEFAULT_ORDER,
    RadiusExceeded,
    TruncatedSeries,
    chebyshev_radii,
)


class ParamOutOfRange(ValueError):
    """A class or operation parameter lies outside its admissible range."""


class NotASchwarzFunction(ValueError):
    """The supplied data does not describe a Schwarz function."""


# ---------------------------------------------------------------------------
# class parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassParams:
    """Parameters (alpha, beta) of SP_alpha(beta) plus derived constants.

    k is the order constant (1 - beta) cos(alpha); a_sub is the
    subordination constant A = e^{-i*alpha}(e^{-i*alpha} - 2 beta cos(alpha));
    g1 = (A + 1)/2 satisfies g1 = k e^{-i*alpha}.
    """

    alpha: float
    beta: float
    k: float
    a_sub: complex
    g1: complex


def make_params(alpha: float, beta: float) -> ClassParams:
    if not -math.pi / 2 < alpha < math.pi / 2:
        raise ParamOutOfRange(f"alpha={alpha} outside (-pi/2, pi/2)")
    if not 0 <= beta < 1:
        raise ParamOutOfRange(f"beta={beta} outside [0, 1)")
    e = cmath.exp(-1j * alpha)
    a_sub = e * (e - 2 * beta * math.cos(alpha))
    g1 = (a_sub + 1) / 2
    k = (1 - beta) * math.cos(alpha)
    return ClassParams(alpha=alpha, beta=beta, k=k, a_sub=a_sub, g1=g1)


# ---------------------------------------------------------------------------
# Schwarz-function specifications
# ---------------------------------------------------------------------------

KINDS = ("polynomial", "blaschke_product", "unit_constant_times_z")


@dataclass(frozen=True)
class SchwarzSpec:
    """Description of a Schwarz function omega: D -> D with omega(0) = 0.

    kind "polynomial": omega(z) = sum coeffs[i] z^i (coeffs[0] must be 0);
    validated numerically on a dense polar grid.
    kind "blaschke_product": omega(z) = rotation * prod (a - z)/(1 - conj(a) z)
    over `zeros`; zeros at the origin contribute plain factors of z, and the
    spec is a Schwarz function by construction when all |a| < 1 and
    |rotation| <= 1.
    kind "unit_constant_times_z": omega(z) = rotation * z**power.
    """

    kind: str
    coeffs: tuple = ()
    zeros: tuple = ()
    rotation: complex = 1.0 + 0.0j
    power: int = 1

    def vanishing_order(self) -> int:
        """Order of the zero of omega at 0 (0 when omega(0) != 0)."""
        if self.kind == "polynomial":
            for i, c in enumerate(self.coeffs):
                if abs(c) > 0:
                    return i
            return len(self.coeffs)
        if self.kind == "blaschke_product":
            return sum(1 for a in self.zeros if abs(a) <= 1e-14)
        if self.kind == "unit_constant_times_z":
            return self.power
        raise ParamOutOfRange(f"unknown Schwarz kind {self.kind!r}")

    # -- JSON wire format --------------------------------------------------

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "polynomial":
            d["coeffs"] = [[c.real, c.imag] for c in map(complex, self.coeffs)]
        elif self.kind == "blaschke_product":
            d["zeros"] = [[a.real, a.imag] for a in map(complex, self.zeros)]
            d["rotation"] = [self.rotation.real, self.rotation.imag]
        else:
            d["rotation"] = [self.rotation.real, self.rotation.imag]
            d["power"] = self.power
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SchwarzSpec":
        kind = d["kind"]
        if kind == "polynomial":
            return cls(kind, coeffs=tuple(complex(p[0], p[1]) for p in d["coeffs"]))
        if kind == "blaschke_product":
            rot = complex(*d.get("rotation", [1.0, 0.0]))
            return cls(
                kind,
                zeros=tuple(complex(p[0], p[1]) for p in d["zeros"]),
                rotation=rot,
            )
        if kind == "unit_constant_times_z":
            rot = complex(*d.get("rotation", [1.0, 0.0]))
            return cls(kind, rotation=rot, power=int(d.get("power", 1)))
        raise ParamOutOfRange(f"unknown Schwarz kind {kind!r}")


def omega_series(spec: SchwarzSpec, order: int) -> TruncatedSeries:
    """Taylor expansion of omega to the given order."""
    if spec.kind == "polynomial":
        c = np.zeros(order + 1, dtype=np.complex128)
        upto = min(len(spec.coeffs), order + 1)
        c[:upto] = np.asarray(spec.coeffs[:upto], dtype=np.complex128)
        return TruncatedSeries(c)
    if spec.kind == "unit_constant_times_z":
        c = np.zeros(order + 1, dtype=np.complex128)
        if spec.power <= order:
            c[spec.power] = spec.rotation
        return TruncatedSeries(c)
    if spec.kind == "blaschke_product":
        acc = TruncatedSeries.constant(spec.rotation, order)
        shift = 0
        for a in spec.zeros:
            a = complex(a)
            if abs(a) <= 1e-14:
                shift += 1
                continue
            # (a - z)/(1 - conj(a) z) = a + (|a|^2 - 1) sum conj(a)^{n-1} z^n
            fac = np.empty(order + 1, dtype=np.complex128)
            fac[0] = a
            fac[1:] = (abs(a) ** 2 - 1) * np.conj(a) ** np.arange(order)
            acc = acc * TruncatedSeries(fac)
        if shift:
            c = np.zeros(order + 1, dtype=np.complex128)
            c[shift:] = acc.coeffs[: order + 1 - shift]
            acc = TruncatedSeries(c)
        return acc
    raise ParamOutOfRange(f"unknown Schwarz kind {spec.kind!r}")


def phi_series(spec: SchwarzSpec, order: int) -> TruncatedSeries:
    """Series of phi = omega / z (omega must vanish at 0)."""
    om = omega_series(spec, order + 1)
    if abs(om.coeffs[0]) > 1e-14:
        raise NotASchwarzFunction("omega(0) != 0")
    return TruncatedSeries(om.coeffs[1:])


@dataclass(frozen=True)
class SchwarzValidation:
    grid_max: float
    vanishing_order: int


def validate_schwarz(
    spec: SchwarzSpec,
    n_radial: int = 256,
    n_angular: int = 256,
    r: float = 0.999,
    margin: float = 1e-9,
) -> SchwarzValidation:
    """Check that the spec describes a Schwarz function; raise otherwise.

    Polynomial specs are validated numerically on an n_radial x n_angular
    polar grid out to radius r; Blaschke products and rotated monomials are
    exact by construction and only have their parameters range-checked.
    """
    vo = spec.vanishing_order()
    if vo < 1:
        raise NotASchwarzFunction("omega must vanish at 0")
    if spec.kind == "polynomial":
        om = omega_series(spec, max(len(spec.coeffs) - 1, 1))
        radii = chebyshev_radii(n_radial, r)
        grid_max = 0.0
        for rad in radii:
            vals = om.eval_on_circle(rad, n_angular)
            grid_max = max(grid_max, float(np.max(np.abs(vals))))
        if grid_max >= 1 - margin:
            raise NotASchwarzFunction(
                f"grid max |omega| = {grid_max:.12f} reaches the unit circle"
            )
        return SchwarzValidation(grid_max=grid_max, vanishing_order=vo)
    if spec.kind == "blaschke_product":
        for a in spec.zeros:
            if abs(a) >= 1:
                raise NotASchwarzFunction(f"Blaschke zero {a!r} outside the disk")
        if abs(spec.rotation) > 1 + 1e-12:
            raise NotASchwarzFunction("rotation factor exceeds the unit circle")
        return SchwarzValidation(
            grid_max=min(abs(spec.rotation), 1.0), vanishing_order=vo
        )
    if spec.kind == "unit_constant_times_z":
        if abs(spec.rotation) > 1 + 1e-12:
            raise NotASchwarzFunction("constant factor exceeds the unit circle")
        if spec.power < 1:
            raise NotASchwarzFunction("power must be >= 1")
        return SchwarzValidation(
            grid_max=min(abs(spec.rotation), 1.0), vanishing_order=vo
        )
    raise ParamOutOfRange(f"unknown Schwarz kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# members
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedForm:
    """Exact evaluators for the two extremal families.

    variant "plane": f'(z) = (1 - lam z)^{-k};
    variant "disk_symmetric": f'(z) = (1 - lam z^2)^{-k}, which has
    f''(0) = 0 and hence lies in the SP0 subclass.
    """

    variant: str
    lam: complex
    k: float

    def fprime(self, z):
        w = 1 - self.lam * self._inner(z)
        return w ** (-self.k)

    def p(self, z):
        w = 1 - self.lam * self._inner(z)
        if self.variant == "plane":
            return self.k * self.lam / w
        return 2 * self.k * self.lam * np.asarray(z) / w

    def s(self, z):
        w = 1 - self.lam * self._inner(z)
        if self.variant == "plane":
            return self.k * self.lam**2 * (2 - self.k) / (2 * w**2)
        return 2 * self.k * self.lam * (1 + (1 - self.k) * self.lam * np.asarray(z) ** 2) / w**2

    def _inner(self, z):
        zs = np.asarray(z)
        return zs if self.variant == "plane" else zs * zs


Provenance = Union[SchwarzSpec, str]


@dataclass
class MemberSeries:
    """A generated or extremal member f of SP_alpha(beta).

    Carries truncated series for f and f', the class parameters, the
    generating data, and (for extremals) closed-form evaluators.  The
    pre-Schwarzian and Schwarzian series are cached lazily; treat
    instances as immutable.
    """

    f: TruncatedSeries
    f_prime: TruncatedSeries
    params: ClassParams
    provenance: Provenance
    closed_form: Optional[ClosedForm] = None
    phi: Optional[TruncatedSeries] = None
    _p_series: Optional[TruncatedSeries] = field(default=None, repr=False)
    _s_series: Optional[TruncatedSeries] = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return self.f.order

    def p_series(self) -> TruncatedSeries:
        """Series of the pre-Schwarzian P_f = f''/f'."""
        if self._p_series is None:
            self._p_series = self.f_prime.deriv() / self.f_prime
        return self._p_series

    # -- point evaluation (closed form preferred) ---------------------------

    def eval_fprime(self, z, r_trunc: float = 0.95):
        if self.closed_form is not None:
            return self.closed_form.fprime(z)
        return self.f_prime.eval_at(z, r_trunc)

    def eval_f(self, z, r_trunc: float = 0.95):
        return self.f.eval_at(z, r_trunc)

    def eval_p(self, z, r_trunc: float = 0.95):
        if self.closed_form is not None:
            return self.closed_form.p(z)
        return self.p_series().eval_at(z, r_trunc)

    def p_on_circle(self, r: float, n_angles: int):
        if self.closed_form is not None:
            z = r * np.exp(2j * np.pi * np.arange(n_angles) / n_angles)
            return self.closed_form.p(z)
        return self.p_series().eval_on_circle(r, n_angles)


def generate_member(
    params: ClassParams,
    spec: SchwarzSpec,
    order: int = DEFAULT_ORDER,
    validate: bool = True,
) -> MemberSeries:
    """Build the member generated by a Schwarz function.

    Integrates f''/f' = 2 G1 phi/(1 - z phi), exponentiates to get f',
    and integrates once more; c0, c1 of f are pinned to (0, 1) exactly.
    A vanishing order >= 2 yields f''(0) = 0, i.e. an SP0 member.
    """
    if order < 8:
        raise ParamOutOfRange("series order must be >= 8")
    if validate:
        validate_schwarz(spec)
    phi = phi_series(spec, order)
    omega = TruncatedSeries(np.concatenate(([0.0 + 0.0j], phi.coeffs[:order])))
    p = (phi * (2 * params.g1)) / (1 - omega)
    f_prime = p.integ(max_order=order).exp()
    f = f_prime.integ(max_order=order)
    cf = f.coeffs.copy()
    cf[0] = 0.0
    if order >= 1:
        cf[1] = 1.0
    # the pre-Schwarzian cache is left empty on purpose: downstream
    # operators recover P from f''/f', independently of the generating
    # series p, which keeps the via-phi cross-checks meaningful
    return MemberSeries(
        f=TruncatedSeries(cf),
        f_prime=f_prime,
        params=params,
        provenance=spec,
        phi=phi,
    )


def extremal_member(
    params: ClassParams,
    variant: str,
    lam: complex = 1.0 + 0.0j,
    order: int = DEFAULT_ORDER,
) -> MemberSeries:
    """The extremal families f'(z) = (1 - lam z)^{-k} / (1 - lam z^2)^{-k}."""
    if variant not in ("plane", "disk_symmetric"):
        raise ParamOutOfRange(f"unknown extremal variant {variant!r}")
    if abs(abs(lam) - 1) > 1e-12:
        raise ParamOutOfRange("lambda must be unimodular")
    k = params.k
    base = np.zeros(order + 1, dtype=np.complex128)
    base[0] = 1.0
    if variant == "plane":
        base[1] = -lam
    else:
        base[2] = -lam
    f_prime = TruncatedSeries(base).pow(-k)
    f = f_prime.integ(max_order=order)
    cf = f.coeffs.copy()
    cf[0] = 0.0
    cf[1] = 1.0
    return MemberSeries(
        f=TruncatedSeries(cf),
        f_prime=f_prime,
        params=params,
        provenance=f"extremal_{variant}",
        closed_form=ClosedForm(variant=variant, lam=complex(lam), k=k),
    )


def plane_extremal_schwarz_spec(order: int = DEFAULT_ORDER) -> SchwarzSpec:
    """Schwarz data regenerating the plane extremal at alpha = 0.

    omega(z) = z/(2 - z); as a truncated polynomial the coefficients are
    2^{-n}.  Only at alpha = 0 does this spec reproduce f' = (1 - z)^{-k}:
    for alpha != 0 the plane extremal is not generated by any Schwarz
    function (its half-plane image is not contained in the rotated target).
    """
    n = np.arange(order + 1, dtype=np.float64)
    coeffs = 0.5**n
    coeffs[0] = 0.0
    return SchwarzSpec(kind="polynomial", coeffs=tuple(coeffs))


# ---------------------------------------------------------------------------
# grids and membership / characterization checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Polar validation grid: Chebyshev radii in (0, r_max], uniform angles."""

    n_radii: int = 64
    n_angles: int = 64
    r_max: float = 0.9


@dataclass(frozen=True)
class MarginReport:
    min_margin: float
    argmin: complex
    samples: int


def _grid_radii(grid: GridSpec) -> np.ndarray:
    return chebyshev_radii(grid.n_radii, grid.r_max)


def subordination_membership_check(
    member: MemberSeries, grid: GridSpec = GridSpec(), tail_tol: float = 1e-6
) -> MarginReport:
    """Minimum of Re(e^{i*alpha}(1 + z P_f(z))) - beta cos(alpha) on the grid.

    A nonnegative minimum (up to -1e-9) certifies the defining inequality
    at the sampled points.
    """
    pr = member.params
    if member.closed_form is None:
        tb = member.p_series().tail_bound(grid.r_max)
        if tb > tail_tol:
            raise RadiusExceeded(
                f"pre-Schwarzian tail {tb:.3e} at r={grid.r_max} above {tail_tol}"
            )
    rot = cmath.exp(1j * pr.alpha)
    target = pr.beta * math.cos(pr.alpha)
    best = math.inf
    best_z = 0j
    n = grid.n_angles
    for r in _grid_radii(grid):
        pv = member.p_on_circle(r, n)
        zs = r * np.exp(2j * np.pi * np.arange(n) / n)
        margins = (rot * (1 + zs * pv)).real - target
        i = int(np.argmin(margins))
        if margins[i] < best:
            best = float(margins[i])
            best_z = complex(zs[i])
    return MarginReport(min_margin=best, argmin=best_z, samples=grid.n_radii * n)


def _scalarize(z, res):
    return float(res) if np.ndim(z) == 0 else res


def check_ii(member: MemberSeries, z, r_trunc: float = 0.95):
    """Residual of the half-plane characterization in its real-part form.

    residual = Re(1 + conj(G1) z P) - [1 - k^2 + (1-|z|^2)/4 |z P|^2];
    nonnegative for every class member.  z may be a point or an array.
    """
    pr = member.params
    zs = np.asarray(z, dtype=np.complex128)
    zp = zs * member.eval_p(zs, r_trunc)
    rhs = 1 - pr.k**2 + (1 - np.abs(zs) ** 2) / 4 * np.abs(zp) ** 2
    return _scalarize(z, (1 + np.conj(pr.g1) * zp).real - rhs)


def check_iii(member: MemberSeries, z, mode: str = "corrected", r_trunc: float = 0.95):
    """Residual of the two-sided pointwise bound on (1-|z|^2) P_f.

    mode "paper" evaluates the printed form k - |(1-|z|^2) P - 2 k conj(z)|,
    which the extremal functions themselves violate; mode "corrected" uses
    the re-derived form 2k - |(1-|z|^2) P - 2 G1 conj(z)|, obtained by
    completing the square with X = (1-|z|^2) P and Y = 2 G1 conj(z).
    """
    pr = member.params
    zs = np.asarray(z, dtype=np.complex128)
    v = (1 - np.abs(zs) ** 2) * member.eval_p(zs, r_trunc)
    if mode == "paper":
        return _scalarize(z, pr.k - np.abs(v - 2 * pr.k * np.conj(zs)))
    if mode == "corrected":
        return _scalarize(z, 2 * pr.k - np.abs(v - 2 * pr.g1 * np.conj(zs)))
    raise ParamOutOfRange(f"unknown mode {mode!r}")


def classical_convexity_check(
    member: MemberSeries, z, which: str, r_trunc: float = 0.95
):
    """Residuals of the two classical convexity characterizations.

    "eq22_3": Re(1 + z P) - (1/4)(1-|z|^2)|P|^2;
    "eq22_4": 2 - |(1-|z|^2) P - 2 conj(z)|.
    Both are meaningful for convex members (alpha = beta = 0).
    """
    zs = np.asarray(z, dtype=np.complex128)
    p = member.eval_p(zs, r_trunc)
    if which == "eq22_3":
        res = (1 + zs * p).real - 0.25 * (1 - np.abs(zs) ** 2) * np.abs(p) ** 2
    elif which == "eq22_4":
        res = 2 - np.abs((1 - np.abs(zs) ** 2) * p - 2 * np.conj(zs))
    else:
        raise ParamOutOfRange(f"unknown check {which!r}")
    return _scalarize(z, res)


def member_to_json(member: MemberSeries) -> dict:
    """JSON export: parameters, provenance, and both series."""
    prov: dict | str
    if isinstance(member.provenance, SchwarzSpec):
        prov = member.provenance.to_json()
    else:
        prov = member.provenance
    d = {
        "alpha": member.params.alpha,
        "beta": member.params.beta,
        "provenance": prov,
        "f": member.f.to_pairs(),
        "f_prime": member.f_prime.to_pairs(),
    }
    if member.closed_form is not None:
        d["closed_form"] = {
            "variant": member.closed_form.variant,
            "lambda": [member.closed_form.lam.real, member.closed_form.lam.imag],
        }
    return d


def member_from_json(d: dict) -> MemberSeries:
    params = make_params(d["alpha"], d["beta"])
    prov: Provenance
    if isinstance(d["provenance"], dict):
        prov = SchwarzSpec.from_json(d["provenance"])
    else:
        prov = d["provenance"]
    cf = None
    if "closed_form" in d:
        cf = ClosedForm(
            variant=d["closed_form"]["variant"],
            lam=complex(*d["closed_form"]["lambda"]),
            k=params.k,
        )
    return MemberSeries(
        f=TruncatedSeries.from_pairs(d["f"]),
        f_prime=TruncatedSeries.from_pairs(d["f_prime"]),
        params=params,
        provenance=prov,
        closed_form=cf,
    )
