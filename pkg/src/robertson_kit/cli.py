"""Command-line front end: verification suites, emitters, radius queries.

Exit-code contract: 0 when every asserted check holds, 1 when an asserted
check fails, 2 on usage or I/O errors, 3 when only reported-not-asserted
findings occur.  Checks that test formulas whose derivations are only
valid at alpha = 0 (the Schwarzian norm bound, the envelopes, the
pointwise Schwarzian bound, the printed concavity radius) are asserted at
alpha = 0 and demoted to findings elsewhere, so violations there flag the
formula rather than the toolkit.

Every violated record carries a witness that `replay_witness` re-evaluates
to the recorded margin.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import bounds, radii, robertson, sampling, schwarzian
from .robertson import (
    GridSpec,
    MemberSeries,
    SchwarzSpec,
    extremal_member,
    generate_member,
    make_params,
)
from .schwarzian import ScanOpts, norm_estimate
from .series import DEFAULT_ORDER, chebyshev_radii

ASSERT_TOL = 1e-9
NORM_TOL = 1e-6


def _max_workers() -> int:
    try:
        return max(1, int(os.environ.get("ROBERTSON_KIT_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items):
    workers = _max_workers()
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# run configuration and report structure
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    alpha: float = 0.0
    beta: float = 0.0
    a_co: float = 2.0
    order: int = DEFAULT_ORDER
    samples: int = 50
    seed: int = 7
    mode: str = "both"  # paper | corrected | both
    theorem: str = "all"
    r_max: Optional[float] = None
    radial: int = 128
    angular: int = 256
    refine_tol: float = 1e-10
    out: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "a_co": self.a_co,
            "order": self.order,
            "samples": self.samples,
            "seed": self.seed,
            "mode": self.mode,
            "theorem": self.theorem,
        }


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    asserted: bool
    samples: int
    min_margin: float
    status: str  # holds | violated | degenerate
    worst: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "anchor": self.anchor,
            "asserted": self.asserted,
            "samples": self.samples,
            "min_margin": self.min_margin if math.isfinite(self.min_margin) else None,
            "status": self.status,
            "worst": self.worst,
        }


@dataclass
class VerificationReport:
    config: RunConfig
    records: list[CheckRecord] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "holds": sum(1 for r in self.records if r.status == "holds"),
            "violated": sum(1 for r in self.records if r.status == "violated"),
            "degenerate": sum(1 for r in self.records if r.status == "degenerate"),
        }

    def exit_code(self) -> int:
        if any(r.status == "violated" and r.asserted for r in self.records):
            return 1
        if any(r.status == "violated" for r in self.records):
            return 3
        return 0

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "checks": [r.to_json() for r in self.records],
            "summary": self.summary(),
            "exit_code": self.exit_code(),
            "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }


# ---------------------------------------------------------------------------
# member batches and witness plumbing
# ---------------------------------------------------------------------------


def _members(cfg: RunConfig, sp0: bool, include_canonical: bool = True):
    """Seeded members plus the canonical witness generators.

    The canonical extras (a plain rotation, the symmetric double zero, and
    for the general batch the plane-extremal data) make the standard
    counterexamples deterministic parts of every run.
    """
    params = make_params(cfg.alpha, cfg.beta)
    specs: list[SchwarzSpec] = []
    if include_canonical:
        if sp0:
            specs.append(SchwarzSpec(kind="unit_constant_times_z", power=2))
            specs.append(SchwarzSpec(kind="unit_constant_times_z", rotation=-1.0, power=2))
        else:
            specs.append(SchwarzSpec(kind="unit_constant_times_z"))
            specs.append(SchwarzSpec(kind="unit_constant_times_z", rotation=-1.0))
    specs.extend(sampling.sample_schwarz_specs(cfg.seed, cfg.samples, sp0=sp0))
    members = _map(
        lambda s: generate_member(params, s, order=cfg.order, validate=False), specs
    )
    return params, specs, members


def _witness(cfg: RunConfig, check_id: str, spec, z: complex, margin: float, **extra):
    w = {
        "check": check_id,
        "alpha": cfg.alpha,
        "beta": cfg.beta,
        "order": cfg.order,
        "spec": spec.to_json() if isinstance(spec, SchwarzSpec) else spec,
        "z": [z.real, z.imag],
        "margin": margin,
    }
    w.update(extra)
    return w


def _witness_member(w: dict) -> MemberSeries:
    params = make_params(w["alpha"], w["beta"])
    spec = w["spec"]
    if isinstance(spec, dict):
        return generate_member(
            params, SchwarzSpec.from_json(spec), order=w["order"], validate=False
        )
    variant = spec.removeprefix("extremal_")
    return extremal_member(params, variant, 1.0, order=w["order"])


def replay_witness(w: dict) -> float:
    """Recompute the margin a stored witness claims; must match to 1e-12."""
    member = _witness_member(w)
    z = complex(w["z"][0], w["z"][1])
    check = w["check"]
    if check == "2.1ii":
        return robertson.check_ii(member, z)
    if check == "2.1iii":
        return robertson.check_iii(member, z, w["mode"])
    if check in ("22.3", "22.4"):
        which = "eq22_3" if check == "22.3" else "eq22_4"
        return robertson.classical_convexity_check(member, z, which)
    if check == "2.2":
        r = abs(z)
        if w["kind"] == "distortion":
            env = bounds.distortion_envelope(member.params, r)
            v = abs(member.eval_fprime(z, 0.95))
        else:
            env = bounds.growth_envelope(member.params, r)
            v = abs(member.eval_f(z, 0.95))
        return min(env.upper - v, v - env.lower)
    if check in ("2.3", "2.4", "AB"):
        weight = 1 if check == "2.3" else 2
        est = norm_estimate(member, weight, ScanOpts(r_max=w["r_max"]))
        return w["bound"] - est.value
    if check == "2.5":
        xi = bounds.xi_of_member(member)
        sv = abs(schwarzian.eval_s(member, z, 0.95))
        b = bounds.schwarzian_pointwise_bound(member.params, xi, abs(z))
        return b - (1 - abs(z) ** 2) ** 2 * sv
    if check == "concavity":
        setting = radii.ConcavitySetting(w["a_co"])
        return radii.t_operator(member, setting, z).real
    raise ValueError(f"unknown check id {check!r}")


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def _grid_points(r_max: float = 0.9, n_radii: int = 24, n_angles: int = 48):
    rs = chebyshev_radii(n_radii, r_max)
    th = 2 * np.pi * np.arange(n_angles) / n_angles
    return (rs[:, None] * np.exp(1j * th)[None, :]).ravel()


def _pointwise_min(
    cfg, check_id, specs, members, fn, asserted, anchor, **extra
) -> CheckRecord:
    """Minimize a vectorized pointwise residual over members and a polar grid."""
    zs = _grid_points()

    def one(args):
        spec, m = args
        vals = np.asarray(fn(m, zs), dtype=float)
        i = int(np.argmin(vals))
        return spec, complex(zs[i]), float(vals[i])

    best = math.inf
    worst = None
    for spec, z, val in _map(one, list(zip(specs, members))):
        if val < best:
            best = val
            worst = _witness(cfg, check_id, spec, z, best, **extra)
    status = "holds" if best >= -ASSERT_TOL else "violated"
    return CheckRecord(
        check_id=check_id,
        anchor=anchor,
        asserted=asserted,
        samples=len(members) * zs.size,
        min_margin=best,
        status=status,
        worst=worst,
    )


def check_21ii(cfg: RunConfig) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=False)
    return _pointwise_min(
        cfg,
        "2.1ii",
        specs,
        members,
        lambda m, z: robertson.check_ii(m, z),
        asserted=True,
        anchor="Re(1 + conj(G1) z P_f) >= 1 - k^2 + (1-|z|^2)/4 |z P_f|^2",
    )


def check_21iii(cfg: RunConfig, mode: str) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=False)
    # the plane extremal is the canonical witness for the printed form
    if cfg.alpha == 0:
        specs = list(specs) + ["extremal_plane"]
        members = list(members) + [
            extremal_member(params, "plane", 1.0, order=cfg.order)
        ]
    return _pointwise_min(
        cfg,
        "2.1iii",
        specs,
        members,
        lambda m, z: robertson.check_iii(m, z, mode),
        asserted=(mode == "corrected"),
        anchor=(
            "|(1-|z|^2) P_f - 2 k conj(z)| <= k (printed)"
            if mode == "paper"
            else "|(1-|z|^2) P_f - 2 G1 conj(z)| <= 2k (corrected)"
        ),
        mode=mode,
    )


def check_classical(cfg: RunConfig, which: str) -> CheckRecord:
    base = RunConfig(**{**cfg.__dict__, "alpha": 0.0, "beta": 0.0})
    params, specs, members = _members(base, sp0=False)
    cid = "22.3" if which == "eq22_3" else "22.4"
    anchor = (
        "Re(1 + z P_f) >= (1/4)(1-|z|^2)|P_f|^2 (convex members)"
        if which == "eq22_3"
        else "|(1-|z|^2) P_f - 2 conj(z)| <= 2 (convex members)"
    )
    return _pointwise_min(
        base,
        cid,
        specs,
        members,
        lambda m, z: robertson.classical_convexity_check(m, z, which),
        asserted=True,
        anchor=anchor,
    )


def check_envelopes(cfg: RunConfig) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=True)
    best = math.inf
    worst = None
    for spec, m in zip(specs, members):
        rep = bounds.envelope_check(m)
        for kind, margin, z in (
            ("distortion", rep.distortion_min_margin, rep.worst_z_distortion),
            ("growth", rep.growth_min_margin, rep.worst_z_growth),
        ):
            if margin < best:
                best = margin
                worst = _witness(cfg, "2.2", spec, z, margin, kind=kind)
    status = "holds" if best >= -ASSERT_TOL else "violated"
    return CheckRecord(
        check_id="2.2",
        anchor="(1+r^2)^{-k} <= |f'| <= (1-r^2)^{-k} and the integrated growth bounds (SP0)",
        asserted=(cfg.alpha == 0),
        samples=len(members),
        min_margin=best,
        status=status,
        worst=worst,
    )


def _norm_check(cfg: RunConfig, check_id: str, weight: int) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=True)
    r_max = cfg.r_max if cfg.r_max is not None else 0.95
    bound = (
        bounds.pre_norm_bound(params)
        if weight == 1
        else bounds.schwarzian_norm_bound(params)
    )

    def one(args):
        spec, m = args
        est = norm_estimate(m, weight, ScanOpts(r_max=r_max))
        return spec, est

    best = math.inf
    worst = None
    for spec, est in _map(one, list(zip(specs, members))):
        margin = bound + NORM_TOL - est.value
        if margin < best:
            best = margin
            worst = _witness(
                cfg, check_id, spec, est.argmax, margin, bound=bound + NORM_TOL, r_max=r_max
            )
    status = "holds" if best >= 0 else "violated"
    anchor = (
        "sup (1-|z|^2) |P_f| <= 2k (SP0)"
        if weight == 1
        else "sup (1-|z|^2)^2 |S_f| <= 2k(2-k) (SP0)"
    )
    return CheckRecord(
        check_id=check_id,
        anchor=anchor,
        asserted=True if weight == 1 else (cfg.alpha == 0),
        samples=len(members),
        min_margin=best,
        status=status,
        worst=worst,
    )


def check_pre_norm(cfg: RunConfig) -> CheckRecord:
    return _norm_check(cfg, "2.3", 1)


def check_schwarzian_norm(cfg: RunConfig) -> CheckRecord:
    return _norm_check(cfg, "2.4", 2)


def check_pointwise(cfg: RunConfig) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=False)

    def residual(m: MemberSeries, zs: np.ndarray) -> np.ndarray:
        xi = bounds.xi_of_member(m)
        if xi >= 1 - 1e-12:
            # the bound degenerates to +inf at xi = 1; trivially satisfied
            return np.full(zs.shape, np.inf)
        k = m.params.k
        sv = np.abs(schwarzian.eval_s(m, zs, 0.95))
        b = 2 * k * (2 + k * (xi + np.abs(zs)) ** 2 / (1 - xi**2))
        return b - (1 - np.abs(zs) ** 2) ** 2 * sv

    return _pointwise_min(
        cfg,
        "2.5",
        specs,
        members,
        residual,
        asserted=(cfg.alpha == 0),
        anchor="(1-|z|^2)^2 |S_f| <= 2k(2 + k (xi+|z|)^2/(1-xi^2)), xi = |f''(0)|/(2k)",
    )


def check_nehari(cfg: RunConfig) -> CheckRecord:
    """Margins against the classical thresholds 6 (necessary) and 2 (sufficient)."""
    params, specs, members = _members(cfg, sp0=True)
    r_max = cfg.r_max if cfg.r_max is not None else 0.95
    best = math.inf
    worst = None
    for spec, m in zip(specs, members):
        cert = schwarzian.nehari_certificates(m, ScanOpts(r_max=r_max))
        if cert.necessary_margin < best:
            best = cert.necessary_margin
            worst = _witness(
                cfg,
                "AB",
                spec,
                cert.schwarzian_norm.argmax,
                best,
                bound=6.0,
                r_max=r_max,
            )
    status = "holds" if best >= 0 else "violated"
    return CheckRecord(
        check_id="AB",
        anchor="|S_f| <= 6/(1-|z|^2)^2 necessary for univalence; <= 2/(1-|z|^2)^2 sufficient",
        asserted=False,
        samples=len(members),
        min_margin=best,
        status=status,
        worst=worst,
    )


def check_concavity(cfg: RunConfig, mode: str) -> CheckRecord:
    params, specs, members = _members(cfg, sp0=False)
    setting = radii.ConcavitySetting(cfg.a_co)
    rr = radii.radius_concavity(params, setting, mode)
    rep = radii.concavity_soundness_scan(members, setting, rr.value)
    status = "holds" if rep.min_re_t >= -ASSERT_TOL else "violated"
    worst = None
    if rep.witness_index >= 0:
        worst = _witness(
            cfg,
            "concavity",
            specs[rep.witness_index],
            rep.witness_z,
            rep.min_re_t,
            mode=mode,
            a_co=cfg.a_co,
            radius=rr.value,
        )
    return CheckRecord(
        check_id=f"concavity:{mode}",
        anchor=f"Re T_f > 0 for |z| < R_{mode} = {rr.value:.12f} (A_co = {cfg.a_co})",
        asserted=(mode == "corrected"),
        samples=rep.samples,
        min_margin=rep.min_re_t,
        status=status,
        worst=worst,
    )


def check_convexity(cfg: RunConfig) -> CheckRecord:
    params = make_params(cfg.alpha, cfg.beta)
    res = radii.radius_convexity(params, "paper_literal")
    return CheckRecord(
        check_id="convexity:paper_literal",
        anchor="printed convexity radius 1/(k-1); non-positive for every admissible k <= 1",
        asserted=False,
        samples=0,
        min_margin=math.nan,
        status="degenerate" if res.degenerate else "holds",
        worst=None,
    )


CHECK_BUILDERS: dict[str, Callable[[RunConfig], list[CheckRecord]]] = {
    "2.1ii": lambda cfg: [check_21ii(cfg)],
    "2.1iii": lambda cfg: [
        check_21iii(cfg, m)
        for m in (["paper", "corrected"] if cfg.mode == "both" else [cfg.mode])
    ],
    "2.2": lambda cfg: [check_envelopes(cfg)],
    "2.3": lambda cfg: [check_pre_norm(cfg)],
    "2.4": lambda cfg: [check_schwarzian_norm(cfg)],
    "2.5": lambda cfg: [check_pointwise(cfg)],
    "22.3": lambda cfg: [check_classical(cfg, "eq22_3")],
    "22.4": lambda cfg: [check_classical(cfg, "eq22_4")],
    "AB": lambda cfg: [check_nehari(cfg)],
    "concavity": lambda cfg: [
        check_concavity(cfg, m)
        for m in (["paper", "corrected"] if cfg.mode == "both" else [cfg.mode])
    ],
    "convexity": lambda cfg: [check_convexity(cfg)],
}


def cmd_verify(cfg: RunConfig) -> int:
    report = VerificationReport(config=cfg)
    ids = list(CHECK_BUILDERS) if cfg.theorem == "all" else [cfg.theorem]
    for cid in ids:
        if cid not in CHECK_BUILDERS:
            print(f"unknown check id {cid!r}; known: {sorted(CHECK_BUILDERS)}", file=sys.stderr)
            return 2
        report.records.extend(CHECK_BUILDERS[cid](cfg))
    payload = json.dumps(report.to_json(), sort_keys=True, indent=2)
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        print(payload)
    for rec in report.records:
        tag = "PASS" if rec.status == "holds" else rec.status.upper()
        print(
            f"[{tag}] {rec.check_id}: min margin {rec.min_margin:.3e} "
            f"({'asserted' if rec.asserted else 'reported'})",
            file=sys.stderr,
        )
    return report.exit_code()


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def _write_csv(path: Optional[str], header: list[str], rows) -> int:
    try:
        fh = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout
    except OSError as exc:
        print(f"cannot open output: {exc}", file=sys.stderr)
        return 2
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if path:
            fh.close()
    return 0


def cmd_emit(args: argparse.Namespace) -> int:
    params = make_params(args.alpha, args.beta)
    if args.what == "growth":
        rs = np.arange(0.0, args.rmax + 1e-12, args.step)
        header = ["r", "lower", "upper"]
        oracle = bounds.growth_oracle(params, 0.0) is not None
        if oracle:
            header += ["oracle_lower", "oracle_upper"]
        rows = []
        for r in rs:
            env = bounds.growth_envelope(params, float(r))
            row = [f"{r:.10g}", f"{env.lower:.12g}", f"{env.upper:.12g}"]
            if oracle:
                o = bounds.growth_oracle(params, float(r))
                row += [f"{o.lower:.12g}", f"{o.upper:.12g}"]
            rows.append(row)
        return _write_csv(args.out, header, rows)
    if args.what == "distortion":
        rs = np.arange(0.0, args.rmax + 1e-12, args.step)
        members = (
            sampling.sample_members(
                params, args.samples, args.seed, sp0=True, order=args.order
            )
            if args.samples
            else []
        )
        header = ["r", "lower", "upper", "sampled_min", "sampled_max"]
        rows = []
        for r in rs:
            env = bounds.distortion_envelope(params, float(r))
            smin, smax = "", ""
            if members and r > 0:
                vals = [
                    np.abs(m.f_prime.eval_on_circle(float(r), 64)) for m in members
                ]
                smin = f"{min(float(v.min()) for v in vals):.12g}"
                smax = f"{max(float(v.max()) for v in vals):.12g}"
            rows.append([f"{r:.10g}", f"{env.lower:.12g}", f"{env.upper:.12g}", smin, smax])
        return _write_csv(args.out, header, rows)
    if args.what == "phi":
        setting = radii.ConcavitySetting(args.Aco)
        modes = ["paper", "corrected"] if args.mode == "both" else [args.mode]
        quads = {m: radii.phi_quadratic(params, setting, m) for m in modes}
        rs = np.linspace(0.0, 1.0, int(round(1.0 / args.step)) + 1)
        rows = [
            [f"{r:.10g}"]
            + [f"{float(radii.phi_value(quads[m], r)):.12g}" for m in modes]
            for r in rs
        ]
        return _write_csv(args.out, ["r"] + [f"phi_{m}" for m in modes], rows)
    if args.what == "member":
        try:
            with open(args.spec, "r", encoding="utf-8") as fh:
                spec = SchwarzSpec.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            print(f"cannot read spec: {exc}", file=sys.stderr)
            return 2
        member = generate_member(params, spec, order=args.order)
        payload = json.dumps(robertson.member_to_json(member), sort_keys=True, indent=2)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(payload + "\n")
            except OSError as exc:
                print(f"cannot write member: {exc}", file=sys.stderr)
                return 2
        else:
            print(payload)
        return 0
    if args.what == "norm":
        member = extremal_member(params, args.variant, 1.0, order=args.order)
        est = norm_estimate(
            member,
            args.weight,
            ScanOpts(
                radial=args.radial,
                angular=args.angular,
                r_max=args.rmax_scan,
                refine_tol=args.refine_tol,
            ),
        )
        print(json.dumps(est.to_json(), sort_keys=True, indent=2))
        return 0
    print(f"unknown emit target {args.what!r}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# radii subcommands
# ---------------------------------------------------------------------------


def cmd_radii(args: argparse.Namespace) -> int:
    params = make_params(args.alpha, args.beta)
    if args.radii_cmd == "concavity":
        setting = radii.ConcavitySetting(args.Aco)
        modes = ["paper", "corrected"] if args.mode == "both" else [args.mode]
        out = {m: radii.radius_concavity(params, setting, m).to_json() for m in modes}
        print(json.dumps(out, sort_keys=True, indent=2))
        return 0
    if args.radii_cmd == "convexity":
        res = radii.radius_convexity(params, args.mode, args.characterization)
        if res.degenerate:
            print(
                "warning: printed convexity-radius formula 1/(k-1) is degenerate "
                f"for k = {params.k:.6f} <= 1",
                file=sys.stderr,
            )
        print(json.dumps(res.to_json(), sort_keys=True, indent=2))
        return 0
    if args.radii_cmd == "probe":
        setting = radii.ConcavitySetting(args.Aco)
        res = radii.sharpness_probe(
            params,
            setting,
            radii.SearchOpts(seed=args.seed, budget=args.budget, order=args.order),
        )
        corrected = radii.radius_concavity(params, setting, "corrected").value
        paper = radii.radius_concavity(params, setting, "paper").value
        payload = res.to_json()
        payload["radius_paper"] = paper
        payload["radius_corrected"] = corrected
        payload["gap_to_paper"] = res.empirical_radius - paper
        payload["gap_to_corrected"] = res.empirical_radius - corrected
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 0
    print(f"unknown radii command {args.radii_cmd!r}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--seed", type=int, default=7)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="robkit",
        description="Verification toolkit for the generalized Robertson class SP_alpha(beta)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite over seeded members")
    _add_common(v)
    v.set_defaults(order=512)
    v.add_argument("--theorem", default="all")
    v.add_argument("--samples", type=int, default=50)
    v.add_argument("--mode", choices=["paper", "corrected", "both"], default="both")
    v.add_argument("--Aco", type=float, default=2.0)
    v.add_argument("--rmax", type=float, default=None)
    v.add_argument("--out", default=None)

    e = sub.add_parser("emit", help="emit CSV/JSON tables and members")
    e.add_argument("what", choices=["growth", "distortion", "phi", "member", "norm"])
    _add_common(e)
    e.add_argument("--rmax", type=float, default=0.9)
    e.add_argument("--step", type=float, default=0.05)
    e.add_argument("--Aco", type=float, default=2.0)
    e.add_argument("--mode", choices=["paper", "corrected", "both"], default="both")
    e.add_argument("--samples", type=int, default=0)
    e.add_argument("--spec", default=None)
    e.add_argument("--out", default=None)
    e.add_argument("--variant", choices=["disk_symmetric", "plane"], default="disk_symmetric")
    e.add_argument("--weight", type=int, choices=[1, 2], default=2)
    e.add_argument("--radial", type=int, default=128)
    e.add_argument("--angular", type=int, default=256)
    e.add_argument("--rmax-scan", type=float, default=None, dest="rmax_scan")
    e.add_argument("--refine-tol", type=float, default=1e-10, dest="refine_tol")

    r = sub.add_parser("radii", help="radius-of-concavity and convexity queries")
    rsub = r.add_subparsers(dest="radii_cmd", required=True)
    rc = rsub.add_parser("concavity")
    _add_common(rc)
    rc.add_argument("--Aco", type=float, default=2.0)
    rc.add_argument("--mode", choices=["paper", "corrected", "both"], default="both")
    rv = rsub.add_parser("convexity")
    _add_common(rv)
    rv.add_argument(
        "--mode", choices=["paper_literal", "derived_bound"], default="paper_literal"
    )
    rv.add_argument(
        "--characterization", choices=["paper", "corrected"], default="corrected"
    )
    rp = rsub.add_parser("probe")
    _add_common(rp)
    rp.add_argument("--Aco", type=float, default=2.0)
    rp.add_argument("--budget", type=int, default=2000)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(
                alpha=args.alpha,
                beta=args.beta,
                a_co=args.Aco,
                order=args.order,
                samples=args.samples,
                seed=args.seed,
                mode=args.mode,
                theorem=args.theorem,
                r_max=args.rmax,
                out=args.out,
            )
            return cmd_verify(cfg)
        if args.command == "emit":
            return cmd_emit(args)
        if args.command == "radii":
            return cmd_radii(args)
    except (robertson.ParamOutOfRange, robertson.NotASchwarzFunction) as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
