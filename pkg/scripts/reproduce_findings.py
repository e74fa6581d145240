#!/usr/bin/env python3
"""Reproduce every discrepancy the toolkit finds in the printed constants.

Runs in a few seconds and prints self-contained witnesses:
  1. the printed two-sided pre-Schwarzian bound fails on its own extremal;
  2. the printed Schwarzian norm bound 2k(2-k) fails off the real axis
     (alpha != 0) on certified class members;
  3. the printed radius of concavity is larger than the class radius
     (unsound); the corrected radius is sharp;
  4. the printed radius-of-convexity formula is degenerate for every
     admissible parameter;
  5. the printed lower distortion envelope fails for alpha != 0.
"""

import json
import math

import numpy as np

from robertson_kit.bounds import envelope_check, schwarzian_norm_bound
from robertson_kit.radii import (
    ConcavitySetting,
    SearchOpts,
    radius_concavity,
    radius_convexity,
    sharpness_probe,
    t_operator,
)
from robertson_kit.robertson import (
    SchwarzSpec,
    check_iii,
    extremal_member,
    generate_member,
    make_params,
    subordination_membership_check,
)
from robertson_kit.sampling import sample_members
from robertson_kit.schwarzian import ScanOpts, norm_estimate


def finding_1_pointwise_bound():
    print("[1] printed two-sided bound |(1-|z|^2)P - 2k conj(z)| <= k")
    p = make_params(0, 0)
    pe = extremal_member(p, "plane", 1.0, order=64)
    z = -0.5
    print(f"    plane extremal f' = (1-z)^-1 at z = {z}:")
    print(f"      printed-form margin   = {check_iii(pe, z, 'paper'):+.12f}  (< 0: violated)")
    print(f"      corrected-form margin = {check_iii(pe, z, 'corrected'):+.12f}  (>= 0: holds)")


def finding_2_schwarzian_norm():
    alpha, beta = math.pi / 4, 0.25
    p = make_params(alpha, beta)
    bound = schwarzian_norm_bound(p)
    spec = SchwarzSpec(kind="unit_constant_times_z", power=2)
    m = generate_member(p, spec, order=512)
    est = norm_estimate(m, 2, ScanOpts(r_max=0.95))
    margin = subordination_membership_check(m).min_margin
    print(f"[2] printed Schwarzian norm bound 2k(2-k) = {bound:.6f} at "
          f"(alpha, beta) = (pi/4, 0.25)")
    print(f"    member generated by omega = z^2 (membership margin {margin:+.4f}):")
    print(f"      scanned ||S_f|| (r <= 0.95) = {est.value:.6f}  "
          f"(exceeds the bound by {est.value - bound:+.6f})")
    print(f"      limit along the attaining ray: 2k|2-G1| = "
          f"{2 * p.k * abs(2 - p.g1):.6f}")


def finding_3_concavity_radius():
    p = make_params(0, 0)
    st = ConcavitySetting(2.0)
    rp = radius_concavity(p, st, "paper").value
    rc = radius_concavity(p, st, "corrected").value
    rot = generate_member(p, SchwarzSpec(kind="unit_constant_times_z", rotation=-1.0), order=128)
    r_mid = 0.5 * (rc + rp)
    t_mid = t_operator(rot, st, -r_mid).real
    probe = sharpness_probe(p, st, SearchOpts(seed=11, budget=6000))
    print(f"[3] radius of concavity at (0, 0), A_co = 2")
    print(f"      printed radius   = {rp:.12f}  (= 4 - sqrt(15))")
    print(f"      corrected radius = {rc:.12f}  (= 5 - sqrt(24))")
    print(f"      member omega = -z at z = -{r_mid:.6f} (inside the printed radius): "
          f"Re T_f = {t_mid:+.6f}  (< 0: printed radius unsound)")
    print(f"      empirical class radius from the probe = {probe.empirical_radius:.9f} "
          f"(matches the corrected radius; witness {json.dumps(probe.witness_spec)})")


def finding_4_convexity_radius():
    print("[4] printed radius-of-convexity formula 1/(k-1)")
    for beta in (0.0, 0.5):
        res = radius_convexity(make_params(0, beta), "paper_literal")
        val = "1/0 (undefined)" if res.value == math.inf else f"{res.value:.6f}"
        print(f"      k = {1 - beta:.2f}: formula value {val}  (degenerate: {res.degenerate})")
    res = radius_convexity(make_params(0, 0), "derived_bound", "corrected")
    print(f"      derived whole-disk reading: radius {res.value}, boundary margin {res.margin}")


def finding_5_envelopes_off_axis():
    alpha = math.pi / 4
    p = make_params(alpha, 0.0)
    worst = math.inf
    worst_z = None
    for m in sample_members(p, 40, seed=321, sp0=True, order=256):
        rep = envelope_check(m)
        if rep.distortion_min_margin < worst:
            worst, worst_z = rep.distortion_min_margin, rep.worst_z_distortion
    print(f"[5] printed distortion envelope at alpha = pi/4 (SP0 members)")
    print(f"      worst margin over 40 seeded members: {worst:+.6f} at z = {worst_z:.4f}")
    print(f"      (< 0: the printed lower envelope fails off the real axis; "
          f"at alpha = 0 the suite asserts it)")


if __name__ == "__main__":
    for fn in (
        finding_1_pointwise_bound,
        finding_2_schwarzian_norm,
        finding_3_concavity_radius,
        finding_4_convexity_radius,
        finding_5_envelopes_off_axis,
    ):
        fn()
        print()
