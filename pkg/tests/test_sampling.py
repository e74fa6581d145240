"""Seeded Schwarz-spec sampling: determinism and validity."""

import numpy as np

from robertson_kit.robertson import make_params, validate_schwarz
from robertson_kit.sampling import (
    BLASCHKE_ZERO_RADIUS,
    POLY_COEFF_BUDGET,
    sample_members,
    sample_schwarz_specs,
)


def test_sampling_is_deterministic():
    a = sample_schwarz_specs(123, 20)
    b = sample_schwarz_specs(123, 20)
    assert a == b
    c = sample_schwarz_specs(124, 20)
    assert a != c


def test_sampled_specs_validate():
    for spec in sample_schwarz_specs(5, 40):
        validate_schwarz(spec)


def test_sp0_flag_forces_double_zero():
    for spec in sample_schwarz_specs(9, 30, sp0=True):
        assert spec.vanishing_order() >= 2
    for spec in sample_schwarz_specs(9, 30, sp0=False):
        assert spec.vanishing_order() >= 1


def test_sampler_budget_constraints():
    for spec in sample_schwarz_specs(31, 60):
        if spec.kind == "polynomial":
            assert sum(abs(c) for c in spec.coeffs) <= POLY_COEFF_BUDGET + 1e-12
        else:
            assert all(abs(a) <= BLASCHKE_ZERO_RADIUS + 1e-12 for a in spec.zeros)
            assert 1 <= sum(1 for a in spec.zeros if abs(a) > 1e-14) <= 4
            assert abs(abs(spec.rotation) - 1) < 1e-12


def test_sampled_members_are_normalized():
    p = make_params(0.5, 0.3)
    for m in sample_members(p, 10, seed=2, order=64):
        assert m.f.coeffs[0] == 0 and m.f.coeffs[1] == 1
        assert m.f_prime.coeffs[0] == 1


def test_kind_mix_present():
    kinds = {s.kind for s in sample_schwarz_specs(7, 40)}
    assert kinds == {"blaschke_product", "polynomial"}
