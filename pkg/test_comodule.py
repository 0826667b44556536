#!/usr/bin/env python3
"""
Tests for the coaction rho on A and the comodule algebra axioms
"""

import logging
import os
import random
import sys

import pytest
from hypothesis import given, settings, strategies as st

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.comodule import (
    HA,
    Coaction,
    comodule_axiom_check,
    oracle_chain_check,
    counit_axiom_check,
    identity_equation_check,
    iff_witness,
    rho_power_closed,
    rho_power_closed_check,
    rho_power_n_check,
    theorem_main_identity_check,
)
from shared.cyclotomic import CycContext
from shared.errors import RangeError
from shared.quantum_plane_a import AElement, a_coefficient, random_a_element
from shared.taft_hopf import TaftElement, TensorElement, apply_map_to_slot, counit, tensor

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _failures(cases):
    return [case.case_id + " " + (case.detail or "") for case in cases if not case.passed]


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_rho_u_shape(n):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    assert len(coaction.rho_u.terms) == n
    assert coaction.rho(AElement.one(ctx)) == TensorElement.unit(ctx, HA)
    assert coaction(AElement.u(ctx)) == coaction.rho_u
    # i = 0 term: g^-1 ⊗ u
    assert coaction.rho_u.coefficient((0, n - 1), 1) == 1
    # i = n-1 term wraps onto the unit of A with an extra w
    expected = a_coefficient(ctx, n - 1) * ctx.omega
    assert coaction.rho_u.coefficient((n - 1, 0), 0) == expected


def test_rho_u_at_n_2():
    ctx = CycContext(2)
    g = TaftElement.g(ctx)
    xg_inv = TaftElement.monomial(ctx, 1, 0)
    u, one = AElement.u(ctx), AElement.one(ctx)
    # a_1 = 2 and u^2 = w = -1
    expected = tensor(g, u) + tensor(xg_inv, one).scale(-2)
    assert Coaction(ctx).rho_u == expected


@pytest.mark.parametrize("n", range(2, 11))
def test_rho_u_to_the_n(n):
    assert not _failures(rho_power_n_check(Coaction(CycContext(n))))


@pytest.mark.parametrize("n", range(2, 9))
def test_closed_power_form(n):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    assert rho_power_closed(ctx, 1) == coaction.rho_u
    assert rho_power_closed(ctx, n) == TensorElement.unit(ctx, HA).scale(ctx.omega)
    assert not _failures(rho_power_closed_check(coaction))


def test_closed_power_form_range():
    ctx = CycContext(4)
    with pytest.raises(RangeError):
        rho_power_closed(ctx, 0)
    with pytest.raises(RangeError):
        rho_power_closed(ctx, 5)


def test_coaction_needs_n_coefficients():
    with pytest.raises(RangeError):
        Coaction(CycContext(3), [1, 1])


@pytest.mark.parametrize("n", range(2, 9))
def test_comodule_and_counit_axioms(n):
    coaction = Coaction(CycContext(n))
    assert not _failures(comodule_axiom_check(coaction))
    assert not _failures(counit_axiom_check(coaction))


def test_counit_examples():
    ctx = CycContext(4)
    coaction = Coaction(ctx)
    for m in range(4):
        v = AElement.monomial(ctx, m)
        assert apply_map_to_slot(coaction.rho(v), 0, counit).to_element() == v


@pytest.mark.parametrize("n", range(2, 8))
def test_identity_equation_and_iff_witness(n):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    assert not _failures(identity_equation_check(coaction))
    assert iff_witness(ctx, coaction).passed
    assert not _failures(theorem_main_identity_check(ctx))
    assert not _failures(oracle_chain_check(ctx))


@pytest.mark.parametrize("n", [3, 4, 6])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
def test_rho_is_multiplicative(n, seed):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    rng = random.Random(seed)
    a = random_a_element(ctx, rng)
    b = random_a_element(ctx, rng)
    assert coaction.rho(a * b) == coaction.rho(a) * coaction.rho(b)


@pytest.mark.parametrize("n", range(3, 7))
def test_perturbed_coaction_breaks_the_axiom(n):
    ctx = CycContext(n)
    perturbed = Coaction.perturbed(ctx, index=1)
    assert _failures(comodule_axiom_check(perturbed))
    assert not iff_witness(ctx, perturbed).passed
    # the counit half only sees a_0
    assert not _failures(counit_axiom_check(perturbed))


def test_naive_modulus_misses_the_vanishing_branch():
    naive = CycContext.naive(3)
    failed = [case for case in theorem_main_identity_check(naive) if not case.passed]
    assert failed
    assert all(case.params["k"] + case.params["s"] >= 3 for case in failed)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
