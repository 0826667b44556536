#!/usr/bin/env python3
"""
Tests for A = k[z]/(z^n - w), the coefficients a_i and the H-module algebra structure
"""

import logging
import os
import sys

import pytest

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.cyclotomic import CycContext
from shared.errors import RangeError
from shared.quantum_plane_a import (
    AElement,
    a_coefficient,
    a_coefficient_identities,
    act_g,
    act_x,
    commutativity_check,
    h_action,
    module_algebra_check,
    module_axiom_check,
    module_relations_check,
)
from shared.taft_hopf import TaftElement

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _failures(cases):
    return [case.case_id + " " + (case.detail or "") for case in cases if not case.passed]


@pytest.mark.parametrize("n", [2, 3, 6])
def test_u_to_the_n_is_omega(n):
    ctx = CycContext(n)
    u = AElement.u(ctx)
    assert u ** n == AElement.one(ctx).scale(ctx.omega)
    assert AElement.monomial(ctx, n + 1) == u.scale(ctx.omega)


def test_negative_power_rejected():
    with pytest.raises(RangeError):
        AElement.from_terms(CycContext(3), {-1: 1})


def test_a_coefficient_examples():
    ctx = CycContext(5)
    w = ctx.omega
    assert a_coefficient(ctx, 0) == 1
    assert a_coefficient(ctx, 1) == (w - 1) * w
    assert a_coefficient(ctx, 1) ** 2 == a_coefficient(ctx, 2) * ctx.omega_pow(-1)
    assert a_coefficient(CycContext(2), 1) == 2
    with pytest.raises(RangeError):
        a_coefficient(ctx, -1)


@pytest.mark.parametrize("n", range(2, 11))
def test_a_coefficient_identities(n):
    assert not _failures(a_coefficient_identities(CycContext(n)))


def test_generator_actions():
    ctx = CycContext(4)
    u = AElement.u(ctx)
    one = AElement.one(ctx)
    g, x = TaftElement.g(ctx), TaftElement.x(ctx)
    assert h_action(g, u) == u.scale(ctx.omega)
    assert h_action(x, u) == one
    assert h_action(x, one).is_zero()
    assert h_action(x, u ** 2) == u.scale(1 + ctx.omega)
    assert act_g(u) == h_action(g, u)
    assert act_x(u ** 3) == h_action(x, u ** 3)


def test_monomial_acts_g_first_then_x():
    ctx = CycContext(5)
    v = AElement.monomial(ctx, 3)
    xg = TaftElement.monomial(ctx, 1, 1)
    assert h_action(xg, v) == act_x(act_g(v))


@pytest.mark.parametrize("n", range(2, 6))
def test_module_axiom_exhaustive(n):
    assert not _failures(module_axiom_check(CycContext(n), exhaustive=True))


@pytest.mark.parametrize("n", range(2, 9))
def test_module_algebra_relations_and_commutativity(n):
    ctx = CycContext(n)
    cases = module_algebra_check(ctx) + module_relations_check(ctx) + commutativity_check(ctx)
    assert not _failures(cases)


def test_x_applied_n_times_vanishes():
    ctx = CycContext(6)
    for m in range(6):
        v = AElement.monomial(ctx, m)
        for _ in range(6):
            v = act_x(v)
        assert v.is_zero()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
