#!/usr/bin/env python3
"""
Tests for the Yetter-Drinfel'd condition and braided commutativity of A
"""

import logging
import os
import sys

import pytest

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.comodule import Coaction
from shared.cyclotomic import CycContext
from shared.quantum_plane_a import AElement, a_coefficients
from shared.taft_hopf import TaftElement
from shared.yetter_drinfeld import (
    braided_commutativity_check,
    braided_commutativity_sweep,
    braided_product,
    displayed_computations_check,
    displayed_yd_values,
    solve_yd_recurrence,
    solve_yd_recurrence_check,
    yd_condition_check,
    yd_full_sweep,
    yd_sides,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _failures(cases):
    return [case.case_id + " " + (case.detail or "") for case in cases if not case.passed]


@pytest.mark.parametrize("n", [2, 4])
def test_unit_acts_trivially(n):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    for v in AElement.basis(ctx):
        lhs, rhs = yd_sides(coaction, TaftElement.one(ctx), v)
        assert lhs == coaction.rho(v)
        assert rhs == coaction.rho(v)


@pytest.mark.parametrize("n", range(2, 9))
def test_displayed_computations(n):
    ctx = CycContext(n)
    coaction = Coaction(ctx)
    assert not _failures(displayed_computations_check(coaction))
    expected = displayed_yd_values(ctx)
    lhs, _ = yd_sides(coaction, TaftElement.x(ctx), AElement.u(ctx))
    assert lhs == expected["x"]


def test_condition_check_renders_both_sides():
    ctx = CycContext(3)
    result = yd_condition_check(Coaction(ctx), TaftElement.g(ctx), AElement.u(ctx))
    assert result["pass"] is True
    assert result["lhs"] == result["rhs"]
    assert "⊗" in result["lhs"]


@pytest.mark.parametrize("n", range(2, 7))
def test_full_sweep_exhaustive(n):
    cases = yd_full_sweep(Coaction(CycContext(n)), exhaustive=True)
    assert len(cases) == n ** 3
    assert not _failures(cases)


@pytest.mark.parametrize("n", [7, 8])
def test_full_sweep_on_generators(n):
    cases = yd_full_sweep(Coaction(CycContext(n)), exhaustive=False)
    assert len(cases) == 2 * n
    assert not _failures(cases)


@pytest.mark.parametrize("n", range(2, 9))
def test_braided_commutativity(n):
    assert not _failures(braided_commutativity_sweep(Coaction(CycContext(n))))


def test_braided_product_at_n_2():
    ctx = CycContext(2)
    coaction = Coaction(ctx)
    u = AElement.u(ctx)
    assert braided_product(coaction, u, u) == u * u
    assert braided_commutativity_check(coaction, AElement.one(ctx), u)
    assert braided_commutativity_check(coaction, u, AElement.one(ctx))


@pytest.mark.parametrize("n", range(3, 7))
def test_perturbed_coaction_fails_the_x_u_case(n):
    ctx = CycContext(n)
    perturbed = Coaction.perturbed(ctx, index=1)
    assert yd_condition_check(perturbed, TaftElement.x(ctx), AElement.u(ctx))["pass"] is False
    assert _failures(yd_full_sweep(perturbed, exhaustive=False))


@pytest.mark.parametrize("n", range(2, 11))
def test_recurrence_recovers_coefficients(n):
    ctx = CycContext(n)
    assert solve_yd_recurrence(ctx) == a_coefficients(ctx)[: n - 1]
    assert not _failures(solve_yd_recurrence_check(ctx))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
