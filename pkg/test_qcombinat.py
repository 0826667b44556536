#!/usr/bin/env python3
"""
Tests for q-integers, Gaussian binomials, composition sums and the series oracles
"""

from math import comb
import logging
import os
import sys

import pytest

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.cyclotomic import CycContext
from shared.errors import DenominatorVanishesError, RangeError
from shared.qcombinat import (
    TruncatedSeries,
    beta_coefficients,
    beta_coefficients_by_inversion,
    composition_sum,
    compositions,
    explicit_series_coefficients,
    gaussian_binomial,
    gaussian_binomial_product_form,
    q_factorial,
    q_integer,
    qbinomial_consistency_check,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_q_integer_examples(n):
    ctx = CycContext(n)
    assert q_integer(ctx, 0) == 0
    assert q_integer(ctx, 1) == 1
    assert q_integer(ctx, n).is_zero()
    assert q_integer(ctx, 2, ctx.omega_pow(-1)) == 1 + ctx.omega_pow(-1)


def test_q_integer_rejects_negative():
    with pytest.raises(RangeError):
        q_integer(CycContext(3), -1)


def test_gaussian_binomial_examples():
    ctx = CycContext(7)
    w = ctx.omega
    for m in range(6):
        assert gaussian_binomial(ctx, m, 0) == 1
    assert gaussian_binomial(ctx, 2, 1) == 1 + w
    assert gaussian_binomial(ctx, 4, 2) == (1 + w ** 2) * (1 + w + w ** 2)
    assert gaussian_binomial(ctx, 3, 5).is_zero()
    assert gaussian_binomial(ctx, 3, -1).is_zero()
    assert gaussian_binomial(CycContext(2), 2, 1).is_zero()


def test_product_form_examples():
    assert gaussian_binomial_product_form(CycContext(5), 0, 3) == 1
    assert gaussian_binomial_product_form(CycContext(2), 1, 1).is_zero()
    ctx3 = CycContext(3)
    assert gaussian_binomial_product_form(ctx3, 1, 1) == 1 + ctx3.omega
    with pytest.raises(DenominatorVanishesError):
        gaussian_binomial_product_form(ctx3, 3, 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_product_form_agrees_with_recurrence(n):
    ctx = CycContext(n)
    for k in range(n):
        for s in range(n):
            assert gaussian_binomial_product_form(ctx, k, s) == gaussian_binomial(ctx, k + s, k), (k, s)


@pytest.mark.parametrize("n", range(2, 9))
def test_pascal_and_symmetry(n):
    cases = qbinomial_consistency_check(CycContext(n))
    failed = [case.case_id for case in cases if not case.passed]
    assert not failed, failed


def test_compositions_lexicographic_and_counted():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    for k in range(6):
        for s in range(5):
            assert len(list(compositions(k, s + 1))) == comb(k + s, s)
    with pytest.raises(RangeError):
        list(compositions(2, 0))


def test_composition_sum_examples():
    ctx5 = CycContext(5)
    for s in range(5):
        assert composition_sum(ctx5, 0, s) == 1
    for k in range(5):
        assert composition_sum(ctx5, k, 0) == 1
    ctx3 = CycContext(3)
    assert composition_sum(ctx3, 1, 1) == 1 + ctx3.omega
    assert composition_sum(CycContext(2), 1, 1).is_zero()


@pytest.mark.parametrize("n", range(2, 11))
def test_main_identity_and_vanishing_branch(n):
    ctx = CycContext(n)
    for k in range(n):
        for s in range(n):
            lhs = composition_sum(ctx, k, s)
            if k + s < n:
                assert lhs == gaussian_binomial(ctx, k + s, k), (k, s)
            else:
                assert lhs.is_zero(), (k, s)


@pytest.mark.parametrize("n", range(2, 11))
def test_three_way_oracle_agreement(n):
    ctx = CycContext(n)
    for s in range(n):
        beta = beta_coefficients(ctx, s)
        explicit = explicit_series_coefficients(ctx, s)
        for k in range(n):
            value = composition_sum(ctx, k, s)
            assert beta[k] == value, (k, s)
            assert explicit[k] == value, (k, s)
            assert gaussian_binomial(ctx, k + s, k) == value, (k, s)


def test_series_examples():
    ctx = CycContext(3)
    for s in range(3):
        assert beta_coefficients(ctx, s)[0] == 1
    assert all(c == 1 for c in beta_coefficients(ctx, 0))
    assert beta_coefficients(ctx, 1)[1] == 1 + ctx.omega
    assert explicit_series_coefficients(ctx, 1)[1] == 1 + ctx.omega
    assert explicit_series_coefficients(CycContext(2), 1)[1].is_zero()


def test_explicit_series_needs_order_below_n():
    with pytest.raises(DenominatorVanishesError):
        explicit_series_coefficients(CycContext(4), 1, order=4)


def test_explicit_series_rejects_negative_s():
    with pytest.raises(RangeError):
        explicit_series_coefficients(CycContext(4), -1)


@pytest.mark.parametrize("n", [3, 5, 6])
def test_q_factorial(n):
    ctx = CycContext(n)
    w = ctx.omega
    assert q_factorial(ctx, 0) == 1
    assert q_factorial(ctx, 3) == (1 + w) * (1 + w + w * w)
    w_inv = ctx.omega_pow(-1)
    assert q_factorial(ctx, 2, w_inv) == 1 + w_inv
    # (n)_w = 0, so every factorial past n-1 vanishes
    assert q_factorial(ctx, n).is_zero()
    assert not q_factorial(ctx, n - 1).is_zero()
    with pytest.raises(RangeError):
        q_factorial(ctx, -1)


@pytest.mark.parametrize("n", [3, 6, 9])
def test_series_inverse_cross_check(n):
    ctx = CycContext(n)
    for s in range(n):
        assert beta_coefficients_by_inversion(ctx, s) == beta_coefficients(ctx, s)
    f = TruncatedSeries.from_coeffs(ctx, 6, [ctx.one, -ctx.omega, ctx.omega_pow(2)])
    assert f * f.inverse() == TruncatedSeries.one(ctx, 6)


def test_series_orders_must_match():
    ctx = CycContext(3)
    with pytest.raises(RangeError):
        TruncatedSeries.one(ctx, 2) * TruncatedSeries.one(ctx, 3)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
