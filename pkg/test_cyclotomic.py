#!/usr/bin/env python3
"""
Tests for exact arithmetic in Q(w) = Q[x]/Phi_n
"""

from fractions import Fraction
import logging
import os
import sys

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, cyclotomic_poly as sympy_cyclotomic_poly, symbols

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.cyclotomic import CycContext, cyclotomic_poly, primitivity_check, render_poly
from shared.errors import ContextMismatchError, InvalidOrderError, InvalidRootError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@pytest.mark.parametrize("n, expected", [
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
])
def test_cyclotomic_poly_small_orders(n, expected):
    assert cyclotomic_poly(n) == tuple(Fraction(c) for c in expected)


@pytest.mark.parametrize("n", range(2, 16))
def test_cyclotomic_poly_matches_sympy(n):
    x = symbols("x")
    reference = [int(c) for c in reversed(Poly(sympy_cyclotomic_poly(n, x), x).all_coeffs())]
    assert [int(c) for c in cyclotomic_poly(n)] == reference


@pytest.mark.parametrize("n", [1, 0, -3])
def test_invalid_order_rejected(n):
    with pytest.raises(InvalidOrderError):
        cyclotomic_poly(n)
    with pytest.raises(InvalidOrderError):
        CycContext(n)


def test_root_exponent_must_be_coprime():
    with pytest.raises(InvalidRootError):
        CycContext(6, 2)
    ctx = CycContext(5, 7)
    assert ctx.root_exponent == 2
    assert ctx.omega == ctx.zeta_pow(2)
    assert ctx.symbol == "ζ"


@pytest.mark.parametrize("n", range(2, 13))
def test_omega_pow_reduces_mod_n(n):
    ctx = CycContext(n)
    assert ctx.omega_pow(n) == ctx.one
    assert ctx.omega_pow(n + 1) == ctx.omega
    assert ctx.omega_pow(-1) * ctx.omega == 1


def test_minimal_relations_hold():
    ctx2 = CycContext(2)
    assert (1 + ctx2.omega).is_zero()
    ctx4 = CycContext(4)
    assert (ctx4.omega_pow(2) + 1).is_zero()


@pytest.mark.parametrize("n", range(2, 13))
def test_primitivity(n):
    ctx = CycContext(n)
    for k in range(1, n):
        assert not (1 - ctx.omega_pow(k)).is_zero(), f"1 - w^{k} vanished at n={n}"
    assert (1 - ctx.omega_pow(n)).is_zero()
    assert all(case.passed for case in primitivity_check(ctx))


def test_inverse_examples():
    ctx3 = CycContext(3)
    assert (1 - ctx3.omega).inverse() == ctx3.scalar([Fraction(2, 3), Fraction(1, 3)])
    ctx2 = CycContext(2)
    assert (1 - ctx2.omega).inverse() == ctx2.from_rational(Fraction(1, 2))
    assert ctx3.one.inverse() == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycContext(5).zero.inverse()


def test_mixed_contexts_raise():
    with pytest.raises(ContextMismatchError):
        CycContext(3).omega + CycContext(4).omega
    with pytest.raises(ContextMismatchError):
        CycContext(5, 1).omega * CycContext(5, 2).omega


def test_rendering():
    ctx = CycContext(3)
    value = 1 + ctx.omega
    assert value.render() == "1+ω"
    assert value.render(ascii=True) == "1+w"
    assert ctx.zero.render() == "0"
    assert render_poly([Fraction(-1), 0, Fraction(1, 2)], "w") == "-1+1/2*w^2"


def test_canonical_form_is_idempotent():
    ctx = CycContext(7)
    value = (ctx.omega - 3) ** 5 / (ctx.omega_pow(3) + 2)
    assert ctx.scalar(list(value.coeffs)) == value
    assert len(value.coeffs) == ctx.degree


def test_context_exposes_phi_n():
    ctx = CycContext(6)
    assert ctx.phi_n == (Fraction(1), Fraction(-1), Fraction(1))
    assert ctx.modulus == ctx.phi_n
    assert ctx.check_invariants()["modulus_is_phi_n"]
    assert CycContext.naive(6).phi_n == ctx.phi_n

def test_naive_modulus_has_zero_divisors():
    naive = CycContext.naive(3)
    left = 1 - naive.omega
    right = 1 + naive.omega + naive.omega_pow(2)
    assert not left.is_zero()
    assert not right.is_zero()
    assert (left * right).is_zero()
    assert not naive.check_invariants()["degree_is_totient"]
    assert not naive.check_invariants()["modulus_is_phi_n"]
    assert not all(case.passed for case in primitivity_check(naive))

    exact = CycContext(3)
    assert (1 + exact.omega + exact.omega_pow(2)).is_zero()


def _scalars(ctx):
    coefficient = st.fractions(min_value=-4, max_value=4, max_denominator=4)
    return st.lists(coefficient, min_size=ctx.degree, max_size=ctx.degree).map(ctx.scalar)


@pytest.mark.parametrize("n", [3, 5, 8, 12])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(n, data):
    ctx = CycContext(n)
    a = data.draw(_scalars(ctx))
    b = data.draw(_scalars(ctx))
    c = data.draw(_scalars(ctx))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b - b == a
    if not a.is_zero():
        assert a * a.inverse() == ctx.one
        assert (b / a) * a == b


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
