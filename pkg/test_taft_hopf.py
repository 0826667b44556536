#!/usr/bin/env python3
"""
Tests for the Taft Hopf algebra: products, coproduct, counit, antipode and tensors
"""

import logging
import os
import random
import sys

import pytest
from hypothesis import given, settings, strategies as st

# Add the repository root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from shared.cyclotomic import CycContext
from shared.errors import ArityError, ContextMismatchError, KindSignatureError, RangeError
from shared.monomials import KIND_A, KIND_H
from shared.quantum_plane_a import AElement
from shared.taft_hopf import (
    TaftElement,
    TensorElement,
    antipode,
    antipode_inverse,
    apply_map_to_slot,
    check_antipode,
    check_antipode_inverse,
    check_coassociativity,
    check_coproduct_closed_form,
    check_counit,
    check_relation_preservation,
    coproduct,
    counit,
    qbinomial_coproduct_check,
    multiply_slots,
    random_element,
    tensor,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

HH = (KIND_H, KIND_H)


def _failures(cases):
    return [case.case_id + " " + (case.detail or "") for case in cases if not case.passed]


@pytest.mark.parametrize("n", [2, 3, 5])
def test_normal_form_products(n):
    ctx = CycContext(n)
    x, g = TaftElement.x(ctx), TaftElement.g(ctx)
    assert g * x == TaftElement.monomial(ctx, 1, 1, ctx.omega_pow(-1))
    assert x * g == TaftElement.monomial(ctx, 1, 1)
    assert (x ** (n - 1) * x).is_zero()
    assert g ** (n - 1) * g == TaftElement.one(ctx)


def test_constructor_normalizes_and_validates():
    ctx = CycContext(3)
    assert TaftElement.monomial(ctx, 0, -1) == TaftElement.monomial(ctx, 0, 2)
    assert TaftElement.monomial(ctx, 3, 0).is_zero()
    assert TaftElement(ctx, {(1, 0): ctx.zero}).is_zero()
    with pytest.raises(RangeError):
        TaftElement.monomial(ctx, -1, 0)
    with pytest.raises(RangeError):
        TaftElement.x(ctx) ** -1


def test_mixed_contexts_raise():
    with pytest.raises(ContextMismatchError):
        TaftElement.x(CycContext(3)) * TaftElement.x(CycContext(4))


def test_coproduct_on_generators():
    ctx = CycContext(4)
    x, g, one = TaftElement.x(ctx), TaftElement.g(ctx), TaftElement.one(ctx)
    assert coproduct(g) == tensor(g, g)
    assert coproduct(x) == tensor(x, one) + tensor(g, x)


def test_coproduct_of_x_squared():
    ctx = CycContext(4)
    w = ctx.omega
    x, g, one = TaftElement.x(ctx), TaftElement.g(ctx), TaftElement.one(ctx)
    expected = (
        tensor(x ** 2, one)
        + tensor(x * g, x).scale((1 + w) * ctx.omega_pow(-1))
        + tensor(g ** 2, x ** 2)
    )
    assert coproduct(x ** 2) == expected
    assert coproduct(x) ** 2 == expected


def test_counit_examples():
    ctx = CycContext(5)
    g, x = TaftElement.g(ctx), TaftElement.x(ctx)
    for a in range(5):
        assert counit(g ** a) == 1
    assert counit(x).is_zero()
    element = TaftElement.monomial(ctx, 1, 1, 3) + TaftElement.monomial(ctx, 0, 2, 5)
    assert counit(element) == 5


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_antipode_examples(n):
    ctx = CycContext(n)
    assert antipode(TaftElement.g(ctx)) == TaftElement.monomial(ctx, 0, n - 1)
    assert antipode(TaftElement.x(ctx)) == TaftElement.monomial(ctx, 1, n - 1, -ctx.omega)
    assert antipode(TaftElement.one(ctx)) == TaftElement.one(ctx)
    assert antipode_inverse(TaftElement.x(ctx)) == TaftElement.monomial(ctx, 1, n - 1, -1)


def test_tensor_unit_and_slot_maps():
    ctx = CycContext(3)
    x, g = TaftElement.x(ctx), TaftElement.g(ctx)
    u = AElement.u(ctx)
    t = tensor(x, g)
    assert TensorElement.unit(ctx, HH) * t == t
    assert apply_map_to_slot(tensor(g, u), 0, coproduct) == tensor(g, g, u)
    assert apply_map_to_slot(coproduct(x), 1, counit).to_element() == x


def test_tensor_signature_errors():
    ctx = CycContext(3)
    g = TaftElement.g(ctx)
    u = AElement.u(ctx)
    with pytest.raises(KindSignatureError):
        tensor(g, g) + tensor(g, u)
    with pytest.raises(ArityError):
        apply_map_to_slot(tensor(g, g, u), 0, coproduct)
    with pytest.raises(ArityError):
        TensorElement(ctx, (KIND_H, KIND_H, KIND_H, KIND_A))
    with pytest.raises(ArityError):
        tensor(g, g).to_element()


def test_multiply_slots_contracts():
    ctx = CycContext(3)
    g, x = TaftElement.g(ctx), TaftElement.x(ctx)
    assert multiply_slots(tensor(g, x), 0, 1).to_element() == g * x


def test_rendering_is_sorted():
    ctx = CycContext(3)
    assert coproduct(TaftElement.x(ctx)).render() == "g^1 ⊗ x^1 + x^1 ⊗ 1"
    assert TaftElement.zero(ctx).render() == "0"
    assert antipode(TaftElement.x(ctx)).render() == "(-ω) x^1 g^2"


@pytest.mark.parametrize("n", range(2, 7))
def test_hopf_axioms_exhaustive(n):
    ctx = CycContext(n)
    keys = TaftElement.basis_keys(ctx)
    cases = (
        check_coassociativity(ctx, keys)
        + check_counit(ctx, keys)
        + check_antipode(ctx, keys)
        + check_antipode_inverse(ctx, keys)
        + check_coproduct_closed_form(ctx, keys)
        + qbinomial_coproduct_check(ctx)
        + check_relation_preservation(ctx)
    )
    assert len(cases) > 5 * n * n
    assert not _failures(cases)


@pytest.mark.parametrize("n", [3, 5])
@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
def test_delta_and_counit_are_algebra_maps(n, seed):
    ctx = CycContext(n)
    rng = random.Random(seed)
    p = random_element(TaftElement, ctx, rng)
    q = random_element(TaftElement, ctx, rng)
    assert coproduct(p * q) == coproduct(p) * coproduct(q)
    assert counit(p * q) == counit(p) * counit(q)
    assert antipode(p * q) == antipode(q) * antipode(p)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_axioms_for_every_primitive_root(t):
    ctx = CycContext(5, t)
    keys = TaftElement.basis_keys(ctx)
    assert not _failures(check_antipode(ctx, keys) + check_coassociativity(ctx, keys))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
