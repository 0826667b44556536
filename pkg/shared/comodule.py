"""
The coaction rho(u) = sum_i a_i x^i g^-(i+1) ⊗ u^(i+1) making A a left
H-comodule algebra, extended multiplicatively, and the checks around it.
"""
from typing import Dict, List, Optional, Sequence
import logging
import random

from .cyclotomic import CycContext, CycScalar
from .errors import RangeError
from .monomials import KIND_A, KIND_H
from .qcombinat import (
    beta_coefficients,
    beta_coefficients_by_inversion,
    composition_sum,
    gaussian_binomial,
    gaussian_binomial_product_form,
    explicit_series_coefficients,
    weighted_composition_sum,
)
from .quantum_plane_a import AElement, a_coefficient, a_coefficients, random_a_element
from .report import CaseResult, compare_case, make_case
from .taft_hopf import TaftElement, TensorElement, apply_map_to_slot, check_context, coproduct, counit

logger = logging.getLogger(__name__)

HA = (KIND_H, KIND_A)
HHA = (KIND_H, KIND_H, KIND_A)


class Coaction:
    """
    rho: A -> H ⊗ A determined by its value on u.

    The coefficients default to a_i; passing others builds a deliberately
    wrong coaction for negative controls.
    """

    def __init__(self, ctx: CycContext, coefficients: Optional[Sequence[CycScalar]] = None):
        self.ctx = ctx
        n = ctx.n
        coefficients = list(coefficients) if coefficients is not None else a_coefficients(ctx)
        if len(coefficients) != n:
            raise RangeError(f"coaction needs {n} coefficients, got {len(coefficients)}")
        self.coefficients = coefficients
        terms: Dict[tuple, CycScalar] = {}
        for i, a_i in enumerate(coefficients):
            # u^n = w: the i = n-1 term lands on the unit with an extra w
            w_exp, m = divmod(i + 1, n)
            keys = ((i, (-(i + 1)) % n), m)
            terms[keys] = terms.get(keys, ctx.zero) + a_i * ctx.omega_pow(w_exp)
        self.rho_u = TensorElement(ctx, HA, terms)
        self._powers: List[TensorElement] = [TensorElement.unit(ctx, HA)]

    @classmethod
    def perturbed(cls, ctx: CycContext, index: int = 1, factor: Optional[CycScalar] = None) -> "Coaction":
        """a_index multiplied by factor (default w)"""
        coefficients = a_coefficients(ctx)
        coefficients[index] = coefficients[index] * (ctx.omega if factor is None else factor)
        logger.debug(f"Perturbed coaction: n={ctx.n}, a_{index} scaled")
        return cls(ctx, coefficients)

    def rho_power(self, m: int) -> TensorElement:
        """rho(u)^m by repeated tensor multiplication"""
        if m < 0:
            raise RangeError(f"negative power {m}")
        while len(self._powers) <= m:
            self._powers.append(self._powers[-1] * self.rho_u)
        return self._powers[m]

    def rho(self, v: AElement) -> TensorElement:
        check_context(self.ctx, v.ctx)
        out = TensorElement.zero(self.ctx, HA)
        for m, c in v.terms.items():
            out = out + self.rho_power(m).scale(c)
        return out

    __call__ = rho


def rho_power_closed(ctx: CycContext, s: int) -> TensorElement:
    """
    rho(u)^s = sum_k a_k c(k, s) x^k g^-(k+s) ⊗ u^(k+s), where c(k, s) is the
    weighted sum over compositions of k into s parts.
    """
    n = ctx.n
    if not 1 <= s <= n:
        raise RangeError(f"closed power form needs 1 <= s <= n={n}, got {s}")
    terms: Dict[tuple, CycScalar] = {}
    for k in range(n):
        coeff = a_coefficient(ctx, k) * weighted_composition_sum(ctx, k, s)
        w_exp, m = divmod(k + s, n)
        keys = ((k, (-(k + s)) % n), m)
        terms[keys] = terms.get(keys, ctx.zero) + coeff * ctx.omega_pow(w_exp)
    return TensorElement(ctx, HA, terms)


def comodule_axiom_check(coaction: Coaction) -> List[CaseResult]:
    """(Δ⊗id)rho = (id⊗rho)rho, first on u, then on every u^m"""
    ctx = coaction.ctx
    cases = []
    targets = [("target", "u", 1)] + [("m", m, m) for m in range(ctx.n)]
    for label, value, m in targets:
        rho_m = coaction.rho_power(m)
        lhs = apply_map_to_slot(rho_m, 0, coproduct)
        rhs = apply_map_to_slot(rho_m, 1, coaction.rho)
        cases.append(compare_case("comod_axiom", ctx.n, lhs, rhs, **{label: value}))
    return cases


def counit_axiom_check(coaction: Coaction) -> List[CaseResult]:
    """(ε⊗id)rho = id on every u^m"""
    ctx = coaction.ctx
    cases = []
    for m, v in enumerate(AElement.basis(ctx)):
        reduced = apply_map_to_slot(coaction.rho(v), 0, counit).to_element()
        cases.append(compare_case("comod_counit", ctx.n, reduced, v, m=m))
    return cases


def theorem_main_identity_check(ctx: CycContext) -> List[CaseResult]:
    """Composition sum over s+1 parts equals (k+s choose k)_w for k+s < n and 0 otherwise"""
    n = ctx.n
    cases = []
    for k in range(n):
        for s in range(n):
            lhs = composition_sum(ctx, k, s)
            rhs = gaussian_binomial(ctx, k + s, k) if k + s < n else ctx.zero
            cases.append(compare_case("thm_main", n, lhs, rhs, k=k, s=s))
    return cases


def rho_power_closed_check(coaction: Coaction) -> List[CaseResult]:
    ctx = coaction.ctx
    return [
        compare_case("rho_power_closed", ctx.n, rho_power_closed(ctx, s), coaction.rho_power(s), s=s)
        for s in range(1, ctx.n + 1)
    ]


def rho_power_n_check(coaction: Coaction) -> List[CaseResult]:
    ctx = coaction.ctx
    expected = TensorElement.unit(ctx, HA).scale(ctx.omega)
    return [compare_case("rho_power_n", ctx.n, coaction.rho_power(ctx.n), expected)]


def homomorphism_check(coaction: Coaction, rng: random.Random, samples: int) -> List[CaseResult]:
    """rho(ab) = rho(a)rho(b) on random pairs"""
    ctx = coaction.ctx
    cases = []
    for sample in range(samples):
        a = random_a_element(ctx, rng)
        b = random_a_element(ctx, rng)
        cases.append(compare_case("rho_homomorphism", ctx.n, coaction.rho(a * b), coaction.rho(a) * coaction.rho(b), sample=sample))
    return cases


def oracle_chain_check(ctx: CycContext) -> List[CaseResult]:
    """
    For every (k, s): series coefficient = composition sum = Gaussian binomial
    = explicit product coefficient, with the series also obtained by inversion.
    """
    n = ctx.n
    cases = []
    for s in range(n):
        beta = beta_coefficients(ctx, s)
        beta_inv = beta_coefficients_by_inversion(ctx, s)
        explicit = explicit_series_coefficients(ctx, s)
        cases.append(compare_case("series_inverse", n, beta_inv, beta, s=s))
        for k in range(n):
            values = {
                "series": beta[k],
                "compositions": composition_sum(ctx, k, s),
                "qbinomial": gaussian_binomial(ctx, k + s, k),
                "explicit": explicit[k],
                "product_form": gaussian_binomial_product_form(ctx, k, s),
            }
            distinct = {v.coeffs for v in values.values()}
            detail = None
            if len(distinct) != 1:
                detail = " ".join(f"{name}={value}" for name, value in values.items())
            cases.append(make_case("oracle_chain", n, len(distinct) == 1, detail, k=k, s=s))
    return cases


def identity_equation_check(coaction: Coaction) -> List[CaseResult]:
    """
    The comodule axiom on u, written out term by term:
    sum_s a_s x^s g^-(s+1) ⊗ rho(u)^(s+1) = sum_m a_m Δ(x^m g^-(m+1)) ⊗ u^(m+1),
    with rho(u)^(s+1) from the closed form and Δ from the closed coproduct.
    Compared one A-degree at a time.
    """
    ctx = coaction.ctx
    n = ctx.n
    lhs = TensorElement.zero(ctx, HHA)
    rhs = TensorElement.zero(ctx, HHA)
    for i in range(n):
        a_i = coaction.coefficients[i]
        h_part = TaftElement.monomial(ctx, i, -(i + 1), a_i)
        lhs = lhs + _prepend(h_part, rho_power_closed(ctx, i + 1))
        w_exp, m = divmod(i + 1, n)
        u_part = AElement.monomial(ctx, m, ctx.omega_pow(w_exp))
        rhs = rhs + _append(coproduct(h_part), u_part)
    cases = []
    for degree in range(n):
        lhs_slice = {keys: c for keys, c in lhs.terms.items() if keys[2] == degree}
        rhs_slice = {keys: c for keys, c in rhs.terms.items() if keys[2] == degree}
        cases.append(compare_case(
            "identity_eq", n, TensorElement(ctx, HHA, lhs_slice), TensorElement(ctx, HHA, rhs_slice), degree=degree,
        ))
    return cases


def _prepend(h: TaftElement, t: TensorElement) -> TensorElement:
    terms = {}
    for hk, hc in h.terms.items():
        for keys, c in t.terms.items():
            terms[(hk,) + keys] = hc * c
    return TensorElement(t.ctx, (KIND_H,) + t.kinds, terms)


def _append(t: TensorElement, v: AElement) -> TensorElement:
    terms = {}
    for keys, c in t.terms.items():
        for m, vc in v.terms.items():
            terms[keys + (m,)] = c * vc
    return TensorElement(t.ctx, t.kinds + (KIND_A,), terms)


def iff_witness(ctx: CycContext, coaction: Optional[Coaction] = None) -> CaseResult:
    """The comodule axiom and the q-identity must agree, and both pass"""
    coaction = coaction or Coaction(ctx)
    axiom_ok = all(case.passed for case in comodule_axiom_check(coaction))
    identity_ok = all(case.passed for case in theorem_main_identity_check(ctx))
    detail = None
    if not (axiom_ok and identity_ok):
        detail = f"comodule_axiom={'pass' if axiom_ok else 'fail'} identity={'pass' if identity_ok else 'fail'}"
    return make_case("iff_witness", ctx.n, axiom_ok and identity_ok, detail)
