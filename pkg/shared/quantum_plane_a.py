"""
A = k[z]/(z^n - w) with basis 1, u, ..., u^(n-1), the coefficients a_i,
and the left H-module algebra structure g.u = w u, x.u = 1.
"""
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import logging
import random

from .cyclotomic import CycContext, CycScalar
from .errors import RangeError
from .monomials import KIND_A, register_element_type, render_monomial, render_terms
from .qcombinat import q_integer
from .report import CaseResult, compare_case
from .taft_hopf import TaftElement, check_context, coproduct, counit

logger = logging.getLogger(__name__)

Scalarish = Union[CycScalar, int]


@register_element_type
class AElement:
    """Dense coefficient vector: coeffs[m] multiplies u^m"""

    KIND = KIND_A

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycContext, coeffs: Optional[Sequence[Scalarish]] = None):
        n = ctx.n
        values = [ctx.zero] * n
        for m, c in enumerate(coeffs or ()):
            # u^m = w^(m // n) u^(m mod n)
            values[m % n] = values[m % n] + ctx.omega_pow(m // n) * c
        self.ctx = ctx
        self.coeffs: Tuple[CycScalar, ...] = tuple(values)

    @classmethod
    def from_terms(cls, ctx: CycContext, terms: Dict[int, Scalarish]) -> "AElement":
        if not terms:
            return cls(ctx)
        if min(terms) < 0:
            raise RangeError(f"negative power of u in {sorted(terms)}")
        coeffs: List[Scalarish] = [0] * (max(terms) + 1)
        for m, c in terms.items():
            coeffs[m] = c
        return cls(ctx, coeffs)

    @classmethod
    def monomial(cls, ctx: CycContext, m: int, coeff: Scalarish = 1) -> "AElement":
        return cls.from_terms(ctx, {m: coeff})

    @classmethod
    def basis_element(cls, ctx: CycContext, key: int) -> "AElement":
        return cls.monomial(ctx, key)

    @classmethod
    def basis(cls, ctx: CycContext) -> List["AElement"]:
        return [cls.monomial(ctx, m) for m in range(ctx.n)]

    @classmethod
    def one(cls, ctx: CycContext) -> "AElement":
        return cls.monomial(ctx, 0)

    @classmethod
    def u(cls, ctx: CycContext) -> "AElement":
        return cls.monomial(ctx, 1)

    @property
    def terms(self) -> Dict[int, CycScalar]:
        return {m: c for m, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same_kind(self, other) -> bool:
        if not isinstance(other, AElement):
            return False
        check_context(self.ctx, other.ctx)
        return True

    def __add__(self, other):
        if not self._same_kind(other):
            return NotImplemented
        return AElement(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return AElement(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        if not self._same_kind(other):
            return NotImplemented
        return AElement(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c: Scalarish) -> "AElement":
        return AElement(self.ctx, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (CycScalar, int)):
            return self.scale(other)
        if not self._same_kind(other):
            return NotImplemented
        n = self.ctx.n
        prod: List[CycScalar] = [self.ctx.zero] * (2 * n - 1)
        for p, a in enumerate(self.coeffs):
            if a:
                for q, b in enumerate(other.coeffs):
                    if b:
                        prod[p + q] = prod[p + q] + a * b
        return AElement(self.ctx, prod)

    def __rmul__(self, other):
        if isinstance(other, (CycScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "AElement":
        if k < 0:
            raise RangeError(f"negative power {k} in A")
        result = AElement.one(self.ctx)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (CycScalar, int)):
            return self == AElement.one(self.ctx).scale(other)
        if not isinstance(other, AElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    __hash__ = None

    def render(self, ascii: bool = False) -> str:
        return render_terms(
            (c.render(ascii), render_monomial(KIND_A, m)) for m, c in enumerate(self.coeffs) if c
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"AElement(n={self.ctx.n}, {self.render()})"


def random_a_element(ctx: CycContext, rng: random.Random, size: int = 3) -> AElement:
    terms: Dict[int, CycScalar] = {}
    for _ in range(size):
        m = rng.randrange(ctx.n)
        coeff = ctx.omega_pow(rng.randrange(ctx.n)).scale(rng.choice([-3, -2, -1, 1, 2, 3]))
        terms[m] = terms.get(m, ctx.zero) + coeff
    return AElement.from_terms(ctx, terms)


def a_coefficient(ctx: CycContext, i: int) -> CycScalar:
    """a_i = (w - 1)^i w^(i(i+1)/2), any i >= 0"""
    if i < 0:
        raise RangeError(f"a_i needs i >= 0, got {i}")
    return (ctx.omega - 1) ** i * ctx.omega_pow(i * (i + 1) // 2)


def a_coefficients(ctx: CycContext) -> List[CycScalar]:
    return [a_coefficient(ctx, i) for i in range(ctx.n)]


def a_coefficient_identities(ctx: CycContext, rng: Optional[random.Random] = None, samples: int = 8) -> List[CaseResult]:
    """
    Product rule a_r a_s = a_(r+s) w^(-rs), the recurrence
    (sum_{j<=i} w^(j-i)) a_i + a_(i-1) = w^(i+1) a_(i-1) for 1 <= i <= n-1,
    and the product rule for tuples of up to five indices.
    """
    n = ctx.n
    a = [a_coefficient(ctx, i) for i in range(5 * n)]
    cases = []
    for r in range(n + 1):
        for s in range(n + 1):
            cases.append(compare_case("a_product", n, a[r] * a[s], a[r + s] * ctx.omega_pow(-r * s), r=r, s=s))
    for i in range(1, n):
        lhs = ctx.sum(ctx.omega_pow(j - i) for j in range(i + 1)) * a[i] + a[i - 1]
        cases.append(compare_case("a_recurrence", n, lhs, ctx.omega_pow(i + 1) * a[i - 1], i=i))
    rng = rng or random.Random(f"a_tuples:{n}")
    for sample in range(samples):
        indices = [rng.randrange(n) for _ in range(rng.randint(2, 5))]
        lhs = ctx.one
        for r in indices:
            lhs = lhs * a[r]
        cross = sum(indices[i] * indices[j] for j in range(len(indices)) for i in range(j))
        rhs = a[sum(indices)] * ctx.omega_pow(-cross)
        cases.append(compare_case("a_product_tuple", n, lhs, rhs, sample=sample, indices="-".join(map(str, indices))))
    return cases


# --- H acting on A ---

def act_g(v: AElement) -> AElement:
    """g.u^m = w^m u^m"""
    ctx = v.ctx
    return AElement(ctx, [c * ctx.omega_pow(m) for m, c in enumerate(v.coeffs)])


def act_x(v: AElement) -> AElement:
    """x.u^m = (m)_w u^(m-1), x.1 = 0"""
    ctx = v.ctx
    out = [ctx.zero] * ctx.n
    for m in range(1, ctx.n):
        if v.coeffs[m]:
            out[m - 1] = v.coeffs[m] * q_integer(ctx, m)
    return AElement(ctx, out)


@lru_cache(maxsize=8192)
def _monomial_on_basis(ctx: CycContext, b: int, a: int, m: int) -> AElement:
    # x^b g^a acts as b applications of x after a applications of g
    v = AElement.monomial(ctx, m)
    for _ in range(a):
        v = act_g(v)
    for _ in range(b):
        v = act_x(v)
    return v


def h_action(h: TaftElement, v: AElement) -> AElement:
    check_context(h.ctx, v.ctx)
    ctx = v.ctx
    out = AElement(ctx)
    for (b, a), c in h.terms.items():
        for m, vc in enumerate(v.coeffs):
            if vc:
                out = out + _monomial_on_basis(ctx, b, a, m).scale(c * vc)
    return out


def _acting_keys(ctx: CycContext, exhaustive: bool) -> List[Tuple[int, int]]:
    return TaftElement.basis_keys(ctx) if exhaustive else [(0, 1), (1, 0)]


def module_axiom_check(ctx: CycContext, exhaustive: bool = True) -> List[CaseResult]:
    """(pq).v = p.(q.v) over basis monomials p, q (or the generators) and every u^m"""
    cases = []
    keys = _acting_keys(ctx, exhaustive)
    for pk in keys:
        p = TaftElement.basis_element(ctx, pk)
        for qk in keys:
            q = TaftElement.basis_element(ctx, qk)
            pq = p * q
            for m, v in enumerate(AElement.basis(ctx)):
                cases.append(compare_case(
                    "module_assoc", ctx.n, h_action(pq, v), h_action(p, h_action(q, v)),
                    pb=pk[0], pa=pk[1], qb=qk[0], qa=qk[1], m=m,
                ))
    return cases


def module_algebra_check(ctx: CycContext, generators: Iterable[str] = ("g", "x")) -> List[CaseResult]:
    """h.(ab) = sum (h1.a)(h2.b) for h in {g, x} and every basis pair a, b"""
    cases = []
    basis = AElement.basis(ctx)
    for name in generators:
        h = getattr(TaftElement, name)(ctx)
        delta = coproduct(h)
        for p, a in enumerate(basis):
            for q, b in enumerate(basis):
                rhs = AElement(ctx)
                for (k1, k2), c in delta.terms.items():
                    h1 = TaftElement.basis_element(ctx, k1)
                    h2 = TaftElement.basis_element(ctx, k2)
                    rhs = rhs + (h_action(h1, a) * h_action(h2, b)).scale(c)
                cases.append(compare_case("module_algebra", ctx.n, h_action(h, a * b), rhs, h=name, p=p, q=q))
    return cases


def module_relations_check(ctx: CycContext) -> List[CaseResult]:
    """The action respects xg = w gx, g^n = 1, x^n = 0, u^n = w, and h.1 = ε(h)1"""
    n, w = ctx.n, ctx.omega
    cases = []
    for m, v in enumerate(AElement.basis(ctx)):
        cases.append(compare_case("module_relations", n, act_x(act_g(v)), act_g(act_x(v)).scale(w), relation="xg", m=m))
        g_n, x_n = v, v
        for _ in range(n):
            g_n, x_n = act_g(g_n), act_x(x_n)
        cases.append(compare_case("module_relations", n, g_n, v, relation="g^n", m=m))
        cases.append(compare_case("module_relations", n, x_n, AElement(ctx), relation="x^n", m=m))
    # x.u^n by the closed form carries (n)_w, which must vanish since u^n = w.1
    cases.append(compare_case("module_relations", n, q_integer(ctx, n), ctx.zero, relation="u^n"))
    one = AElement.one(ctx)
    for key in TaftElement.basis_keys(ctx):
        h = TaftElement.basis_element(ctx, key)
        cases.append(compare_case(
            "module_unit", n, h_action(h, one), one.scale(counit(h)), b=key[0], a=key[1],
        ))
    return cases


def commutativity_check(ctx: CycContext) -> List[CaseResult]:
    cases = []
    basis = AElement.basis(ctx)
    for p, a in enumerate(basis):
        for q, b in enumerate(basis):
            if p <= q:
                cases.append(compare_case("a_commutative", ctx.n, a * b, b * a, p=p, q=q))
    return cases
