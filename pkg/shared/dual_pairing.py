"""
H* = <X, G | G^n = ε, X^n = 0, XG = w GX>, the Hopf pairing with H, and the
generator relations of the double acting on A.

The pairing is computed on words, one generator at a time:

    <F F', h>  = sum <F, h1> <F', h2>
    <F, h k>   = sum <F1, h> <F2, k>

from <G, g> = w^-1, <X, x> = 1, <G, x> = <X, g> = 0 and the counits.
"""
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple
import logging

from .cyclotomic import CycContext, CycScalar
from .monomials import KIND_HSTAR, register_element_type
from .qcombinat import q_factorial, q_integer
from .quantum_plane_a import AElement, a_coefficient, act_g, act_x
from .comodule import Coaction
from .report import CaseResult, compare_case, make_case
from .taft_hopf import TaftElement, antipode, antipode_inverse, check_context

logger = logging.getLogger(__name__)

CONVENTIONS = ("plain", "antipode", "inverse_antipode", "cop_substitution")


@register_element_type
class DualElement(TaftElement):
    """sum of c_{b,a} X^b G^a in H*"""

    KIND = KIND_HSTAR
    SYMBOLS = ("X", "G")

    __slots__ = ()

    @classmethod
    def X(cls, ctx: CycContext) -> "DualElement":
        return cls.x(ctx)

    @classmethod
    def G(cls, ctx: CycContext) -> "DualElement":
        return cls.g(ctx)


# --- pairing on words ---

def _dual_word(b: int, a: int) -> str:
    return "X" * b + "G" * a


def _taft_word(b: int, a: int) -> str:
    return "x" * b + "g" * a


def _split_word(h: str) -> Iterator[Tuple[str, str]]:
    """Δ of a word in x, g: g -> g ⊗ g, x -> x ⊗ 1 + g ⊗ x, expanded letter by letter"""
    choices = [(("g", "g"),) if letter == "g" else (("x", ""), ("g", "x")) for letter in h]
    for picks in product(*choices):
        yield "".join(p[0] for p in picks), "".join(p[1] for p in picks)


_DUAL_SPLITS = {"G": (("G", "G"),), "X": (("X", ""), ("G", "X"))}


@lru_cache(maxsize=65536)
def pair_words(ctx: CycContext, F: str, h: str) -> CycScalar:
    if not F:
        return ctx.zero if "x" in h else ctx.one
    if not h:
        return ctx.zero if "X" in F else ctx.one
    if len(F) == 1 and len(h) == 1:
        if F == "G":
            return ctx.omega_pow(-1) if h == "g" else ctx.zero
        return ctx.one if h == "x" else ctx.zero
    total = ctx.zero
    if len(F) > 1:
        head, rest = F[0], F[1:]
        for h1, h2 in _split_word(h):
            left = pair_words(ctx, head, h1)
            if left:
                total = total + left * pair_words(ctx, rest, h2)
        return total
    first, rest = h[0], h[1:]
    for f1, f2 in _DUAL_SPLITS[F]:
        left = pair_words(ctx, f1, first)
        if left:
            total = total + left * pair_words(ctx, f2, rest)
    return total


def pairing(F: DualElement, h: TaftElement) -> CycScalar:
    """Bilinear pairing <F, h>"""
    check_context(F.ctx, h.ctx)
    if not isinstance(F, DualElement) or isinstance(h, DualElement):
        raise TypeError("pairing expects (DualElement, TaftElement)")
    ctx = F.ctx
    total = ctx.zero
    for (b, a), cF in F.terms.items():
        for (d, c), ch in h.terms.items():
            value = pair_words(ctx, _dual_word(b, a), _taft_word(d, c))
            if value:
                total = total + cF * ch * value
    return total


def pairing_base_cases_check(ctx: CycContext) -> List[CaseResult]:
    n = ctx.n
    G, X = DualElement.G(ctx), DualElement.X(ctx)
    g, x = TaftElement.g(ctx), TaftElement.x(ctx)
    one_h, one_d = TaftElement.one(ctx), DualElement.one(ctx)
    table = [
        ("G", "g", G, g, ctx.omega_pow(-1)),
        ("G", "x", G, x, ctx.zero),
        ("X", "g", X, g, ctx.zero),
        ("X", "x", X, x, ctx.one),
        ("G", "1", G, one_h, ctx.one),
        ("X", "1", X, one_h, ctx.zero),
        ("1", "g", one_d, g, ctx.one),
        ("1", "x", one_d, x, ctx.zero),
    ]
    cases = [compare_case("pairing_base", n, pairing(Fe, he), expected, F=fn, h=hn) for fn, hn, Fe, he, expected in table]
    for a in range(n):
        for c in range(n):
            cases.append(compare_case(
                "pairing_grouplike", n, pairing(G ** a, g ** c), ctx.omega_pow(-a * c), a=a, c=c,
            ))
    w_inv = ctx.omega_pow(-1)
    for k in range(n):
        cases.append(compare_case("pairing_nilpotent", n, pairing(X ** k, x ** k), q_factorial(ctx, k, w_inv), k=k))
    return cases


def pairing_welldefined_check(ctx: CycContext) -> List[CaseResult]:
    """The defining relations of either side pair to zero against every basis element"""
    n, w = ctx.n, ctx.omega
    cases = []
    for b, a in TaftElement.basis_keys(ctx):
        F = _dual_word(b, a)
        h = _taft_word(b, a)
        rel_h = {
            "xg": pair_words(ctx, F, "xg") - w * pair_words(ctx, F, "gx"),
            "x^n": pair_words(ctx, F, "x" * n),
            "g^n": pair_words(ctx, F, "g" * n) - pair_words(ctx, F, ""),
        }
        rel_F = {
            "XG": pair_words(ctx, "XG", h) - w * pair_words(ctx, "GX", h),
            "X^n": pair_words(ctx, "X" * n, h),
            "G^n": pair_words(ctx, "G" * n, h) - pair_words(ctx, "", h),
        }
        for name, value in rel_h.items():
            cases.append(compare_case("pairing_welldef", n, value, ctx.zero, side="H", relation=name, b=b, a=a))
        for name, value in rel_F.items():
            cases.append(compare_case("pairing_welldef", n, value, ctx.zero, side="Hdual", relation=name, b=b, a=a))
    # the only pairing that sees x^n against X^n: (n)!_{w^-1} = 0
    cases.append(compare_case("pairing_welldef", n, pair_words(ctx, "X" * n, "x" * n), ctx.zero, side="both", relation="x^n"))
    return cases


def pairing_antipode_check(ctx: CycContext) -> List[CaseResult]:
    """<S(F), h> = <F, S(h)> on all basis pairs"""
    n = ctx.n
    cases = []
    for fb, fa in TaftElement.basis_keys(ctx):
        F = DualElement.monomial(ctx, fb, fa)
        S_F = antipode(F)
        for hb, ha in TaftElement.basis_keys(ctx):
            h = TaftElement.monomial(ctx, hb, ha)
            cases.append(compare_case(
                "pairing_antipode", n, pairing(S_F, h), pairing(F, antipode(h)), fb=fb, fa=fa, hb=hb, ha=ha,
            ))
    return cases


# --- Gram matrix ---

def gram_matrix(ctx: CycContext, keys: Optional[Sequence[Tuple[int, int]]] = None,
                h_keys: Optional[Sequence[Tuple[int, int]]] = None) -> List[List[CycScalar]]:
    keys = keys if keys is not None else TaftElement.basis_keys(ctx)
    h_keys = h_keys if h_keys is not None else TaftElement.basis_keys(ctx)
    return [[pair_words(ctx, _dual_word(*fk), _taft_word(*hk)) for hk in h_keys] for fk in keys]


def exact_rank_and_determinant(ctx: CycContext, matrix: List[List[CycScalar]]) -> Tuple[int, CycScalar]:
    """Gaussian elimination over Q(w); determinant is 0 unless the matrix is square of full rank"""
    rows = [list(row) for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    det = ctx.one
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if pivot is None:
            det = ctx.zero
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            det = -det
        pivot_value = rows[rank][col]
        det = det * pivot_value
        inv = pivot_value.inverse()
        for r in range(rank + 1, n_rows):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
    if n_rows != n_cols or rank != n_rows:
        det = ctx.zero
    return rank, det


def pairing_nondegeneracy(ctx: CycContext) -> Dict[str, object]:
    """Rank of the full Gram matrix and the determinant of its grouplike block"""
    n = ctx.n
    rank, _ = exact_rank_and_determinant(ctx, gram_matrix(ctx))
    grouplikes = [(0, a) for a in range(n)]
    _, det = exact_rank_and_determinant(ctx, gram_matrix(ctx, grouplikes, grouplikes))
    return {"rank": rank, "full_rank": rank == n * n, "grouplike_det": det}


def pairing_nondegeneracy_check(ctx: CycContext) -> List[CaseResult]:
    n = ctx.n
    result = pairing_nondegeneracy(ctx)
    det = result["grouplike_det"]
    return [
        make_case("pairing_gram_rank", n, result["full_rank"], f"rank={result['rank']} of {n * n}"),
        make_case("pairing_grouplike_det", n, not det.is_zero(), f"det={det}"),
    ]


# --- generators of the double acting on A ---

def act_G(v: AElement) -> AElement:
    """G.u^m = w^-m u^m"""
    ctx = v.ctx
    return AElement(ctx, [c * ctx.omega_pow(-m) for m, c in enumerate(v.coeffs)])


@lru_cache(maxsize=4096)
def _X_on_basis(ctx: CycContext, m: int) -> AElement:
    if m == 0:
        return AElement(ctx)
    # X.(u u^(m-1)) = (X.u) u^(m-1) + (G.u)(X.u^(m-1))
    x_u = AElement.monomial(ctx, 2, ctx.omega_pow(-1) - 1)
    g_u = AElement.monomial(ctx, 1, ctx.omega_pow(-1))
    return x_u * AElement.monomial(ctx, m - 1) + g_u * _X_on_basis(ctx, m - 1)


def act_X(v: AElement) -> AElement:
    ctx = v.ctx
    out = AElement(ctx)
    for m, c in v.terms.items():
        out = out + _X_on_basis(ctx, m).scale(c)
    return out


def double_relations_check(ctx: CycContext) -> List[CaseResult]:
    """gG = Gg, xG = w^-1 Gx, Xg = w^-1 gX, xX - Xx = G - g as operators on every u^m"""
    n = ctx.n
    w_inv = ctx.omega_pow(-1)
    cases = []
    for m, v in enumerate(AElement.basis(ctx)):
        cases.append(compare_case("double_rel", n, act_g(act_G(v)), act_G(act_g(v)), relation="gG", m=m))
        cases.append(compare_case("double_rel", n, act_x(act_G(v)), act_G(act_x(v)).scale(w_inv), relation="xG", m=m))
        cases.append(compare_case("double_rel", n, act_X(act_g(v)), act_g(act_X(v)).scale(w_inv), relation="Xg", m=m))
        cases.append(compare_case(
            "double_rel", n, act_x(act_X(v)) - act_X(act_x(v)), act_G(v) - act_g(v), relation="xX-Xx", m=m,
        ))
    return cases


def x_closed_form_check(ctx: CycContext) -> List[CaseResult]:
    """X.u^m = (w^-1 - 1)(m)_{w^-1} u^(m+1)"""
    w_inv = ctx.omega_pow(-1)
    cases = []
    for m, v in enumerate(AElement.basis(ctx)):
        closed = AElement.monomial(ctx, m + 1, (w_inv - 1) * q_integer(ctx, m, w_inv))
        cases.append(compare_case("x_closed_form", ctx.n, act_X(v), closed, m=m))
    return cases


def coefficient_forms_check(ctx: CycContext) -> List[CaseResult]:
    """((1 - w^-1) w)^m w^(m(m+1)/2) = (w - 1)^m w^(m(m+1)/2) = a_m"""
    w = ctx.omega
    cases = []
    for m in range(ctx.n):
        twist = ctx.omega_pow(m * (m + 1) // 2)
        dual_form = ((1 - ctx.omega_pow(-1)) * w) ** m * twist
        direct_form = (w - 1) ** m * twist
        cases.append(compare_case("coeff_forms", ctx.n, dual_form, a_coefficient(ctx, m), m=m, form="dual"))
        cases.append(compare_case("coeff_forms", ctx.n, direct_form, a_coefficient(ctx, m), m=m, form="direct"))
    return cases


# --- dualizing the coaction ---

def _cop_substitution(F: DualElement) -> DualElement:
    """Linear map on the X^b G^a basis: X^b G^a -> (X G^-1)^b G^-a"""
    ctx = F.ctx
    K = DualElement.monomial(ctx, 0, ctx.n - 1)
    Y = DualElement.X(ctx) * K
    out = DualElement.zero(ctx)
    for (b, a), c in F.terms.items():
        out = out + ((Y ** b) * (K ** a)).scale(c)
    return out


def convention_map(name: str) -> Callable[[DualElement], DualElement]:
    return {
        "plain": lambda F: F,
        "antipode": antipode,
        "inverse_antipode": antipode_inverse,
        "cop_substitution": _cop_substitution,
    }[name]


def induced_action(coaction: Coaction, convention: str, F: DualElement, v: AElement) -> AElement:
    """F.v = sum <T(F), v_-1> v_0 for the convention's map T"""
    ctx = coaction.ctx
    transformed = convention_map(convention)(F)
    out = AElement(ctx)
    for (hk, m), c in coaction.rho(v).terms.items():
        value = pairing(transformed, TaftElement.basis_element(ctx, hk))
        if value:
            out = out + AElement.monomial(ctx, m, c * value)
    return out


def dual_action_consistency(coaction: Coaction) -> Dict[str, Dict[str, object]]:
    """Per convention: the induced G.u and X.u and whether they are w^-1 u and (w^-1 - 1)u^2"""
    ctx = coaction.ctx
    u = AElement.u(ctx)
    target_G = act_G(u)
    target_X = act_X(u)
    results = {}
    for name in CONVENTIONS:
        G_u = induced_action(coaction, name, DualElement.G(ctx), u)
        X_u = induced_action(coaction, name, DualElement.X(ctx), u)
        results[name] = {"G.u": G_u, "X.u": X_u, "matches": G_u == target_G and X_u == target_X}
    return results


def dual_action_consistency_check(coaction: Coaction) -> List[CaseResult]:
    ctx = coaction.ctx
    n = ctx.n
    results = dual_action_consistency(coaction)
    cases = []
    for name, result in results.items():
        detail = f"G.u = {result['G.u']}; X.u = {result['X.u']}"
        cases.append(make_case("dual_convention", n, True, detail, convention=name, matches=result["matches"]))
    matching = [name for name, result in results.items() if result["matches"]]
    logger.debug(f"Dualization conventions matching at n={n}: {matching}")
    cases.append(make_case("dual_convention_any", n, bool(matching), "matching: " + (", ".join(matching) or "none")))
    for name in matching:
        for m, v in enumerate(AElement.basis(ctx)):
            cases.append(compare_case(
                "dual_convention_extension", n, induced_action(coaction, name, DualElement.G(ctx), v), act_G(v),
                convention=name, generator="G", m=m,
            ))
            cases.append(compare_case(
                "dual_convention_extension", n, induced_action(coaction, name, DualElement.X(ctx), v), act_X(v),
                convention=name, generator="X", m=m,
            ))
    return cases


def cop_generator_relations(ctx: CycContext) -> List[CaseResult]:
    """K = G^-1, Y = X G^-1: K^n = ε, Y^n = 0, YK = w^-1 KY"""
    n = ctx.n
    K = DualElement.monomial(ctx, 0, n - 1)
    Y = DualElement.X(ctx) * K
    return [
        compare_case("cop_generators", n, K ** n, DualElement.one(ctx), relation="K^n"),
        compare_case("cop_generators", n, Y ** n, DualElement.zero(ctx), relation="Y^n"),
        compare_case("cop_generators", n, Y * K, (K * Y).scale(ctx.omega_pow(-1)), relation="YK"),
    ]
