"""
q-integers, Gaussian binomials at w, weighted composition sums and the
truncated power-series oracles used to certify the main q-identity.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Optional, Tuple
import logging

from .cyclotomic import CycContext, CycScalar
from .errors import DenominatorVanishesError, RangeError
from .report import CaseResult, compare_case

logger = logging.getLogger(__name__)


def default_order(ctx: CycContext) -> int:
    """Truncation degree covering every (k, s) with 0 <= k, s <= n-1"""
    return 2 * ctx.n - 2


def q_integer(ctx: CycContext, m: int, q: Optional[CycScalar] = None) -> CycScalar:
    """(m)_q = 1 + q + ... + q^(m-1); q defaults to w"""
    if m < 0:
        raise RangeError(f"q-integer needs m >= 0, got {m}")
    if q is None:
        return ctx.sum(ctx.omega_pow(j) for j in range(m))
    total, power = ctx.zero, ctx.one
    for _ in range(m):
        total = total + power
        power = power * q
    return total


def q_factorial(ctx: CycContext, k: int, q: Optional[CycScalar] = None) -> CycScalar:
    """(k)!_q = (1)_q (2)_q ... (k)_q"""
    if k < 0:
        raise RangeError(f"q-factorial needs k >= 0, got {k}")
    result = ctx.one
    for j in range(1, k + 1):
        result = result * q_integer(ctx, j, q)
    return result


@lru_cache(maxsize=4096)
def _pascal_row(ctx: CycContext, m: int) -> Tuple[CycScalar, ...]:
    if m == 0:
        return (ctx.one,)
    prev = _pascal_row(ctx, m - 1)
    row = [ctx.one]
    for k in range(1, m):
        # C(m,k) = C(m-1,k-1) + w^k C(m-1,k)
        row.append(prev[k - 1] + ctx.omega_pow(k) * prev[k])
    row.append(ctx.one)
    return tuple(row)


def gaussian_binomial(ctx: CycContext, m: int, k: int) -> CycScalar:
    """
    (m choose k)_w by the division-free Pascal recurrence.

    Out-of-range k (k < 0 or k > m) gives 0.
    """
    if m < 0:
        raise RangeError(f"gaussian binomial needs m >= 0, got {m}")
    if k < 0 or k > m:
        return ctx.zero
    return _pascal_row(ctx, m)[k]


def gaussian_binomial_product_form(ctx: CycContext, k: int, s: int) -> CycScalar:
    """(1-w^(s+1))...(1-w^(s+k)) / ((1-w)...(1-w^k)); defined for k <= n-1"""
    if k < 0 or s < 0:
        raise RangeError(f"product form needs k, s >= 0, got k={k}, s={s}")
    if k >= ctx.n:
        raise DenominatorVanishesError(
            f"(1-w)...(1-w^{k}) vanishes for k={k} >= n={ctx.n}"
        )
    numerator, denominator = ctx.one, ctx.one
    for j in range(1, k + 1):
        numerator = numerator * (ctx.one - ctx.omega_pow(s + j))
        denominator = denominator * (ctx.one - ctx.omega_pow(j))
    return numerator / denominator


def compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All (i_1, ..., i_parts) >= 0 summing to k, lexicographic on the tuple"""
    if parts < 1:
        raise RangeError(f"need at least one part, got {parts}")
    # stars and bars: bar positions in lexicographic order
    total = k + parts - 1
    for bars in combinations(range(total), parts - 1):
        bounds = (-1,) + bars + (total,)
        yield tuple(bounds[j + 1] - bounds[j] - 1 for j in range(parts))


def composition_exponent(composition: Tuple[int, ...]) -> int:
    # sum over j >= 2 of i_j (j - 1), with j 1-based
    return sum(j * i_j for j, i_j in enumerate(composition))


@lru_cache(maxsize=4096)
def weighted_composition_sum(ctx: CycContext, k: int, parts: int) -> CycScalar:
    """Sum of w^(sum_{j>=2} i_j (j-1)) over compositions of k into `parts` parts"""
    counts = [0] * ctx.n
    for composition in compositions(k, parts):
        counts[composition_exponent(composition) % ctx.n] += 1
    total = ctx.zero
    for r, count in enumerate(counts):
        if count:
            total = total + ctx.omega_pow(r).scale(count)
    return total


def composition_sum(ctx: CycContext, k: int, s: int) -> CycScalar:
    """Left side of the main q-identity: compositions of k into s+1 parts"""
    if k < 0 or s < 0:
        raise RangeError(f"composition sum needs k, s >= 0, got k={k}, s={s}")
    return weighted_composition_sum(ctx, k, s + 1)


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series in z over Q(w), kept up to and including z^order"""
    ctx: CycContext
    order: int
    coeffs: Tuple[CycScalar, ...]

    @classmethod
    def from_coeffs(cls, ctx: CycContext, order: int, coeffs) -> "TruncatedSeries":
        coeffs = list(coeffs)[: order + 1]
        coeffs += [ctx.zero] * (order + 1 - len(coeffs))
        return cls(ctx, order, tuple(coeffs))

    @classmethod
    def one(cls, ctx: CycContext, order: int) -> "TruncatedSeries":
        return cls.from_coeffs(ctx, order, [ctx.one])

    @classmethod
    def geometric(cls, ctx: CycContext, ratio: CycScalar, order: int) -> "TruncatedSeries":
        """1 / (1 - ratio z) truncated"""
        coeffs, power = [], ctx.one
        for _ in range(order + 1):
            coeffs.append(power)
            power = power * ratio
        return cls(ctx, order, tuple(coeffs))

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise RangeError(f"truncation orders differ: {self.order} vs {other.order}")

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = []
        for k in range(self.order + 1):
            out.append(self.ctx.sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)))
        return TruncatedSeries(self.ctx, self.order, tuple(out))

    def inverse(self) -> "TruncatedSeries":
        """h with self * h = 1 up to z^order; needs an invertible constant term"""
        c0_inv = self.coeffs[0].inverse()
        h = [c0_inv]
        for k in range(1, self.order + 1):
            acc = self.ctx.sum(self.coeffs[i] * h[k - i] for i in range(1, k + 1))
            h.append(-(acc * c0_inv))
        return TruncatedSeries(self.ctx, self.order, tuple(h))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None


def beta_series(ctx: CycContext, s: int, order: Optional[int] = None) -> TruncatedSeries:
    """1 / ((1-z)(1-zw)...(1-zw^s)) as a product of truncated geometric series"""
    if s < 0:
        raise RangeError(f"beta series needs s >= 0, got {s}")
    order = default_order(ctx) if order is None else order
    series = TruncatedSeries.one(ctx, order)
    for l in range(1, s + 2):
        series = series * TruncatedSeries.geometric(ctx, ctx.omega_pow(l - 1), order)
    return series


def beta_coefficients(ctx: CycContext, s: int, order: Optional[int] = None) -> List[CycScalar]:
    return list(beta_series(ctx, s, order).coeffs)


def beta_coefficients_by_inversion(ctx: CycContext, s: int, order: Optional[int] = None) -> List[CycScalar]:
    """Same coefficients, obtained by inverting the polynomial prod (1 - w^(l-1) z)"""
    order = default_order(ctx) if order is None else order
    poly = TruncatedSeries.one(ctx, order)
    for l in range(1, s + 2):
        factor = TruncatedSeries.from_coeffs(ctx, order, [ctx.one, -ctx.omega_pow(l - 1)])
        poly = poly * factor
    return list(poly.inverse().coeffs)


def explicit_series_coefficients(ctx: CycContext, s: int, order: Optional[int] = None) -> List[CycScalar]:
    """Explicit coefficients prod_{j=1..k} (1-w^(s+j))/(1-w^j), k = 0..order, order <= n-1"""
    if s < 0:
        raise RangeError(f"explicit series needs s >= 0, got {s}")
    order = ctx.n - 1 if order is None else order
    if order >= ctx.n:
        raise DenominatorVanishesError(
            f"explicit series coefficient k={order} divides by 1-w^n = 0 (n={ctx.n})"
        )
    out, current = [ctx.one], ctx.one
    for j in range(1, order + 1):
        current = current * (ctx.one - ctx.omega_pow(s + j)) / (ctx.one - ctx.omega_pow(j))
        out.append(current)
    return out


def qbinomial_consistency_check(ctx: CycContext) -> List[CaseResult]:
    """
    Second Pascal recurrence C(m,k) = w^(m-k) C(m-1,k-1) + C(m-1,k), symmetry
    C(m,k) = C(m,m-k) for m <= 2n-2, and (m)_w = (1-w^m)/(1-w) for m <= n.
    """
    n = ctx.n
    cases = []
    for m in range(1, 2 * n - 1):
        for k in range(m + 1):
            value = gaussian_binomial(ctx, m, k)
            other = ctx.omega_pow(m - k) * gaussian_binomial(ctx, m - 1, k - 1) + gaussian_binomial(ctx, m - 1, k)
            cases.append(compare_case("qbinom_pascal", n, value, other, m=m, k=k))
            cases.append(compare_case("qbinom_symmetry", n, value, gaussian_binomial(ctx, m, m - k), m=m, k=k))
    for m in range(n + 1):
        closed = (ctx.one - ctx.omega_pow(m)) / (ctx.one - ctx.omega)
        cases.append(compare_case("q_integer", n, q_integer(ctx, m), closed, m=m))
    return cases
