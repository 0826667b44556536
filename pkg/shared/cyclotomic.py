"""
Exact arithmetic in the cyclotomic field Q(w), w a primitive n-th root of 1.

Scalars are polynomials in the residue class zeta of x, reduced modulo the
n-th cyclotomic polynomial, with Fraction coefficients. Reducing modulo
Phi_n (and not x^n - 1) is what makes the zero test exact: Q[x]/Phi_n is a
field, Q[x]/(x^n - 1) is not.

A context fixes n and a root exponent t with gcd(t, n) = 1; its omega is
zeta^t. Every primitive n-th root is reachable this way without building
a second field.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union
import logging

from sympy import divisors, totient

from .errors import ContextMismatchError, InvalidOrderError, InvalidRootError
from .report import CaseResult, make_case

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Poly = List[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


# --- dense polynomials over Q, coefficient lists low -> high, no trailing zeros ---

def _poly_trim(a: Sequence[Rational]) -> Poly:
    c = [Fraction(v) for v in a]
    while c and not c[-1]:
        c.pop()
    return c


def _poly_sub(a: Poly, b: Poly) -> Poly:
    c = list(a) + [ZERO] * max(0, len(b) - len(a))
    for i, b_i in enumerate(b):
        c[i] -= b_i
    return _poly_trim(c)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    c = [ZERO] * (len(a) + len(b) - 1)
    for i, a_i in enumerate(a):
        if a_i:
            for j, b_j in enumerate(b):
                c[i + j] += a_i * b_j
    return _poly_trim(c)


def _poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    m, k = len(a), len(b)
    if m < k:
        return [], list(a)
    lead_inv = 1 / b[-1]
    q, r = [ZERO] * (m - k + 1), list(a)
    for i in range(m - k, -1, -1):
        if len(r) >= i + k:
            q[i] = q_i = r[-1] * lead_inv
            for j in range(k):
                r[i + j] -= q_i * b[j]
            r = _poly_trim(r)
    return _poly_trim(q), r


def _poly_invert(a: Poly, modulus: Poly) -> Poly:
    """Inverse of a modulo modulus by the extended Euclidean algorithm"""
    r0, r1 = list(modulus), list(a)
    s0, s1 = [], [ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor in this quotient ring")
    c = 1 / r0[0]
    return [c * v for v in s0]


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> Tuple[Fraction, ...]:
    # x^n - 1 divided by Phi_d for every proper divisor d, exactly
    numerator: Poly = [Fraction(-1)] + [ZERO] * (n - 1) + [ONE]
    for d in divisors(n):
        if d == n:
            continue
        numerator, remainder = _poly_divmod(numerator, list(_cyclotomic(d)))
        if remainder:
            raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1 exactly")
    return tuple(numerator)


def cyclotomic_poly(n: int) -> Tuple[Fraction, ...]:
    """
    The n-th cyclotomic polynomial, coefficients low -> high.

    Args:
        n: order of the root, at least 2

    Returns:
        Tuple of Fractions; monic of degree totient(n)

    Raises:
        InvalidOrderError: if n < 2
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"root order must be an integer >= 2, got {n!r}")
    return _cyclotomic(n)


def render_poly(coeffs: Sequence[Rational], symbol: str = "x") -> str:
    """Ascending-power rendering: 1+x, -1+2*x^2, 1/2"""
    parts = []
    for power, c in enumerate(coeffs):
        c = Fraction(c)
        if not c:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            mono = symbol if power == 1 else f"{symbol}^{power}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if c < 0:
            parts.append(f"-{body}")
        else:
            parts.append(f"+{body}" if parts else body)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class CycContext:
    """
    The field Q(w) for a primitive n-th root w = zeta^t.

    Immutable; safe to share between threads. Two contexts are equal when
    n, t and the reduction modulus agree.
    """
    n: int
    root_exponent: int = 1
    modulus: Tuple[Fraction, ...] = ()
    exact: bool = True
    _table: Tuple[Tuple[Fraction, ...], ...] = field(default=(), init=False, repr=False, compare=False)
    _zeta_powers: Tuple["CycScalar", ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidOrderError(f"root order must be an integer >= 2, got {self.n!r}")
        t = self.root_exponent % self.n
        if gcd(t, self.n) != 1:
            raise InvalidRootError(f"root exponent {self.root_exponent} is not coprime to n={self.n}")
        object.__setattr__(self, "root_exponent", t)
        if not self.modulus:
            object.__setattr__(self, "modulus", cyclotomic_poly(self.n))

        d = self.degree
        table = []
        for k in range(max(2 * d - 1, 1)):
            mono = [ZERO] * k + [ONE]
            _, r = _poly_divmod(mono, list(self.modulus))
            table.append(tuple(r + [ZERO] * (d - len(r))))
        object.__setattr__(self, "_table", tuple(table))

        zetas = []
        for j in range(self.n):
            mono = [ZERO] * j + [ONE]
            _, r = _poly_divmod(mono, list(self.modulus))
            zetas.append(CycScalar(self, tuple(r + [ZERO] * (d - len(r)))))
        object.__setattr__(self, "_zeta_powers", tuple(zetas))
        logger.debug(f"CycContext ready: n={self.n}, t={t}, degree={d}, exact={self.exact}")

    @classmethod
    def naive(cls, n: int, root_exponent: int = 1) -> "CycContext":
        """Q[x]/(x^n - 1): has zero divisors, kept only to demonstrate why Phi_n is needed"""
        if not isinstance(n, int) or n < 2:
            raise InvalidOrderError(f"root order must be an integer >= 2, got {n!r}")
        modulus = tuple([Fraction(-1)] + [ZERO] * (n - 1) + [ONE])
        return cls(n, root_exponent, modulus, exact=False)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def phi_n(self) -> Tuple[Fraction, ...]:
        return cyclotomic_poly(self.n)

    @property
    def symbol(self) -> str:
        return "ω" if self.root_exponent == 1 else "ζ"

    @property
    def ascii_symbol(self) -> str:
        return "w" if self.root_exponent == 1 else "z"

    # --- constructors ---

    def scalar(self, coeffs: Iterable[Rational]) -> "CycScalar":
        """Reduce an arbitrary polynomial in zeta to canonical form"""
        return CycScalar(self, self._reduce(list(coeffs)))

    def from_rational(self, q: Rational) -> "CycScalar":
        return CycScalar(self, (Fraction(q),) + (ZERO,) * (self.degree - 1))

    @property
    def zero(self) -> "CycScalar":
        return CycScalar(self, (ZERO,) * self.degree)

    @property
    def one(self) -> "CycScalar":
        return self.from_rational(1)

    @property
    def omega(self) -> "CycScalar":
        return self.omega_pow(1)

    def omega_pow(self, k: int) -> "CycScalar":
        """w^k for any integer k; w^k == w^(k mod n)"""
        return self._zeta_powers[(self.root_exponent * k) % self.n]

    def zeta_pow(self, j: int) -> "CycScalar":
        return self._zeta_powers[j % self.n]

    def sum(self, values: Iterable["CycScalar"]) -> "CycScalar":
        total = self.zero
        for v in values:
            total = total + v
        return total

    # --- reduction ---

    def _reduce(self, poly: List[Rational]) -> Tuple[Fraction, ...]:
        d = self.degree
        if len(poly) <= d:
            return tuple(Fraction(c) for c in poly) + (ZERO,) * (d - len(poly))
        if len(poly) <= len(self._table):
            out = [ZERO] * d
            for k, c in enumerate(poly):
                if c:
                    for j, t_j in enumerate(self._table[k]):
                        if t_j:
                            out[j] += c * t_j
            return tuple(out)
        _, r = _poly_divmod(_poly_trim(poly), list(self.modulus))
        return tuple(r) + (ZERO,) * (d - len(r))

    def check_invariants(self) -> dict:
        """Structural facts about the modulus; all True for an exact context"""
        phi = list(self.modulus)
        x_n_minus_1 = [Fraction(-1)] + [ZERO] * (self.n - 1) + [ONE]
        _, rem = _poly_divmod(x_n_minus_1, phi)
        primitive = all(
            self.zeta_pow(d) != self.one for d in divisors(self.n) if d < self.n
        ) and self.zeta_pow(self.n) == self.one
        return {
            "monic": phi[-1] == ONE,
            "modulus_is_phi_n": tuple(self.modulus) == self.phi_n,
            "divides_x_n_minus_1": not rem,
            "degree_is_totient": self.degree == int(totient(self.n)),
            "primitive": primitive,
        }


class CycScalar:
    """An element of Q(w) in canonical reduced form"""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycContext, coeffs: Tuple[Fraction, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatchError(
                    f"scalars from different contexts: n={self.ctx.n}/t={self.ctx.root_exponent} "
                    f"vs n={other.ctx.n}/t={other.ctx.root_exponent}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.ctx.n, self.ctx.root_exponent, self.coeffs))

    def __add__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "CycScalar":
        return (-self) + other

    def scale(self, q: Rational) -> "CycScalar":
        q = Fraction(q)
        return CycScalar(self.ctx, tuple(a * q for a in self.coeffs))

    def __mul__(self, other) -> "CycScalar":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod: List[Rational] = [0] * (2 * len(a) - 1)
        for i, a_i in enumerate(a):
            if a_i:
                for j, b_j in enumerate(b):
                    if b_j:
                        prod[i + j] += a_i * b_j
        return CycScalar(self.ctx, self.ctx._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(w)")
        inv = _poly_invert(_poly_trim(self.coeffs), list(self.ctx.modulus))
        return self.ctx.scalar(inv)

    def __truediv__(self, other) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycScalar":
        return self.inverse() * other

    def __pow__(self, k: int) -> "CycScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def render(self, ascii: bool = False) -> str:
        symbol = self.ctx.ascii_symbol if ascii else self.ctx.symbol
        return render_poly(self.coeffs, symbol)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CycScalar(n={self.ctx.n}, t={self.ctx.root_exponent}, {self.render()})"


def primitivity_check(ctx: CycContext) -> List[CaseResult]:
    """Structural invariants of the modulus, then 1 - w^k != 0 for 0 < k < n and 1 - w^n = 0"""
    cases = [
        make_case("field_invariants", ctx.n, ok, None if ok else "violated", property=name)
        for name, ok in ctx.check_invariants().items()
    ]
    for k in range(1, ctx.n + 1):
        vanishes = (ctx.one - ctx.omega_pow(k)).is_zero()
        expected = k == ctx.n
        cases.append(make_case(
            "primitive_power", ctx.n, vanishes == expected,
            None if vanishes == expected else f"1 - w^{k} {'vanishes' if vanishes else 'does not vanish'}", k=k,
        ))
    return cases
