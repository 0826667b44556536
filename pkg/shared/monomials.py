"""
Basis monomials of H, H* and A, and the rule for multiplying two of them.

A product of basis monomials is again a basis monomial times a power of w,
or zero. Rules return (w_exponent, key) or None for zero; callers scale by
ctx.omega_pow(w_exponent).

Keys:
    H, H*   (b, a)  for x^b g^a  (X^b G^a), 0 <= b, a <= n-1
    A       m       for u^m, 0 <= m <= n-1
"""
from typing import Callable, Dict, Optional, Tuple, Union

KIND_H = "H"
KIND_HSTAR = "H*"
KIND_A = "A"

Key = Union[int, Tuple[int, int]]
Product = Optional[Tuple[int, Key]]

_ELEMENT_TYPES: Dict[str, type] = {}


def register_element_type(cls):
    """Class decorator: the element class for cls.KIND, used by tensors to rebuild slot elements"""
    _ELEMENT_TYPES[cls.KIND] = cls
    return cls


def element_type(kind: str) -> type:
    try:
        return _ELEMENT_TYPES[kind]
    except KeyError:
        raise KeyError(f"no element type registered for kind {kind!r}") from None


def skew_product(n: int, p: Tuple[int, int], q: Tuple[int, int]) -> Product:
    """(x^b g^a)(x^d g^c) = w^(-ad) x^(b+d) g^(a+c); also valid for X, G"""
    b, a = p
    d, c = q
    if b + d >= n:
        return None
    return -a * d, (b + d, (a + c) % n)


def wrap_product(n: int, p: int, q: int) -> Product:
    """u^p u^q with u^n = w"""
    m = p + q
    return m // n, m % n


def unit_key(kind: str) -> Key:
    return 0 if kind == KIND_A else (0, 0)


def product_rule(kind: str) -> Callable[[int, Key, Key], Product]:
    return wrap_product if kind == KIND_A else skew_product


def render_monomial(kind: str, key: Key) -> str:
    """"x^2 g^1", "X^1", "u^3", "1" """
    if kind == KIND_A:
        return "1" if key == 0 else f"u^{key}"
    gen_x, gen_g = ("X", "G") if kind == KIND_HSTAR else ("x", "g")
    b, a = key
    parts = []
    if b:
        parts.append(f"{gen_x}^{b}")
    if a:
        parts.append(f"{gen_g}^{a}")
    return " ".join(parts) if parts else "1"


def render_terms(items) -> str:
    """Join (coefficient text, monomial text) pairs: "x^1 + (1+ω) x^1 g^1 + (-2)" """
    out = []
    for coeff, mono in items:
        if coeff == "1":
            out.append(mono)
        elif mono == "1":
            out.append(f"({coeff})")
        else:
            out.append(f"({coeff}) {mono}")
    return " + ".join(out) if out else "0"
