"""
Exception types raised by the verification kernel.

Mathematical check failures are never raised; they come back as case
records. These exceptions cover misuse: bad orders, mixed contexts,
vanishing denominators and malformed tensor signatures.
"""


class TaftVerifyError(Exception):
    """Marker base for every kernel error"""


class InvalidOrderError(TaftVerifyError, ValueError):
    """Root-of-unity order n is below 2"""


class InvalidRootError(TaftVerifyError, ValueError):
    """Root exponent t is not coprime to n"""


class ContextMismatchError(TaftVerifyError, ValueError):
    """Operands live over different cyclotomic contexts"""


class DenominatorVanishesError(TaftVerifyError, ZeroDivisionError):
    """A product (1-w)...(1-w^k) with k >= n was requested as a divisor"""


class KindSignatureError(TaftVerifyError, ValueError):
    """Tensor operands carry different factor-kind signatures"""


class ArityError(TaftVerifyError, ValueError):
    """Tensor arity would leave the supported range"""


class RangeError(TaftVerifyError, ValueError):
    """Parameter outside the range an operation is defined on"""
