"""Exact coefficient arithmetic.

Rationals are ``fractions.Fraction`` values.  The coefficient ring of every
algebraic object in svt is the polynomial ring Q[alpha], held as sympy's
sparse ``PolyElement`` over ``QQ``: a dict from exponent tuples to nonzero
rationals, so equality is coefficient-map equality and no stored
coefficient is ever zero.
"""
import math
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

__all__ = ["ALPHA_RING", "ALPHA", "QQ", "to_qq", "from_qq", "scalar",
           "is_scalar", "alpha_power", "scalar_terms", "scalar_from_terms",
           "scalar_arith", "scalar_eval", "rat_binomial", "m_binomial"]

ALPHA_RING, ALPHA = ring("alpha", QQ)


def to_qq(value):
    """Converts an int, Fraction or QQ element to a QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    if QQ.of_type(value):
        return value
    raise TypeError("cannot use %r as a rational coefficient" % (value,))


def from_qq(value):
    """Converts a QQ element to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def is_scalar(value):
    return isinstance(value, PolyElement) and value.ring == ALPHA_RING


def scalar(value):
    """Returns value as an element of Q[alpha].

    Accepts ints, Fractions, QQ elements and ring elements (returned as is).
    """
    if is_scalar(value):
        return value
    return ALPHA_RING.ground_new(to_qq(value))


def alpha_power(n):
    return ALPHA ** n


def scalar_terms(x):
    """Returns the (power, Fraction) pairs of x, lowest power first."""
    return sorted((monom[0], from_qq(coeff)) for monom, coeff in x.items())


def scalar_from_terms(terms):
    return ALPHA_RING.from_dict(
        dict(((power,), to_qq(coeff)) for power, coeff in terms if coeff))


_OPERATIONS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "negate": lambda x, y: -x,
}


def scalar_arith(x, y, op):
    """Applies one of the ring operations add, sub, mul or negate.

    For negate, y is ignored.
    """
    try:
        operation = _OPERATIONS[op]
    except KeyError:
        raise ValueError("unknown scalar operation %r" % (op,))
    return operation(scalar(x), scalar(y if y is not None else 0))


def scalar_eval(x, alpha_value):
    """Substitutes alpha := alpha_value and returns the value as Fraction."""
    x = scalar(x)
    if not x:
        return Fraction(0)
    return from_qq(x(to_qq(Fraction(alpha_value))))


def rat_binomial(a, r):
    """Returns binomial(a, r) = a(a-1)...(a-r+1)/r! for rational a."""
    return m_binomial(a, r, 1)


def m_binomial(a, r, k):
    """Returns the step-k binomial a(a-k)(a-2k)...(a-(r-1)k)/r!."""
    if r < 0:
        raise ValueError("r must not be negative")
    a = Fraction(a)
    k = Fraction(k)
    product = Fraction(1)
    for j in range(r):
        product *= a - j * k
        if not product:
            return product
    return product / math.factorial(r)
