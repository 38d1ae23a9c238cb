"""The centerless super-Virasoro Lie superalgebra.

Generators are L_i (even) and G_k (odd).  Indices are stored doubled in
``index2`` so that half-integers stay integral: L_i has index2 = 2i, G_k has
index2 = 2k.  The defining relations are

    [L_i, L_j] = (j - i) L_{i+j}
    [L_i, G_k] = (k - i/2) G_{i+k}
    [G_k, G_l] = 2 L_{k+l}

with G indices ranging over all of 1/2 Z.  [G_k, G_l] lands on L_{k+l} with
k + l a half-integer whenever the two G indices lie in different cosets, so
Generator accepts L with odd index2 as well.  The public constructor
L() insists on integer indices and L_or_zero() maps the others
to zero.
"""
from collections import namedtuple
from fractions import Fraction

from .combination import Combination, accumulate
from .config import check_param, integer, rational
from .errors import InvalidIndex, InvalidM, InvariantViolated, MixedParity, \
    NotNilpotent
from .scalars import ALPHA, to_qq

__all__ = ["Generator", "L", "G", "L_or_zero", "LieElement",
           "structure_constant", "bracket", "ad_power", "exp_ad", "XYPair",
           "build_xy"]


class Generator(namedtuple("Generator", ["index2", "odd"])):
    """A generator L_i or G_k.

    Generators order by (index2, parity) with L before G at equal index2;
    this is the PBW order of the enveloping algebra.
    """
    __slots__ = ()

    @property
    def kind(self):
        return "G" if self.odd else "L"

    @property
    def parity(self):
        return 1 if self.odd else 0

    @property
    def index(self):
        return Fraction(self.index2, 2)

    def __repr__(self):
        return "%s(%s)" % (self.kind, self.index)

    def __str__(self):
        index = str(self.index)
        if len(index) > 1:
            index = "{%s}" % index
        return "%s_%s" % (self.kind, index)


def L(i):
    """Returns the even generator L_i; i must be an integer."""
    i = check_param("i", i, rational)
    if i.denominator != 1:
        raise InvalidIndex("L_%s is undefined, L indices are integers" % i)
    return Generator(2 * int(i), False)


def G(k):
    """Returns the odd generator G_k for k in 1/2 Z."""
    k2 = 2 * check_param("k", k, rational)
    if k2.denominator != 1:
        raise InvalidIndex("G_%s is undefined, G indices lie in 1/2 Z"
                           % (k2 / 2))
    return Generator(int(k2), True)


def L_or_zero(i, coeff=1):
    """Returns coeff * L_i, or zero when i is not an integer."""
    i = Fraction(i)
    if i.denominator != 1:
        return LieElement()
    return LieElement.from_generator(L(i), coeff)


class LieElement(Combination):
    """A finite Scalar-linear combination of generators."""
    __slots__ = ()

    @classmethod
    def from_generator(cls, generator, coeff=1):
        from .scalars import scalar
        return cls({generator: scalar(coeff)})

    @property
    def is_homogeneous(self):
        return len(set(g.odd for g in self.terms)) <= 1

    @property
    def parity(self):
        """The Z2-degree; raises MixedParity for inhomogeneous elements."""
        parities = set(g.parity for g in self.terms)
        if len(parities) > 1:
            raise MixedParity("%s is not Z2-homogeneous" % (self,))
        return parities.pop() if parities else 0

    def __repr__(self):
        from .render import to_text
        return "LieElement(%s)" % to_text(self)

    def __str__(self):
        from .render import to_text
        return to_text(self)


def structure_constant(u, v):
    """Returns (c, w) with [u, v] = c w for generators u, v.

    w is None when the bracket vanishes.
    """
    a, b = u.index2, v.index2
    if not u.odd and not v.odd:
        coeff, target = Fraction(b - a, 2), Generator(a + b, False)
    elif not u.odd:
        coeff, target = Fraction(2 * b - a, 4), Generator(a + b, True)
    elif not v.odd:
        coeff, target = Fraction(b - 2 * a, 4), Generator(a + b, True)
    else:
        coeff, target = Fraction(2), Generator(a + b, False)
    if not coeff:
        return Fraction(0), None
    return coeff, target


def bracket(x, y, split=False):
    """Returns the super bracket [x, y].

    The bracket is bilinear, symmetric on two odd generators and
    antisymmetric otherwise.  Unless split is true, both arguments must be
    Z2-homogeneous.
    """
    if not split:
        for element in (x, y):
            if not element.is_homogeneous:
                raise MixedParity("%s is not Z2-homogeneous" % (element,))
    acc = {}
    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            coeff, target = structure_constant(u, v)
            if target is not None:
                accumulate(acc, target, cu * cv * to_qq(coeff))
    return LieElement(acc)


def ad_power(y, x, r):
    """Returns (ad y)^r (x)."""
    r = check_param("r", r, integer)
    if r < 0:
        raise ValueError("r must not be negative")
    for _ in range(r):
        x = bracket(y, x)
    return x


def exp_ad(z, x, nilpotency_bound):
    """Returns exp(ad z)(x) = sum_p (ad z)^p (x) / p!.

    Raises NotNilpotent unless (ad z)^p (x) vanishes for some
    p <= nilpotency_bound.
    """
    total = term = x
    p = 0
    while term:
        if p >= nilpotency_bound:
            raise NotNilpotent("(ad %s)^%d (%s) != 0" % (z, p, x))
        p += 1
        term = bracket(z, term).scale(Fraction(1, p))
        total = total + term
    return total


class XYPair(object):
    """The two-dimensional subalgebra [X, Y] = Y fixed by m.

    X = (1/m) L_0 + alpha L_{-m} and Y = exp(alpha ad L_{-m})(L_m);
    x_prime = (1/m) L_0 and y_prime = L_m are their undeformed versions.
    """
    __slots__ = ("m", "X", "Y", "x_prime", "y_prime")

    def __init__(self, m, X, Y, x_prime, y_prime):
        self.m = m
        self.X = X
        self.Y = Y
        self.x_prime = x_prime
        self.y_prime = y_prime

    def __repr__(self):
        return "XYPair(m=%d, X=%s, Y=%s)" % (self.m, self.X, self.Y)


def build_xy(m):
    """Builds X and Y for the nonzero integer m.

    Raises InvalidM for m = 0 and InvariantViolated if [X, Y] != Y or the
    exponential of alpha ad L_{-m} does not carry the undeformed pair onto
    X and Y.
    """
    m = check_param("m", m, integer)
    if m == 0:
        raise InvalidM("m must be a nonzero integer")
    x_prime = LieElement.from_generator(L(0), Fraction(1, m))
    y_prime = LieElement.from_generator(L(m))
    shift = LieElement.from_generator(L(-m), ALPHA)
    X = x_prime + shift.scale(1)
    Y = exp_ad(shift, y_prime, 3)
    if exp_ad(shift, x_prime, 2) != X:
        raise InvariantViolated("exp(alpha ad L_-m)(L_0/m) != X for m=%d" % m)
    if bracket(X, Y) != Y:
        raise InvariantViolated("[X, Y] != Y for m=%d" % m)
    return XYPair(m, X, Y, x_prime, y_prime)
