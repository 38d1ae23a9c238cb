"""The universal enveloping superalgebra of the super-Virasoro algebra.

Elements are combinations of PBW monomials.  A monomial is a tuple of
Generators sorted ascending by (index2, parity), where an even generator
may repeat and an odd one may not (G_k G_k = L_{2k}).  The empty tuple is
the unit.

Reordering only ever produces rational coefficients, so the normal forms
of words are computed once over QQ and cached independently of alpha; the
alpha-dependence of an element lives entirely in its own coefficients.
"""
import functools
import logging

from .combination import Combination, accumulate
from .config import check_param, integer, nonnegative, rational
from .errors import MixedParity
from .liealg import Generator, LieElement, structure_constant
from .scalars import QQ, scalar, to_qq

__all__ = ["UNIT", "is_canonical", "monomial_parity", "normal_order",
           "UeaElement", "uea_mul", "monomial_product", "shifted_factorial",
           "rising", "falling", "coproduct0", "antipode0", "counit0",
           "cache_info", "clear_caches"]

_log = logging.getLogger(__name__)

UNIT = ()
_ONE = QQ(1)
STRATEGIES = ("leftmost", "rightmost")


def _in_order(u, v):
    return u < v or (u == v and not u.odd)


def is_canonical(monomial):
    """Tells whether a word of generators is a PBW monomial."""
    return all(_in_order(u, v) for u, v in zip(monomial, monomial[1:]))


def monomial_parity(monomial):
    return sum(1 for g in monomial if g.odd) % 2


def _square(g):
    """G_k G_k = L_{2k}."""
    return Generator(2 * g.index2, False)


def _inversion(word, strategy):
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    for pos in positions:
        if not _in_order(word[pos], word[pos + 1]):
            return pos
    return None


@functools.lru_cache(maxsize=None)
def _rewrite(word, strategy):
    pos = _inversion(word, strategy)
    if pos is None:
        return ((word, _ONE),)
    u, v = word[pos], word[pos + 1]
    head, tail = word[:pos], word[pos + 2:]
    acc = {}
    if u == v:
        for monomial, q in _rewrite(head + (_square(u),) + tail, strategy):
            accumulate(acc, monomial, q)
        return tuple(acc.items())
    sign = -1 if u.odd and v.odd else 1
    for monomial, q in _rewrite(head + (v, u) + tail, strategy):
        accumulate(acc, monomial, sign * q)
    coeff, target = structure_constant(u, v)
    if target is not None:
        coeff = to_qq(coeff)
        for monomial, q in _rewrite(head + (target,) + tail, strategy):
            accumulate(acc, monomial, coeff * q)
    return tuple(acc.items())


@functools.lru_cache(maxsize=None)
def _append(monomial, g):
    """Normal form of monomial * g for a PBW monomial."""
    if not monomial or _in_order(monomial[-1], g):
        return ((monomial + (g,), _ONE),)
    u = monomial[-1]
    head = monomial[:-1]
    if u == g:
        return _append(head, _square(g))
    acc = {}
    sign = -1 if u.odd and g.odd else 1
    for piece, q in _append(head, g):
        for whole, q2 in _append(piece, u):
            accumulate(acc, whole, sign * q * q2)
    coeff, target = structure_constant(u, g)
    if target is not None:
        coeff = to_qq(coeff)
        for piece, q in _append(head, target):
            accumulate(acc, piece, coeff * q)
    return tuple(acc.items())


@functools.lru_cache(maxsize=None)
def monomial_product(left, right):
    """Normal form of the product of two PBW monomials."""
    if not right:
        return ((left, _ONE),)
    if not left or _in_order(left[-1], right[0]):
        return ((left + right, _ONE),)
    acc = {}
    for piece, q in monomial_product(left, right[:-1]):
        for whole, q2 in _append(piece, right[-1]):
            accumulate(acc, whole, q * q2)
    return tuple(acc.items())


def normal_order(word, coefficient=1, strategy="leftmost"):
    """Rewrites coefficient * word into PBW canonical form.

    Parameters
    ----------
    word : sequence of Generator
        The factors, read left to right.
    coefficient : Scalar, optional
        Multiplies the result.
    strategy : {'leftmost', 'rightmost'}, optional
        Which adjacent inversion is rewritten first.  Every strategy gives
        the same result.

    Returns
    -------
    UeaElement
    """
    if strategy not in STRATEGIES:
        raise ValueError("unknown rewriting strategy %r" % (strategy,))
    coefficient = scalar(coefficient)
    if not coefficient:
        return UeaElement()
    acc = {}
    for monomial, q in _rewrite(tuple(word), strategy):
        accumulate(acc, monomial, coefficient * q)
    return UeaElement(acc)


class UeaElement(Combination):
    """An element of U(L): a combination of PBW monomials.

    Supports +, -, * (the algebra product, or scaling by a Scalar) and
    ** with a nonnegative integer exponent.
    """
    __slots__ = ()

    @classmethod
    def one(cls):
        return cls({UNIT: scalar(1)})

    @classmethod
    def from_generator(cls, generator, coeff=1):
        return cls({(generator,): scalar(coeff)})

    @classmethod
    def from_monomial(cls, monomial, coeff=1):
        return normal_order(monomial, coeff)

    @classmethod
    def from_lie(cls, element):
        return cls(dict(((g,), c) for g, c in element.terms.items()))

    def unit_like(self):
        return UeaElement.one()

    @property
    def is_homogeneous(self):
        return len(set(monomial_parity(m) for m in self.terms)) <= 1

    @property
    def parity(self):
        parities = set(monomial_parity(m) for m in self.terms)
        if len(parities) > 1:
            raise MixedParity("%s is not Z2-homogeneous" % (self,))
        return parities.pop() if parities else 0

    def _coerce(self, other):
        if isinstance(other, LieElement):
            return UeaElement.from_lie(other)
        return super(UeaElement, self)._coerce(other)

    def _factor(self, other):
        if isinstance(other, Combination) and \
                not isinstance(other, (UeaElement, LieElement)):
            return None
        return self._coerce(other)

    def __mul__(self, other):
        other = self._factor(other)
        if other is None:
            return NotImplemented
        return uea_mul(self, other)

    def __rmul__(self, other):
        other = self._factor(other)
        if other is None:
            return NotImplemented
        return uea_mul(other, self)

    def __pow__(self, n):
        n = check_param("n", n, integer, nonnegative)
        result = self.one()
        for _ in range(n):
            result = uea_mul(result, self)
        return result

    def __repr__(self):
        from .render import to_text
        return "UeaElement(%s)" % to_text(self)

    def __str__(self):
        from .render import to_text
        return to_text(self)


def uea_mul(x, y):
    """Returns the product x y in PBW canonical form."""
    acc = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c = c1 * c2
            for monomial, q in monomial_product(m1, m2):
                accumulate(acc, monomial, c * q)
    return UeaElement(acc)


def shifted_factorial(e, a, r, direction):
    """Returns the shifted factorial of e.

    rising gives e_a^<r> = (e + a)(e + a + 1)...(e + a + r - 1) and
    falling gives e_a^[r] = (e + a)(e + a - 1)...(e + a - r + 1); both
    are 1 for r = 0.  Factors are multiplied left to right.
    """
    a = check_param("a", a, rational)
    r = check_param("r", r, integer, nonnegative)
    if direction not in ("rising", "falling"):
        raise ValueError("direction must be 'rising' or 'falling'")
    step = 1 if direction == "rising" else -1
    result = UeaElement.one()
    for j in range(r):
        result = uea_mul(result, e + (a + step * j))
    return result


def rising(e, a, r):
    return shifted_factorial(e, a, r, "rising")


def falling(e, a, r):
    return shifted_factorial(e, a, r, "falling")


@functools.lru_cache(maxsize=None)
def _monomial_coproduct(monomial):
    # Delta0(g1...gn) = Delta0(g1)...Delta0(gn); every leg stays a
    # subsequence of a sorted monomial, hence canonical.
    pairs = {(UNIT, UNIT): 1}
    for g in monomial:
        grown = {}
        for (left, right), sign in pairs.items():
            accumulate(grown, (left, right + (g,)), sign)
            crossing = -1 if g.odd and monomial_parity(right) else 1
            accumulate(grown, (left + (g,), right), sign * crossing)
        pairs = grown
    return tuple(pairs.items())


def coproduct0(x):
    """Returns the primitive coproduct Delta0(x) as a rank 2 TensorElement."""
    from .tensor import TensorElement
    acc = {}
    for monomial, c in x.terms.items():
        for legs, sign in _monomial_coproduct(monomial):
            accumulate(acc, legs, c * sign)
    return TensorElement(2, acc)


@functools.lru_cache(maxsize=None)
def _monomial_antipode(monomial):
    odd = sum(1 for g in monomial if g.odd)
    sign = (-1) ** (len(monomial) + odd * (odd - 1) // 2)
    return tuple((result, sign * q)
                 for result, q in _fold(tuple(reversed(monomial))))


def _fold(word):
    pieces = ((UNIT, _ONE),)
    for g in word:
        acc = {}
        for piece, q in pieces:
            for whole, q2 in _append(piece, g):
                accumulate(acc, whole, q * q2)
        pieces = tuple(acc.items())
    return pieces


def antipode0(x):
    """Returns S0(x), the super antihomomorphism with S0(g) = -g."""
    acc = {}
    for monomial, c in x.terms.items():
        for result, q in _monomial_antipode(monomial):
            accumulate(acc, result, c * q)
    return UeaElement(acc)


def counit0(x):
    """Returns eps0(x), the coefficient of the unit monomial."""
    return x.coefficient(UNIT)


_CACHES = (_rewrite, _append, monomial_product, _monomial_coproduct,
           _monomial_antipode)


def cache_info():
    """Returns the sizes of the rewriting caches, for logging."""
    return dict((f.__name__.lstrip("_"), f.cache_info().currsize)
                for f in _CACHES)


def clear_caches():
    for f in _CACHES:
        f.cache_clear()
    _log.debug("cleared the PBW rewriting caches")
