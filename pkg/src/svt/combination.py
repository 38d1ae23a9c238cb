"""Finite linear combinations with coefficients in Q[alpha].

A combination is a dict from hashable basis keys to nonzero Scalars.  The
concrete element types (Lie elements, enveloping algebra elements, tensor
elements) subclass Combination and add their products.
"""
from .scalars import ALPHA_RING, is_scalar, scalar

__all__ = ["Combination", "accumulate"]


def accumulate(acc, key, coeff):
    """Adds coeff to acc[key], dropping the entry if it cancels."""
    total = acc.get(key)
    if total is None:
        if coeff:
            acc[key] = coeff
        return
    total = total + coeff
    if total:
        acc[key] = total
    else:
        del acc[key]


class Combination(object):
    """An immutable linear combination of basis keys.

    Subclasses that carry extra shape information (the rank of a tensor)
    override _like() and _shape().
    """
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = dict((key, coeff) for key, coeff in (terms or {}).items()
                          if coeff)
        self._hash = None

    def _like(self, terms):
        return self.__class__(terms)

    def _shape(self):
        return None

    def _coerce(self, other):
        """Turns a scalar into a multiple of the unit; None if impossible."""
        if isinstance(other, Combination):
            return other
        if isinstance(other, int) or is_scalar(other) or \
                hasattr(other, "denominator"):
            other = scalar(other)
            if not other:
                return self.zero_like()
            return self.unit_like().scale(other)
        return None

    def unit_like(self):
        raise NotImplementedError

    def zero_like(self):
        return self._like({})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def items(self):
        """Returns the (key, coefficient) pairs sorted by key."""
        return sorted(self.terms.items())

    def coefficient(self, key):
        return self.terms.get(key, ALPHA_RING.zero)

    def scale(self, coeff):
        coeff = scalar(coeff)
        if not coeff:
            return self.zero_like()
        return self._like(dict((key, c * coeff)
                               for key, c in self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            accumulate(acc, key, coeff)
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._like(dict((key, -c) for key, c in self.terms.items()))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            accumulate(acc, key, -coeff)
        return self._like(acc)

    def __rsub__(self, other):
        return -self + other

    def __eq__(self, other):
        if isinstance(other, Combination):
            return self.__class__ is other.__class__ and \
                self._shape() == other._shape() and self.terms == other.terms
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.__class__.__name__, self._shape(),
                               frozenset(self.terms.items())))
        return self._hash
