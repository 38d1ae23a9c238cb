"""Graded tensor squares and cubes of U(L).

A TensorElement of rank n maps n-tuples of PBW monomials to Scalars.  The
product follows the Koszul rule

    (a1 x a2)(b1 x b2) = (-1)^([a2][b1]) a1 b1 x a2 b2

and its rank 3 analogue, where the sign counts the odd factors that move
past each other.  Legs are numbered from 0.
"""
import itertools

from .combination import Combination, accumulate
from .config import check_param, integer
from .errors import LegOutOfRange, MixedParity, RankMismatch
from .pbw import UNIT, UeaElement, _monomial_antipode, _monomial_coproduct, \
    antipode0, coproduct0, counit0, monomial_parity, monomial_product
from .scalars import scalar

__all__ = ["TensorElement", "tensor_mul", "apply_leg", "mul_legs", "flip",
           "embed", "LEG_MAPS"]

RANKS = (2, 3)


class TensorElement(Combination):
    """An element of U(L) x U(L) or U(L) x U(L) x U(L)."""
    __slots__ = ("rank",)

    def __init__(self, rank, terms=None):
        rank = check_param("rank", rank, integer)
        if rank not in RANKS:
            raise RankMismatch("tensor rank must be 2 or 3, not %d" % rank)
        super(TensorElement, self).__init__(terms)
        for legs in self.terms:
            if len(legs) != rank:
                raise RankMismatch("term %r does not have %d legs"
                                   % (legs, rank))
        self.rank = rank

    @classmethod
    def one(cls, rank):
        return cls(rank, {(UNIT,) * rank: scalar(1)})

    @classmethod
    def pure(cls, *legs):
        """Returns legs[0] x legs[1] (x legs[2]) for UeaElements."""
        legs = [UeaElement.from_lie(leg) if not isinstance(leg, UeaElement)
                else leg for leg in legs]
        acc = {}
        for choice in itertools.product(*[leg.terms.items() for leg in legs]):
            coeff = scalar(1)
            for _, c in choice:
                coeff = coeff * c
            accumulate(acc, tuple(m for m, _ in choice), coeff)
        return cls(len(legs), acc)

    def _like(self, terms):
        return TensorElement(self.rank, terms)

    def _shape(self):
        return self.rank

    def unit_like(self):
        return TensorElement.one(self.rank)

    @property
    def is_homogeneous(self):
        return len(set(_total_parity(legs) for legs in self.terms)) <= 1

    @property
    def parity(self):
        parities = set(_total_parity(legs) for legs in self.terms)
        if len(parities) > 1:
            raise MixedParity("%s is not Z2-homogeneous" % (self,))
        return parities.pop() if parities else 0

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        if isinstance(other, Combination):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tensor_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Combination):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tensor_mul(other, self)

    def __repr__(self):
        from .render import to_text
        return "TensorElement(%d, %s)" % (self.rank, to_text(self))

    def __str__(self):
        from .render import to_text
        return to_text(self)


def _total_parity(legs):
    return sum(monomial_parity(m) for m in legs) % 2


def _koszul(left, right):
    # Each leg of right moves past the later legs of left.
    sign = 0
    for j, b in enumerate(right):
        if monomial_parity(b):
            sign += sum(monomial_parity(a) for a in left[j + 1:])
    return -1 if sign % 2 else 1


def tensor_mul(x, y):
    """Returns the graded product x y of two tensors of the same rank."""
    if x.rank != y.rank:
        raise RankMismatch("cannot multiply rank %d by rank %d"
                           % (x.rank, y.rank))
    acc = {}
    for left, cx in x.terms.items():
        for right, cy in y.terms.items():
            c = cx * cy * _koszul(left, right)
            legs = [monomial_product(a, b) for a, b in zip(left, right)]
            for choice in itertools.product(*legs):
                q = 1
                for _, qi in choice:
                    q = q * qi
                accumulate(acc, tuple(m for m, _ in choice), c * q)
    return TensorElement(x.rank, acc)


def _check_leg(x, leg):
    if not isinstance(x, TensorElement):
        raise RankMismatch("leg maps act on tensors, not %s"
                           % type(x).__name__)
    leg = check_param("leg", leg, integer)
    if not 0 <= leg < x.rank:
        raise LegOutOfRange("leg %d of a rank %d tensor" % (leg, x.rank))
    return leg


def _identity_leg(x, leg):
    return x


def _antipode_leg(x, leg):
    acc = {}
    for legs, c in x.terms.items():
        for monomial, q in _monomial_antipode(legs[leg]):
            accumulate(acc, legs[:leg] + (monomial,) + legs[leg + 1:], c * q)
    return TensorElement(x.rank, acc)


def _coproduct_leg(x, leg):
    if x.rank + 1 not in RANKS:
        raise RankMismatch("coproduct on a leg would exceed rank 3")
    acc = {}
    for legs, c in x.terms.items():
        for pair, sign in _monomial_coproduct(legs[leg]):
            accumulate(acc, legs[:leg] + pair + legs[leg + 1:], c * sign)
    return TensorElement(x.rank + 1, acc)


def _counit_leg(x, leg):
    acc = {}
    for legs, c in x.terms.items():
        if legs[leg] == UNIT:
            accumulate(acc, legs[:leg] + legs[leg + 1:], c)
    if x.rank == 2:
        return UeaElement(dict((legs[0], c) for legs, c in acc.items()))
    return TensorElement(x.rank - 1, acc)


LEG_MAPS = {
    "identity": _identity_leg,
    "antipode0": _antipode_leg,
    "coproduct0": _coproduct_leg,
    "counit0": _counit_leg,
}

_BY_FUNCTION = {
    antipode0: "antipode0",
    coproduct0: "coproduct0",
    counit0: "counit0",
}


def apply_leg(x, leg, f):
    """Applies one of the undeformed structure maps on a single leg.

    Parameters
    ----------
    x : TensorElement
    leg : int
        The leg, counted from 0.
    f : str or function
        'identity', 'coproduct0', 'antipode0' or 'counit0', or one of the
        functions of the same name in svt.pbw.

    Returns
    -------
    TensorElement or UeaElement
        coproduct0 raises the rank by one, counit0 lowers it by one (a
        rank 2 tensor becomes a UeaElement).

    Raises
    ------
    RankMismatch, LegOutOfRange
    """
    leg = _check_leg(x, leg)
    name = _BY_FUNCTION.get(f, f)
    try:
        operation = LEG_MAPS[name]
    except (KeyError, TypeError):
        raise ValueError("unknown leg map %r" % (f,))
    return operation(x, leg)


def mul_legs(x):
    """Returns mu(x), the product of the two legs of a rank 2 tensor."""
    if not isinstance(x, TensorElement) or x.rank != 2:
        raise RankMismatch("mul_legs needs a rank 2 tensor")
    acc = {}
    for (a, b), c in x.terms.items():
        for monomial, q in monomial_product(a, b):
            accumulate(acc, monomial, c * q)
    return UeaElement(acc)


def flip(x):
    """Returns the graded flip of a rank 2 tensor, a x b -> +-b x a."""
    if not isinstance(x, TensorElement) or x.rank != 2:
        raise RankMismatch("flip needs a rank 2 tensor")
    acc = {}
    for (a, b), c in x.terms.items():
        sign = -1 if monomial_parity(a) and monomial_parity(b) else 1
        accumulate(acc, (b, a), c * sign)
    return TensorElement(2, acc)


def embed(x, rank, legs):
    """Places x on the given legs of a tensor of the given rank.

    x is a UeaElement (one leg) or a rank 2 TensorElement; the remaining
    legs carry the unit.  legs must be increasing, so no sign arises:
    embed(F, 3, (0, 1)) is F x 1 and embed(u, 2, (1,)) is 1 x u.
    """
    legs = tuple(check_param("legs", leg, integer) for leg in legs)
    if isinstance(x, UeaElement):
        items = [((m,), c) for m, c in x.terms.items()]
        width = 1
    elif isinstance(x, TensorElement):
        items = list(x.terms.items())
        width = x.rank
    else:
        raise RankMismatch("cannot embed %s" % type(x).__name__)
    if rank not in RANKS or len(legs) != width or rank < width:
        raise RankMismatch("cannot place %d legs into rank %d"
                           % (width, rank))
    if list(legs) != sorted(set(legs)) or legs[0] < 0 or legs[-1] >= rank:
        raise LegOutOfRange("legs %r do not fit rank %d" % (legs, rank))
    acc = {}
    for parts, c in items:
        padded = [UNIT] * rank
        for leg, monomial in zip(legs, parts):
            padded[leg] = monomial
        accumulate(acc, tuple(padded), c)
    return TensorElement(rank, acc)
