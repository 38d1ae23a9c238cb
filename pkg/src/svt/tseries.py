"""Power series in the even central parameter t, truncated at order N.

A TSeries keeps all N + 1 coefficients, zeros included, so that two series
of the same order always line up degree by degree.  Coefficients are
UeaElements or TensorElements; their own products supply the Koszul signs.
"""
from fractions import Fraction

from .combination import Combination
from .config import check_param, integer, nonnegative, rational
from .errors import NonUnitLeadingTerm, OrderMismatch
from .pbw import counit0
from .scalars import rat_binomial
from .tensor import apply_leg, embed

__all__ = ["TSeries", "constant", "series_mul", "series_invert",
           "binomial_power", "series_apply_leg", "series_embed",
           "series_counit", "shift", "geometric"]


class TSeries(object):
    """A truncated series c_0 + c_1 t + ... + c_N t^N.

    Parameters
    ----------
    order : int
        The truncation order N.
    coeffs : sequence
        The coefficients from degree 0 up.  Missing ones are zero, those
        beyond N are dropped.
    """
    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = check_param("order", order, integer, nonnegative)
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        zero = coeffs[0].zero_like()
        coeffs = coeffs[:self.order + 1]
        self.coeffs = coeffs + (zero,) * (self.order + 1 - len(coeffs))

    def __getitem__(self, r):
        return self.coeffs[r]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def unit(self):
        return self.coeffs[0].unit_like()

    def one_like(self):
        return constant(self.unit(), self.order)

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def map(self, f):
        """Applies f to every coefficient."""
        return TSeries(self.order, [f(c) for c in self.coeffs])

    def truncate(self, order):
        order = check_param("order", order, integer, nonnegative)
        if order > self.order:
            raise OrderMismatch("cannot raise order %d to %d"
                                % (self.order, order))
        return TSeries(order, self.coeffs)

    def scale(self, coeff):
        return self.map(lambda c: c.scale(coeff))

    def _check(self, other):
        if not isinstance(other, TSeries):
            return False
        if other.order != self.order:
            raise OrderMismatch("orders %d and %d differ"
                                % (self.order, other.order))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return TSeries(self.order,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return TSeries(self.order,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, TSeries):
            return series_mul(self, other)
        if isinstance(other, Combination):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Combination):
            return NotImplemented
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        from .render import to_text
        return "TSeries(%d, %s)" % (self.order, to_text(self))

    def __str__(self):
        from .render import to_text
        return to_text(self)


def constant(x, order):
    """Returns the series x + 0 t + ... + 0 t^order."""
    return TSeries(order, [x])


def shift(x, k):
    """Multiplies x by t^k, dropping what moves past the order."""
    k = check_param("k", k, integer, nonnegative)
    zero = x[0].zero_like()
    return TSeries(x.order, [zero] * k + list(x.coeffs))


def series_mul(x, y):
    """Returns the Cauchy product of x and y truncated at their order."""
    if x.order != y.order:
        raise OrderMismatch("orders %d and %d differ" % (x.order, y.order))
    result = []
    for r in range(x.order + 1):
        total = None
        for p in range(r + 1):
            a, b = x.coeffs[p], y.coeffs[r - p]
            if a and b:
                total = a * b if total is None else total + a * b
        if total is None:
            total = x.coeffs[0].zero_like()
        result.append(total)
    return TSeries(x.order, result)


def series_invert(x):
    """Returns the inverse of a series whose constant term is the unit.

    The coefficients follow q_0 = 1, q_n = -sum_{r=1..n} x_r q_{n-r}.

    Raises
    ------
    NonUnitLeadingTerm
        If the constant term is not the unit.
    """
    unit = x.unit()
    if x.coeffs[0] != unit:
        raise NonUnitLeadingTerm("constant term %s is not the unit"
                                 % (x.coeffs[0],))
    q = [unit]
    for n in range(1, x.order + 1):
        total = unit.zero_like()
        for r in range(1, n + 1):
            if x.coeffs[r] and q[n - r]:
                total = total + x.coeffs[r] * q[n - r]
        q.append(-total)
    return TSeries(x.order, q)


def binomial_power(y, beta, order):
    """Returns the formal binomial series (1 - y t)^beta.

    The coefficient of t^p is binomial(beta, p) (-1)^p y^p; beta may be
    any rational number.
    """
    beta = check_param("beta", beta, rational)
    order = check_param("order", order, integer, nonnegative)
    unit = y.unit_like()
    coeffs = [unit]
    power = unit
    for p in range(1, order + 1):
        power = power * y
        coeffs.append(power.scale(rat_binomial(beta, p) * (-1) ** p))
    return TSeries(order, coeffs)


def series_apply_leg(x, leg, f):
    """Applies apply_leg(., leg, f) to every coefficient of x."""
    return x.map(lambda c: apply_leg(c, leg, f))


def series_embed(x, rank, legs):
    """Applies embed(., rank, legs) to every coefficient of x."""
    return x.map(lambda c: embed(c, rank, legs))


def series_counit(x):
    """Returns the counits of the coefficients of a U-valued series."""
    return [counit0(c) for c in x.coeffs]


def geometric(y, order):
    """Returns 1 + y t + y^2 t^2 + ..., the inverse of 1 - y t."""
    return binomial_power(y, Fraction(-1), order)
