"""The Jordanian twist of U(L)[[t]] and the Hopf structure it deforms to.

With X = (1/m) L_0 + alpha L_{-m} and Y = exp(alpha ad L_{-m})(L_m),
[X, Y] = Y, the elements

    Fcal_a = sum_r (-1)^r / r!  X_a^[r] x Y^r t^r
    F_a    = sum_r      1 / r!  X_a^<r> x Y^r t^r
    u_a    = sum_r (-1)^r / r!  X_{-a}^[r] Y^r t^r
    v_a    = sum_r      1 / r!  X_a^[r] Y^r t^r

satisfy Fcal_a F_d = 1 x (1 - Yt)^(a-d) and v_a u_d = (1 - Yt)^-(a+d).
Fcal = Fcal_0 twists the primitive coproduct into Fcal Delta0(x) F and the
antipode into v S0(x) u.  This module computes those twisted maps both
directly (by conjugation) and from their closed forms, all truncated at
the context's order N.

Sums over t-degrees are clipped at N; within a degree every sum is finite.
"""
import logging
import math
import threading
from fractions import Fraction

from .config import DEFAULT_ORDER, MAX_ORDER, check_param, integer, \
    nonnegative, rational
from .errors import InvalidIndex, OrderTooLarge, UnknownIdentity
from .liealg import G, Generator, L, LieElement, build_xy
from .pbw import UeaElement, antipode0, coproduct0, uea_mul
from .scalars import m_binomial, scalar_from_terms
from .tensor import TensorElement, flip, mul_legs
from .tseries import TSeries, binomial_power, constant, series_apply_leg, \
    series_embed, series_mul

__all__ = ["TwistContext", "coeff_a", "coeff_b", "coeff_for",
           "build_element", "delta_closed", "antipode_closed",
           "twisted_direct", "IDENTITIES", "LABELS", "twist_identity_sides",
           "lemma35_lhs_rhs",
           "delta_twisted_series", "delta_leg", "antipode_any",
           "antipode_series", "convolution_left", "convolution_right",
           "u_from_definition", "v_from_definition", "cocycle_sides",
           "flip_series", "KINDS"]

_log = logging.getLogger(__name__)

KINDS = ("F", "Fcal", "u", "v")


class TwistContext(object):
    """Fixes m and the truncation order, and caches the powers of X and Y.

    Parameters
    ----------
    m : int
        The nonzero integer selecting X and Y.
    order : int, optional
        The truncation order N.
    unsafe_order : bool, optional
        Lifts the cap MAX_ORDER on order.

    Raises
    ------
    InvalidM, OrderTooLarge
    """

    def __init__(self, m, order=DEFAULT_ORDER, unsafe_order=False):
        self.xy = build_xy(m)
        self.m = self.xy.m
        self.order = check_param("order", order, integer, nonnegative)
        if self.order > MAX_ORDER and not unsafe_order:
            raise OrderTooLarge("order %d exceeds the maximum %d"
                                % (self.order, MAX_ORDER))
        self.X = UeaElement.from_lie(self.xy.X)
        self.Y = UeaElement.from_lie(self.xy.Y)
        self._y_powers = [UeaElement.one()]
        self._factorials = {}
        self._binomials = {}
        self._elements = {}
        # Guards the caches; suites share a context across worker threads.
        self._lock = threading.RLock()
        _log.debug("twist context m=%d order=%d", self.m, self.order)

    def __repr__(self):
        return "TwistContext(m=%d, order=%d)" % (self.m, self.order)

    def y_power(self, r):
        with self._lock:
            while len(self._y_powers) <= r:
                self._y_powers.append(uea_mul(self._y_powers[-1], self.Y))
            return self._y_powers[r]

    def factorial(self, a, r, direction):
        """Returns X_a^<r> (rising) or X_a^[r] (falling), cached."""
        a = Fraction(a)
        key = (a, r, direction)
        with self._lock:
            result = self._factorials.get(key)
            if result is None:
                if r == 0:
                    result = UeaElement.one()
                else:
                    step = r - 1 if direction == "rising" else 1 - r
                    result = uea_mul(self.factorial(a, r - 1, direction),
                                     self.X + (a + step))
                self._factorials[key] = result
            return result

    def rising(self, a, r):
        return self.factorial(a, r, "rising")

    def falling(self, a, r):
        return self.factorial(a, r, "falling")

    def binomial(self, beta):
        """Returns (1 - Yt)^beta at the context's order, cached."""
        beta = Fraction(beta)
        with self._lock:
            result = self._binomials.get(beta)
            if result is None:
                result = binomial_power(self.Y, beta, self.order)
                self._binomials[beta] = result
            return result

    def element(self, kind, a=0):
        """build_element(kind, a, self), cached."""
        key = (kind, Fraction(a))
        with self._lock:
            result = self._elements.get(key)
            if result is None:
                result = build_element(kind, a, self)
                self._elements[key] = result
            return result


def _alternating(s, r, j, m, c):
    # sum_p (-1)^p [j+(c-1)m; p]_m [j+(r-p-c)m; r]_m [j+(r-p+c-1)m; s-p]_m
    total = Fraction(0)
    for p in range(s + 1):
        term = m_binomial(j + (c - 1) * m, p, m)
        if not term:
            continue
        term *= m_binomial(j + (r - p - c) * m, r, m)
        if not term:
            continue
        term *= m_binomial(j + (r - p + c - 1) * m, s - p, m)
        total += term if p % 2 == 0 else -term
    return total


def _check_indices(s, r, m):
    s = check_param("s", s, integer, nonnegative)
    r = check_param("r", r, integer, nonnegative)
    m = check_param("m", m, integer)
    return s, r, m


def coeff_a(s, r, i, m):
    """Returns a_s(r, i), the coefficient of alpha^s L_{i+(r-s)m} in
    (ad Y)^r (L_i) / r!."""
    s, r, m = _check_indices(s, r, m)
    i = check_param("i", i, integer)
    return _alternating(s, r, Fraction(i), m, Fraction(2))


def coeff_b(s, r, k, m):
    """Returns b_s(r, k), the G_k analogue of coeff_a."""
    s, r, m = _check_indices(s, r, m)
    k = check_param("k", k, rational)
    if (2 * k).denominator != 1:
        raise InvalidIndex("k = %s is not in 1/2 Z" % k)
    return _alternating(s, r, k, m, Fraction(3, 2))


def _shape(g):
    """Returns (index, c) with c = 2 for L and 3/2 for G."""
    if not isinstance(g, Generator):
        raise TypeError("expected a Generator, not %s" % type(g).__name__)
    if g.odd:
        return g.index, Fraction(3, 2)
    if g.index2 % 2:
        raise InvalidIndex("%s is outside the integer L sector" % (g,))
    return g.index, Fraction(2)


def coeff_for(g, s, r, m):
    """coeff_a for L_i and coeff_b for G_k."""
    j, c = _shape(g)
    s, r, m = _check_indices(s, r, m)
    return _alternating(s, r, j, m, c)


def _coeff_at(g, s, r, j, m):
    """coeff_for(g, s, r, m) evaluated at the shifted index j."""
    _, c = _shape(g)
    return _alternating(s, r, Fraction(j), m, c)


def _same_kind(g, index):
    return UeaElement.from_generator(G(index) if g.odd else L(index))


def _lead(g, r, m):
    """Returns [(r-c)m - j; r]_m for the generator g with index j."""
    j, c = _shape(g)
    return m_binomial((r - c) * m - j, r, m)


def _alpha(power, coeff):
    return scalar_from_terms([(power, coeff)])


def _zeros(zero, order):
    return [zero] * (order + 1)


def build_element(kind, a, ctx):
    """Returns F_a, Fcal_a, u_a or v_a truncated at ctx.order.

    F and Fcal are rank 2 tensor series, u and v are U(L)-valued.
    """
    a = check_param("a", a, rational)
    if kind not in KINDS:
        raise ValueError("unknown twist element %r, expected one of %s"
                         % (kind, ", ".join(KINDS)))
    coeffs = []
    for r in range(ctx.order + 1):
        weight = Fraction(1, math.factorial(r))
        if kind == "F":
            left, right = ctx.rising(a, r), ctx.y_power(r)
        elif kind == "Fcal":
            weight *= (-1) ** r
            left, right = ctx.falling(a, r), ctx.y_power(r)
        elif kind == "u":
            weight *= (-1) ** r
            left, right = ctx.falling(-a, r), ctx.y_power(r)
        else:
            left, right = ctx.falling(a, r), ctx.y_power(r)
        if kind in ("F", "Fcal"):
            coeffs.append(TensorElement.pure(left, right).scale(weight))
        else:
            coeffs.append(uea_mul(left, right).scale(weight))
    return TSeries(ctx.order, coeffs)


def delta_closed(g, ctx):
    """Returns the twisted coproduct of L_i or G_k from its closed form.

    The first sum runs over
        alpha^r [(r-c)m - j; r]_m  g_{j-rm} x (1-Yt)^(j/m - r) Y^r t^r
    and the second over
        (-1)^r alpha^s coeff(s, r, j)  X^<r> x (1-Yt)^(-r) g_{j+(r-s)m} t^r
    with j the index of g, c = 2 for L and 3/2 for G, and coeff = a for L,
    b for G.
    """
    j, _ = _shape(g)
    m, order = ctx.m, ctx.order
    coeffs = _zeros(TensorElement(2), order)
    for r in range(order + 1):
        lead = _lead(g, r, m)
        if lead:
            left = _same_kind(g, j - r * m).scale(_alpha(r, lead))
            powers = ctx.binomial(j / m - r)
            for p in range(order - r + 1):
                right = uea_mul(powers[p], ctx.y_power(r))
                coeffs[r + p] += TensorElement.pure(left, right)
        powers = ctx.binomial(-r)
        for s in range(2 * r + 1):
            coeff = coeff_for(g, s, r, m)
            if not coeff:
                continue
            inner = _same_kind(g, j + (r - s) * m).scale(
                _alpha(s, coeff * (-1) ** r))
            for p in range(order - r + 1):
                right = uea_mul(powers[p], inner)
                coeffs[r + p] += TensorElement.pure(ctx.rising(0, r), right)
    return TSeries(order, coeffs)


def antipode_closed(g, ctx):
    """Returns the twisted antipode of L_i or G_k from its closed form.

    S(g_j) = -(1-Yt)^(-j/m) sum_{r,p} sum_{q<=2p} (-1)^r alpha^(r+q)
             [(r-c)m - j; r]_m coeff(q, p, j - rm)
             X_{-j/m}^[p] g_{j+(p-r-q)m} Y^r t^(r+p)

    The prefactor multiplies from the left; r + p is clipped at N.
    """
    j, _ = _shape(g)
    m, order = ctx.m, ctx.order
    coeffs = _zeros(UeaElement(), order)
    for r in range(order + 1):
        lead = _lead(g, r, m)
        if not lead:
            continue
        for p in range(order - r + 1):
            falling = ctx.falling(-j / m, p)
            for q in range(2 * p + 1):
                coeff = _coeff_at(g, q, p, j - r * m, m)
                if not coeff:
                    continue
                middle = _same_kind(g, j + (p - r - q) * m).scale(
                    _alpha(r + q, lead * coeff * (-1) ** r))
                coeffs[r + p] += uea_mul(uea_mul(falling, middle),
                                         ctx.y_power(r))
    inner = TSeries(order, coeffs)
    return -series_mul(ctx.binomial(-j / m), inner)


def _as_uea(x):
    if isinstance(x, Generator):
        return UeaElement.from_generator(x)
    if isinstance(x, LieElement):
        return UeaElement.from_lie(x)
    return x


def twisted_direct(kind, x, ctx):
    """Computes the twisted coproduct or antipode of x by conjugation.

    kind 'delta' gives Fcal Delta0(x) F and 'antipode' gives v S0(x) u,
    with Fcal = Fcal_0, F = F_0 = Fcal^-1, u = u_0 and v = v_0 = u^-1.
    """
    x = _as_uea(x)
    if kind == "delta":
        inner = constant(coproduct0(x), ctx.order)
        return series_mul(series_mul(ctx.element("Fcal"), inner),
                          ctx.element("F"))
    if kind == "antipode":
        inner = constant(antipode0(x), ctx.order)
        return series_mul(series_mul(ctx.element("v"), inner),
                          ctx.element("u"))
    raise ValueError("unknown twisted map %r, expected delta or antipode"
                     % (kind,))


def _left_f(g, a, ctx):
    j, _ = _shape(g)
    m, order = ctx.m, ctx.order
    lhs = series_mul(constant(TensorElement.pure(_same_kind(g, j),
                                                 UeaElement.one()), order),
                     ctx.element("F", a))
    rhs = TSeries(order, [TensorElement(2)])
    for s in range(order + 1):
        lead = _lead(g, s, m)
        if not lead:
            continue
        tail = _zeros(TensorElement(2), order)
        tail[s] = TensorElement.pure(_same_kind(g, j - s * m),
                                     ctx.y_power(s)).scale(_alpha(s, lead))
        rhs = rhs + series_mul(ctx.element("F", a - j / m + s),
                               TSeries(order, tail))
    return lhs, rhs


def _right_f(g, a, ctx):
    j, _ = _shape(g)
    m, order = ctx.m, ctx.order
    lhs = series_mul(constant(TensorElement.pure(UeaElement.one(),
                                                 _same_kind(g, j)), order),
                     ctx.element("F", a))
    rhs = TSeries(order, [TensorElement(2)])
    for s in range(order + 1):
        inner = UeaElement()
        for p in range(2 * s + 1):
            coeff = coeff_for(g, p, s, m)
            if coeff:
                inner += _same_kind(g, j + (s - p) * m).scale(
                    _alpha(p, coeff * (-1) ** s))
        if not inner:
            continue
        tail = _zeros(TensorElement(2), order)
        tail[s] = TensorElement.pure(ctx.rising(a, s), inner)
        rhs = rhs + series_mul(ctx.element("F", a + s), TSeries(order, tail))
    return lhs, rhs


def _left_u(g, a, ctx):
    j, _ = _shape(g)
    m, order = ctx.m, ctx.order
    lhs = series_mul(constant(_same_kind(g, j), order), ctx.element("u", a))
    coeffs = _zeros(UeaElement(), order)
    for s in range(order + 1):
        lead = _lead(g, s, m)
        if not lead:
            continue
        for p in range(order - s + 1):
            falling = ctx.falling(-a - j / m, p)
            for q in range(2 * p + 1):
                coeff = _coeff_at(g, q, p, j - s * m, m)
                if not coeff:
                    continue
                middle = _same_kind(g, j + (p - s - q) * m).scale(
                    _alpha(s + q, lead * coeff * (-1) ** s))
                coeffs[s + p] += uea_mul(uea_mul(falling, middle),
                                         ctx.y_power(s))
    rhs = series_mul(ctx.element("u", a + j / m), TSeries(order, coeffs))
    return lhs, rhs


IDENTITIES = {
    "left-L": ("L", _left_f),
    "left-G": ("G", _left_f),
    "right-L": ("L", _right_f),
    "right-G": ("G", _right_f),
    "u-L": ("L", _left_u),
    "u-G": ("G", _left_u),
}

# The numbered labels of the same rules; a primed label is the G_k form.
LABELS = {
    "3.7": "left-L",
    "3.7′": "left-G",
    "3.8": "right-L",
    "3.8′": "right-G",
    "3.9": "u-L",
    "3.9′": "u-G",
}
LABELS.update(dict((label.replace("′", "'"), name)
                   for label, name in list(LABELS.items())))


def twist_identity_sides(which, params, ctx):
    """Returns both sides of one of the commutation rules of g with F_a or
    u_a, each computed independently.

    Parameters
    ----------
    which : str
        A name below, or its numbered label from LABELS; an ASCII
        apostrophe may stand for the prime.
        'left-L'  (L_i x 1) F_a,
        'left-G'  (G_k x 1) F_a,
        'right-L' (1 x L_i) F_a,
        'right-G' (1 x G_k) F_a,
        'u-L'     L_i u_a,
        'u-G'     G_k u_a.
    params : dict
        'a' (default 0) and the index 'i' or 'k'.
    ctx : TwistContext

    Returns
    -------
    (TSeries, TSeries)
        The product computed by series multiplication, and the rewritten
        right hand side.

    Raises
    ------
    UnknownIdentity
    """
    try:
        kind, sides = IDENTITIES[LABELS.get(which, which)]
    except (KeyError, TypeError):
        raise UnknownIdentity("unknown identity %r, expected one of %s"
                              % (which, ", ".join(sorted(IDENTITIES) +
                                                  sorted(LABELS))))
    a = check_param("a", params.get("a", 0), rational)
    if kind == "L":
        g = L(params["i"])
    else:
        g = G(params["k"])
    return sides(g, a, ctx)


lemma35_lhs_rhs = twist_identity_sides


def delta_twisted_series(x, ctx):
    """Applies the twisted coproduct degree-wise to a U(L)-valued series."""
    inner = x.map(coproduct0)
    return series_mul(series_mul(ctx.element("Fcal"), inner),
                      ctx.element("F"))


def _twist_on(ctx, legs):
    return (series_embed(ctx.element("Fcal"), 3, legs),
            series_embed(ctx.element("F"), 3, legs))


def delta_leg(x, leg, ctx):
    """Applies the twisted coproduct to one leg of a rank 2 tensor series.

    leg 0 gives Fcal_12 (Delta0 x Id)(x) F_12, leg 1 gives
    Fcal_23 (Id x Delta0)(x) F_23.
    """
    legs = (0, 1) if leg == 0 else (1, 2)
    fcal, f = _twist_on(ctx, legs)
    lifted = series_apply_leg(x, leg, "coproduct0")
    return series_mul(series_mul(fcal, lifted), f)


def cocycle_sides(ctx):
    """Returns both sides of the twist cocycle condition.

    These are (Fcal x 1)(Delta0 x Id)(Fcal) and (1 x Fcal)(Id x Delta0)(Fcal).
    """
    fcal = ctx.element("Fcal")
    left = series_mul(series_embed(fcal, 3, (0, 1)),
                      series_apply_leg(fcal, 0, "coproduct0"))
    right = series_mul(series_embed(fcal, 3, (1, 2)),
                       series_apply_leg(fcal, 1, "coproduct0"))
    return left, right


def antipode_any(x, ctx):
    """Returns the twisted antipode v S0(x) u of any x in U(L)."""
    return twisted_direct("antipode", x, ctx)


def antipode_series(x, ctx):
    """Applies the twisted antipode degree-wise to a U(L)-valued series."""
    return series_mul(series_mul(ctx.element("v"), x.map(antipode0)),
                      ctx.element("u"))


def convolution_left(x, ctx):
    """Returns mu (S~ x Id)(x) = v mu((1 x u)(S0 x Id)(x)) for a rank 2
    tensor series x."""
    u_right = series_embed(ctx.element("u"), 2, (1,))
    inner = series_mul(u_right, series_apply_leg(x, 0, "antipode0"))
    return series_mul(ctx.element("v"), inner.map(mul_legs))


def convolution_right(x, ctx):
    """Returns mu (Id x S~)(x) = mu((1 x v)(Id x S0)(x)) u."""
    v_right = series_embed(ctx.element("v"), 2, (1,))
    inner = series_mul(v_right, series_apply_leg(x, 1, "antipode0"))
    return series_mul(inner.map(mul_legs), ctx.element("u"))


def u_from_definition(a, ctx):
    """Returns mu (S0 x Id)(F_a)."""
    return series_apply_leg(ctx.element("F", a), 0, "antipode0").map(mul_legs)


def v_from_definition(a, ctx):
    """Returns mu (Id x S0)(Fcal_a)."""
    return series_apply_leg(ctx.element("Fcal", a), 1,
                            "antipode0").map(mul_legs)


def flip_series(x):
    return x.map(flip)
