"""Verification suites.

Every suite expands its SuiteSpec into a deterministic grid of cases.  A
case computes two values independently and compares them exactly; a few
witness cases instead require the two values to differ.  Failures are
collected exhaustively and the Report lists them in case order.  SUITES
names the suites in run order, SUMMARIES describes each in one line; the
suite "all" runs every one of them.
"""
import concurrent.futures
import logging
import math
import time
from collections import namedtuple
from fractions import Fraction

from .combination import Combination
from .config import DEFAULT_A_VALUES, DEFAULT_I_RANGE, DEFAULT_K2_RANGE, \
    DEFAULT_M_VALUES, DEFAULT_MAX_POWER, DEFAULT_ORDER, MAX_ORDER, \
    check_param, each, integer, nonempty, nonnegative, nonzero, rational
from .errors import InvariantViolated, OrderTooLarge, ShapeMismatch, \
    SvtError, UnknownSuite
from .liealg import G, Generator, L, LieElement, ad_power, bracket, \
    build_xy, exp_ad
from .pbw import UeaElement, normal_order, uea_mul
from .scalars import ALPHA, is_scalar, m_binomial, rat_binomial, scalar, \
    scalar_from_terms
from .tensor import TensorElement, embed
from .tseries import TSeries, constant, series_apply_leg, series_invert, \
    series_mul
from . import render, twist

__all__ = ["SUITES", "SUMMARIES", "SuiteSpec", "Report", "Failure",
           "Difference", "run_suite", "diff_report", "suite_cases"]

_log = logging.getLogger(__name__)

SUITES = ("relations", "jacobi", "xy", "lemma31", "commutation",
          "factorial-identities", "lemma34", "lemma35", "combinatorial",
          "twist-axioms", "closed-forms", "hopf-axioms")

SUMMARIES = {
    "relations": "defining brackets, super antisymmetry, PBW swaps",
    "jacobi": "super Jacobi identity on generator triples",
    "xy": "[X, Y] = Y and the exponential of alpha ad L_-m",
    "lemma31": "(ad Y)^r and (ad L_m)^r on L_i, G_k",
    "commutation": "L_i, G_k, Y^s past factorials of X; L_i, G_k past Y^r",
    "factorial-identities": "product and alternating-sum laws of "
                            "X_a^<r>, X_a^[r]",
    "lemma34": "Fcal_a F_d, v_a u_d, inverses, u_a and v_a",
    "lemma35": "L_i, G_k moved past F_a and u_a",
    "combinatorial": "a_s(r, i) = b_s(r, k) = 0 for s > 2r",
    "twist-axioms": "cocycle and counit conditions of Fcal",
    "closed-forms": "closed forms against direct conjugation",
    "hopf-axioms": "Hopf axioms of the twisted structure",
}


def _index_range(value):
    lo, hi = (integer(v) for v in value)
    if lo > hi:
        raise ValueError("{name} must satisfy min <= max")
    return lo, hi


class SuiteSpec(object):
    """The parameters of a suite run.

    Parameters
    ----------
    suite_id : str
        One of SUITES or 'all'.
    m_values : sequence of int, optional
    i_range : (int, int), optional
        Inclusive bounds of the L index i.
    k2_range : (int, int), optional
        Inclusive bounds of 2k for the G index k.
    order : int, optional
        The truncation order N.
    a_values : sequence of rationals, optional
        The shifts a, d of the twist elements and factorials.
    max_power : int, optional
        Bounds the exponents r, s, p in identities inside U(L).
    jobs : int, optional
        Size of the worker pool.
    unsafe_order : bool, optional
        Allows order above MAX_ORDER.

    Raises
    ------
    UnknownSuite, OrderTooLarge, TypeError, ValueError
    """

    def __init__(self, suite_id, m_values=DEFAULT_M_VALUES,
                 i_range=DEFAULT_I_RANGE, k2_range=DEFAULT_K2_RANGE,
                 order=DEFAULT_ORDER, a_values=DEFAULT_A_VALUES,
                 max_power=DEFAULT_MAX_POWER, jobs=1, unsafe_order=False):
        if suite_id != "all" and suite_id not in SUITES:
            raise UnknownSuite("unknown suite %r, expected one of %s or all"
                               % (suite_id, ", ".join(SUITES)))
        self.suite_id = suite_id
        self.m_values = check_param("m_values", m_values, nonempty,
                                    each(integer, nonzero))
        self.i_range = check_param("i_range", i_range, _index_range)
        self.k2_range = check_param("k2_range", k2_range, _index_range)
        self.order = check_param("order", order, integer, nonnegative)
        if self.order > MAX_ORDER and not unsafe_order:
            raise OrderTooLarge("order %d exceeds the maximum %d, pass "
                                "unsafe_order to lift it"
                                % (self.order, MAX_ORDER))
        self.unsafe_order = unsafe_order
        self.a_values = check_param("a_values", a_values, nonempty,
                                    each(rational))
        self.max_power = check_param("max_power", max_power, integer,
                                     nonnegative)
        self.jobs = check_param("jobs", jobs, integer, nonzero, nonnegative)

    @property
    def i_values(self):
        return list(range(self.i_range[0], self.i_range[1] + 1))

    @property
    def k_values(self):
        return [Fraction(k2, 2)
                for k2 in range(self.k2_range[0], self.k2_range[1] + 1)]

    def generators(self):
        """L_i for i in i_range, then G_k for 2k in k2_range."""
        return [L(i) for i in self.i_values] + [G(k) for k in self.k_values]

    def __repr__(self):
        return ("SuiteSpec(%r, m_values=%r, i_range=%r, k2_range=%r, "
                "order=%d)" % (self.suite_id, self.m_values, self.i_range,
                               self.k2_range, self.order))


Failure = namedtuple("Failure", ["case", "left", "right", "difference"])


class Difference(namedtuple("Difference", ["delta", "first"])):
    """x - y and its first nonzero term (None when x == y)."""
    __slots__ = ()

    @property
    def is_empty(self):
        return self.first is None

    def __str__(self):
        if self.first is None:
            return "no difference"
        return "first difference: %s" % (self.first,)


def _shape(x):
    if isinstance(x, TSeries):
        return ("series", x.order, _shape(x.coeffs[0]))
    if isinstance(x, TensorElement):
        return ("tensor", x.rank)
    if isinstance(x, Combination):
        return (type(x).__name__,)
    if isinstance(x, (int, Fraction)) or is_scalar(x):
        return ("scalar",)
    raise ShapeMismatch("cannot compare %s values" % type(x).__name__)


def diff_report(x, y):
    """Returns the Difference x - y of two values of the same shape.

    Raises
    ------
    ShapeMismatch
        If x and y are not both scalars, both elements of the same kind
        (and rank), or both series of the same order and coefficient kind.
    """
    if _shape(x) != _shape(y):
        raise ShapeMismatch("cannot compare %r with %r"
                            % (_shape(x), _shape(y)))
    if isinstance(x, TSeries):
        delta = x - y
        for degree, coeff in enumerate(delta.coeffs):
            if coeff:
                return Difference(delta, "t^%d %s" % (degree,
                                                      render.to_text(coeff)))
        return Difference(delta, None)
    if isinstance(x, Combination):
        delta = x - y
        if not delta:
            return Difference(delta, None)
        return Difference(delta, render.to_text(_head(delta)))
    delta = scalar(x) - scalar(y)
    return Difference(delta, render.to_text(delta) if delta else None)


def _head(x):
    key, coeff = x.items()[0]
    return x._like({key: coeff})


class Report(object):
    """The outcome of a suite run.

    failures holds (case, left, right, difference) tuples in case order;
    it is empty iff the suite passed.
    """

    def __init__(self, suite_id, cases_run, failures, wall_time,
                 counts=None):
        self.suite_id = suite_id
        self.cases_run = cases_run
        self.failures = list(failures)
        self.wall_time = wall_time
        self.counts = counts or {suite_id: cases_run}

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite_id,
            "cases": self.cases_run,
            "counts": dict(self.counts),
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
            "failures": [{"case": dict((k, str(v)) for k, v in f.case),
                          "left": _jsonable(f.left),
                          "right": _jsonable(f.right),
                          "difference": str(f.difference)}
                         for f in self.failures],
        }

    def to_text(self):
        lines = ["%s: %d cases, %d failures (%.2fs)"
                 % (self.suite_id, self.cases_run, len(self.failures),
                    self.wall_time)]
        if len(self.counts) > 1:
            for name, count in self.counts.items():
                lines.append("  %-22s %d cases" % (name, count))
        for failure in self.failures:
            lines.append("FAIL %s" % ", ".join("%s=%s" % item
                                               for item in failure.case))
            lines.append("  %s" % (failure.difference,))
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines)

    def __repr__(self):
        return "Report(%r, cases_run=%d, failures=%d)" % (
            self.suite_id, self.cases_run, len(self.failures))


def _jsonable(value):
    if isinstance(value, (TSeries, Combination)):
        return render.to_json(value)
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, Exception):
        return str(value)
    return render.to_text(value)


class _Contexts(object):
    """One TwistContext per m, built on first use."""

    def __init__(self, spec):
        self.spec = spec
        self._contexts = {}

    def __call__(self, m):
        ctx = self._contexts.get(m)
        if ctx is None:
            ctx = twist.TwistContext(m, self.spec.order,
                                     unsafe_order=self.spec.unsafe_order)
            self._contexts[m] = ctx
        return ctx


# A case is (params, compute, expect_equal); compute() returns (left, right).
Case = namedtuple("Case", ["params", "compute", "expect_equal"])


def _case(params, compute, expect_equal=True):
    return Case(tuple(params), compute, expect_equal)


def _lie(g, coeff=1):
    return LieElement.from_generator(g, coeff)


def _uea(g, coeff=1):
    return UeaElement.from_generator(g, coeff)


def _alpha(power, coeff):
    return scalar_from_terms([(power, coeff)])


def _defining_bracket(u, v):
    """[u, v] from the defining relations, independent of liealg."""
    i, j = u.index, v.index
    if not u.odd and not v.odd:
        coeff, odd = j - i, False
    elif not u.odd:
        coeff, odd = j - i / 2, True
    elif not v.odd:
        coeff, odd = -(i - j / 2), True
    else:
        coeff, odd = Fraction(2), False
    return LieElement({Generator(u.index2 + v.index2, odd): scalar(coeff)})


def _relations(spec, contexts):
    gens = spec.generators()
    for u in gens:
        for v in gens:
            yield _case([("check", "bracket"), ("u", u), ("v", v)],
                        lambda u=u, v=v: (bracket(_lie(u), _lie(v)),
                                          _defining_bracket(u, v)))
            sign = -1 if u.odd and v.odd else 1
            yield _case([("check", "antisymmetry"), ("u", u), ("v", v)],
                        lambda u=u, v=v, sign=sign: (
                            bracket(_lie(u), _lie(v)),
                            bracket(_lie(v), _lie(u)).scale(-sign)))
            yield _case([("check", "pbw-swap"), ("u", u), ("v", v)],
                        lambda u=u, v=v, sign=sign: (
                            normal_order((u, v)) - normal_order((v, u), sign),
                            UeaElement.from_lie(bracket(_lie(u), _lie(v)))))


def _jacobi(spec, contexts):
    gens = spec.generators()
    for x in gens:
        for y in gens:
            for z in gens:
                yield _case([("x", x), ("y", y), ("z", z)],
                            lambda x=x, y=y, z=z: (_jacobiator(x, y, z),
                                                   LieElement()))


def _jacobiator(x, y, z):
    def sign(a, b):
        return -1 if a.odd and b.odd else 1
    X, Y, Z = _lie(x), _lie(y), _lie(z)
    return bracket(X, bracket(Y, Z)).scale(sign(x, z)) + \
        bracket(Y, bracket(Z, X)).scale(sign(y, x)) + \
        bracket(Z, bracket(X, Y)).scale(sign(z, y))


def _xy_pair(m):
    try:
        return build_xy(m)
    except InvariantViolated as error:
        return error


def _xy(spec, contexts):
    for m in spec.m_values:
        def expected_y(m=m):
            return _lie(L(m)) + _lie(L(0), _alpha(1, 2 * m)) + \
                _lie(L(-m), _alpha(2, m * m))

        def pair(m=m):
            result = _xy_pair(m)
            if isinstance(result, Exception):
                raise result
            return result

        yield _case([("check", "[X,Y]=Y"), ("m", m)],
                    lambda pair=pair: (bracket(pair().X, pair().Y),
                                       pair().Y))
        yield _case([("check", "Y"), ("m", m)],
                    lambda pair=pair, expected=expected_y: (pair().Y,
                                                            expected()))
        shift = _lie(L(-m), ALPHA)
        yield _case([("check", "exp(ad)X'"), ("m", m)],
                    lambda pair=pair, shift=shift: (
                        exp_ad(shift, pair().x_prime, 2), pair().X))
        yield _case([("check", "exp(ad)Y'"), ("m", m)],
                    lambda pair=pair, shift=shift: (
                        exp_ad(shift, pair().y_prime, 3), pair().Y))


def _ad_y_expected(g, r, m):
    j = g.index
    total = LieElement()
    for q in range(2 * r + 1):
        coeff = twist.coeff_for(g, q, r, m) * math.factorial(r)
        if coeff:
            target = G(j + (r - q) * m) if g.odd else L(j + (r - q) * m)
            total = total + _lie(target, _alpha(q, coeff))
    return total


def _ad_y_prime_expected(g, r, m):
    j = g.index
    c = Fraction(3, 2) if g.odd else Fraction(2)
    coeff = math.factorial(r) * m_binomial(j + (r - c) * m, r, m)
    target = G(j + r * m) if g.odd else L(j + r * m)
    return _lie(target, coeff)


def _lemma31(spec, contexts):
    for m in spec.m_values:
        for g in spec.generators():
            for r in range(spec.max_power + 1):
                yield _case([("check", "(ad Y)^r"), ("m", m), ("g", g),
                             ("r", r)],
                            lambda m=m, g=g, r=r: (
                                ad_power(contexts(m).xy.Y, _lie(g), r),
                                _ad_y_expected(g, r, m)))
                yield _case([("check", "(ad L_m)^r"), ("m", m), ("g", g),
                             ("r", r)],
                            lambda m=m, g=g, r=r: (
                                ad_power(_lie(L(m)), _lie(g), r),
                                _ad_y_prime_expected(g, r, m)))


def _same(g, index):
    return _uea(G(index) if g.odd else L(index))


def _commutation(spec, contexts):
    n = spec.max_power
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        for g in spec.generators():
            j = g.index
            yield _case([("check", "base"), ("m", m), ("g", g)],
                        lambda ctx=ctx, g=g, j=j, m=m: _base_relation(
                            ctx(), g, j, m))
            for a in spec.a_values:
                for r in range(n + 1):
                    for direction in ("rising", "falling"):
                        yield _case(
                            [("check", "g X_a^" + direction), ("m", m),
                             ("g", g), ("a", a), ("r", r)],
                            lambda ctx=ctx, g=g, a=a, r=r, d=direction:
                            _move_past_factorial(ctx(), g, a, r, d))
            for r in range(n + 1):
                yield _case([("check", "g Y^r"), ("m", m), ("g", g),
                             ("r", r)],
                            lambda ctx=ctx, g=g, r=r: _move_past_y(
                                ctx(), g, r))
                yield _case([("check", "g Y^r by ad"), ("m", m), ("g", g),
                             ("r", r)],
                            lambda ctx=ctx, g=g, r=r: _move_past_y_ad(
                                ctx(), g, r))
        for a in spec.a_values:
            for r in range(n + 1):
                for s in range(n + 1):
                    for direction in ("rising", "falling"):
                        yield _case(
                            [("check", "Y^s X_a^" + direction), ("m", m),
                             ("a", a), ("r", r), ("s", s)],
                            lambda ctx=ctx, a=a, r=r, s=s, d=direction: (
                                uea_mul(ctx().y_power(s),
                                        ctx().factorial(a, r, d)),
                                uea_mul(ctx().factorial(a - s, r, d),
                                        ctx().y_power(s))))


def _base_relation(ctx, g, j, m):
    c = Fraction(1, 2) if g.odd else Fraction(1)
    x = ctx.X
    left = uea_mul(_same(g, j), x)
    right = uea_mul(x - j / m, _same(g, j)) - \
        _same(g, j - m).scale(_alpha(1, c * m + j))
    return left, right


def _move_past_factorial(ctx, g, a, r, direction):
    j = g.index
    m = ctx.m
    left = uea_mul(_same(g, j), ctx.factorial(a, r, direction))
    right = UeaElement()
    for p in range(r + 1):
        lead = twist._lead(g, p, m)
        if not lead:
            continue
        weight = lead * Fraction(math.factorial(r), math.factorial(r - p))
        shift = a + p - j / m if direction == "rising" else a - j / m
        term = uea_mul(ctx.factorial(shift, r - p, direction),
                       _same(g, j - p * m))
        right = right + term.scale(_alpha(p, weight))
    return left, right


def _move_past_y(ctx, g, r):
    j = g.index
    m = ctx.m
    left = uea_mul(_same(g, j), ctx.y_power(r))
    right = UeaElement()
    for p in range(r + 1):
        for q in range(2 * p + 1):
            coeff = twist.coeff_for(g, q, p, m)
            if not coeff:
                continue
            weight = coeff * Fraction(math.factorial(r),
                                      math.factorial(r - p)) * (-1) ** p
            term = uea_mul(ctx.y_power(r - p), _same(g, j + (p - q) * m))
            right = right + term.scale(_alpha(q, weight))
    return left, right


def _move_past_y_ad(ctx, g, r):
    left = uea_mul(_same(g, g.index), ctx.y_power(r))
    right = UeaElement()
    for p in range(r + 1):
        ad = UeaElement.from_lie(ad_power(ctx.xy.Y, _lie(g), p))
        weight = rat_binomial(r, p) * (-1) ** p
        right = right + uea_mul(ctx.y_power(r - p), ad).scale(weight)
    return left, right


def _factorial_identities(spec, contexts):
    n = spec.max_power
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        for a in spec.a_values:
            for r in range(n + 1):
                yield _case([("check", "falling = shifted rising"), ("m", m),
                             ("a", a), ("r", r)],
                            lambda ctx=ctx, a=a, r=r: (
                                ctx().falling(a, r),
                                ctx().rising(a - r + 1, r)))
                for s in range(n + 1 - r):
                    yield _case([("check", "rising split"), ("m", m),
                                 ("a", a), ("r", r), ("s", s)],
                                lambda ctx=ctx, a=a, r=r, s=s: (
                                    ctx().rising(a, r + s),
                                    uea_mul(ctx().rising(a, r),
                                            ctx().rising(a + r, s))))
                    yield _case([("check", "falling split"), ("m", m),
                                 ("a", a), ("r", r), ("s", s)],
                                lambda ctx=ctx, a=a, r=r, s=s: (
                                    ctx().falling(a, r + s),
                                    uea_mul(ctx().falling(a, r),
                                            ctx().falling(a - r, s))))
            for d in spec.a_values:
                for total in range(n + 3):
                    yield _case([("check", "falling-rising sum"), ("m", m),
                                 ("a", a), ("d", d), ("n", total)],
                                lambda ctx=ctx, a=a, d=d, total=total:
                                _alternating_sum(ctx(), a, d, total, True))
                    yield _case([("check", "falling-falling sum"), ("m", m),
                                 ("a", a), ("d", d), ("n", total)],
                                lambda ctx=ctx, a=a, d=d, total=total:
                                _alternating_sum(ctx(), a, d, total, False))


def _alternating_sum(ctx, a, d, total, rising):
    left = UeaElement()
    for r in range(total + 1):
        s = total - r
        weight = Fraction((-1) ** s, math.factorial(r) * math.factorial(s))
        second = ctx.rising(d, s) if rising else ctx.falling(d - r, s)
        left = left + uea_mul(ctx.falling(a, r), second).scale(weight)
    top = a - d if rising else a - d + total - 1
    return left, UeaElement.one().scale(rat_binomial(top, total))


def _lemma34(spec, contexts):
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        for a in spec.a_values:
            for d in spec.a_values:
                yield _case([("check", "Fcal_a F_d"), ("m", m), ("a", a),
                             ("d", d)],
                            lambda ctx=ctx, a=a, d=d: (
                                series_mul(ctx().element("Fcal", a),
                                           ctx().element("F", d)),
                                ctx().binomial(a - d).map(
                                    lambda c: embed(c, 2, (1,)))))
                yield _case([("check", "v_a u_d"), ("m", m), ("a", a),
                             ("d", d)],
                            lambda ctx=ctx, a=a, d=d: (
                                series_mul(ctx().element("v", a),
                                           ctx().element("u", d)),
                                ctx().binomial(-(a + d))))
            yield _case([("check", "Fcal_a^-1 = F_a"), ("m", m), ("a", a)],
                        lambda ctx=ctx, a=a: (
                            series_invert(ctx().element("Fcal", a)),
                            ctx().element("F", a)))
            yield _case([("check", "u_a^-1 = v_-a"), ("m", m), ("a", a)],
                        lambda ctx=ctx, a=a: (
                            series_invert(ctx().element("u", a)),
                            ctx().element("v", -a)))
            yield _case([("check", "u_a definition"), ("m", m), ("a", a)],
                        lambda ctx=ctx, a=a: (
                            twist.u_from_definition(a, ctx()),
                            ctx().element("u", a)))
            yield _case([("check", "v_a definition"), ("m", m), ("a", a)],
                        lambda ctx=ctx, a=a: (
                            twist.v_from_definition(a, ctx()),
                            ctx().element("v", a)))


def _lemma35(spec, contexts):
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        for a in spec.a_values:
            for which in sorted(twist.IDENTITIES):
                kind = twist.IDENTITIES[which][0]
                if kind == "L":
                    indices = [("i", i) for i in spec.i_values]
                else:
                    indices = [("k", k) for k in spec.k_values]
                for name, index in indices:
                    params = {"a": a, name: index}
                    yield _case([("identity", which), ("m", m), ("a", a),
                                 (name, index)],
                                lambda ctx=ctx, which=which, params=params:
                                twist.twist_identity_sides(which, params,
                                                           ctx()))


def _combinatorial(spec, contexts):
    rmax = spec.max_power + 1
    for m in spec.m_values:
        for r in range(rmax + 1):
            for s in range(2 * r + 1, 2 * r + 5):
                for i in spec.i_values:
                    yield _case([("check", "a_s(r,i)"), ("m", m), ("r", r),
                                 ("s", s), ("i", i)],
                                lambda m=m, r=r, s=s, i=i: (
                                    twist.coeff_a(s, r, i, m), Fraction(0)))
                for k in spec.k_values:
                    yield _case([("check", "b_s(r,k)"), ("m", m), ("r", r),
                                 ("s", s), ("k", k)],
                                lambda m=m, r=r, s=s, k=k: (
                                    twist.coeff_b(s, r, k, m), Fraction(0)))


def _twist_axioms(spec, contexts):
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        yield _case([("check", "cocycle"), ("m", m)],
                    lambda ctx=ctx: twist.cocycle_sides(ctx()))
        for kind in ("Fcal", "F"):
            for leg in (0, 1):
                yield _case([("check", "counit"), ("m", m), ("element", kind),
                             ("leg", leg)],
                            lambda ctx=ctx, kind=kind, leg=leg: (
                                series_apply_leg(ctx().element(kind), leg,
                                                 "counit0"),
                                constant(UeaElement.one(), ctx().order)))


def _closed_forms(spec, contexts):
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        for g in spec.generators():
            yield _case([("map", "delta"), ("m", m), ("g", g)],
                        lambda ctx=ctx, g=g: (
                            twist.delta_closed(g, ctx()),
                            twist.twisted_direct("delta", g, ctx())))
            yield _case([("map", "antipode"), ("m", m), ("g", g)],
                        lambda ctx=ctx, g=g: (
                            twist.antipode_closed(g, ctx()),
                            twist.twisted_direct("antipode", g, ctx())))


def _zero_series(ctx):
    return constant(UeaElement(), ctx.order)


def _hopf_axioms(spec, contexts):
    for m in spec.m_values:
        ctx = lambda m=m: contexts(m)
        gens = spec.generators()
        for g in gens:
            delta = lambda ctx=ctx, g=g: twist.twisted_direct("delta", g,
                                                              ctx())
            yield _case([("check", "coassociativity"), ("m", m), ("g", g)],
                        lambda ctx=ctx, delta=delta: (
                            twist.delta_leg(delta(), 0, ctx()),
                            twist.delta_leg(delta(), 1, ctx())))
            for leg in (0, 1):
                yield _case([("check", "counit"), ("m", m), ("g", g),
                             ("leg", leg)],
                            lambda ctx=ctx, g=g, delta=delta, leg=leg: (
                                series_apply_leg(delta(), leg, "counit0"),
                                constant(_uea(g), ctx().order)))
            yield _case([("check", "mu(S~ x Id)Delta~"), ("m", m), ("g", g)],
                        lambda ctx=ctx, delta=delta: (
                            twist.convolution_left(delta(), ctx()),
                            _zero_series(ctx())))
            yield _case([("check", "mu(Id x S~)Delta~"), ("m", m), ("g", g)],
                        lambda ctx=ctx, delta=delta: (
                            twist.convolution_right(delta(), ctx()),
                            _zero_series(ctx())))
        pairs = _small_pairs(gens)
        for x, y in pairs:
            yield _case([("check", "Delta~ homomorphism"), ("m", m),
                         ("x", x), ("y", y)],
                        lambda ctx=ctx, x=x, y=y: _homomorphism(ctx(), x, y))
            yield _case([("check", "S~ antihomomorphism"), ("m", m),
                         ("x", x), ("y", y)],
                        lambda ctx=ctx, x=x, y=y: _antihomomorphism(ctx(),
                                                                    x, y))
        if spec.order >= 1:
            g = L(m)
            yield _case([("check", "noncocommutative"), ("m", m), ("g", g)],
                        lambda ctx=ctx, g=g: _cocommutator(ctx(), g),
                        expect_equal=False)
        yield _case([("check", "noncommutative"), ("m", m)],
                    lambda ctx=ctx: (uea_mul(ctx().X, ctx().Y),
                                     uea_mul(ctx().Y, ctx().X)),
                    expect_equal=False)


def _small_pairs(gens):
    """Pairs from the generators of smallest absolute index of each kind."""
    small = sorted(gens, key=lambda g: (abs(g.index2), g))
    picks = []
    for odd in (False, True):
        picks.extend([g for g in small if g.odd == odd][:2])
    return [(x, y) for x in picks for y in picks]


def _homomorphism(ctx, x, y):
    product = normal_order((x, y))
    left = twist.twisted_direct("delta", product, ctx)
    right = series_mul(twist.twisted_direct("delta", x, ctx),
                       twist.twisted_direct("delta", y, ctx))
    return left, right


def _antihomomorphism(ctx, x, y):
    product = normal_order((x, y))
    left = twist.antipode_any(product, ctx)
    sign = -1 if x.odd and y.odd else 1
    right = series_mul(twist.antipode_any(_uea(y), ctx),
                       twist.antipode_any(_uea(x), ctx)).scale(sign)
    return left, right


def _cocommutator(ctx, g):
    delta = twist.twisted_direct("delta", g, ctx)
    return twist.flip_series(delta).truncate(1), delta.truncate(1)


_BUILDERS = {
    "relations": _relations,
    "jacobi": _jacobi,
    "xy": _xy,
    "lemma31": _lemma31,
    "commutation": _commutation,
    "factorial-identities": _factorial_identities,
    "lemma34": _lemma34,
    "lemma35": _lemma35,
    "combinatorial": _combinatorial,
    "twist-axioms": _twist_axioms,
    "closed-forms": _closed_forms,
    "hopf-axioms": _hopf_axioms,
}


def suite_cases(spec, suite_id=None):
    """Returns the cases of one suite (default: spec.suite_id)."""
    suite_id = suite_id or spec.suite_id
    try:
        builder = _BUILDERS[suite_id]
    except KeyError:
        raise UnknownSuite("unknown suite %r" % (suite_id,))
    return list(builder(spec, _Contexts(spec)))


def _evaluate(case):
    try:
        left, right = case.compute()
        difference = diff_report(left, right)
    except SvtError as error:
        return Failure(case.params, error, None,
                       "%s: %s" % (type(error).__name__, error))
    if difference.is_empty == case.expect_equal:
        return None
    if not case.expect_equal:
        difference = "expected the two sides to differ"
    return Failure(case.params, left, right, difference)


def _run_cases(cases, jobs):
    if jobs <= 1:
        return [_evaluate(case) for case in cases]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate, cases))


def run_suite(spec):
    """Runs the suite named by spec and returns its Report.

    Every case is evaluated; failures are listed in case order.

    Raises
    ------
    UnknownSuite, OrderTooLarge
    """
    if not isinstance(spec, SuiteSpec):
        raise TypeError("run_suite expects a SuiteSpec")
    names = SUITES if spec.suite_id == "all" else (spec.suite_id,)
    start = time.perf_counter()
    contexts = _Contexts(spec)
    counts = {}
    failures = []
    for name in names:
        _log.info("suite %s: starting", name)
        began = time.perf_counter()
        cases = list(_BUILDERS[name](spec, contexts))
        results = _run_cases(cases, spec.jobs)
        found = [f for f in results if f is not None]
        if len(names) > 1:
            found = [f._replace(case=(("suite", name),) + f.case)
                     for f in found]
        failures.extend(found)
        counts[name] = len(cases)
        _log.info("suite %s: %d cases, %d failures, %.2fs", name,
                  len(cases), len(found), time.perf_counter() - began)
        for failure in found:
            _log.info("suite %s: FAIL %s", name, failure.case)
    return Report(spec.suite_id, sum(counts.values()), failures,
                  time.perf_counter() - start, counts)
