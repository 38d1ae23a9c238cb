"""Text, LaTeX and JSON renderings of svt values.

Text output uses Unicode (⊗, −, superscripts).  Within a sum, terms of
higher degree come first, and within a degree the term with more factors
on its left legs comes first, so the primitive coproduct of L_0 prints as
L_0⊗1 + 1⊗L_0.

The JSON schema is:

    series   {"order": N, "coeffs": [element, ...]}
    element  {"rank": 1|2|3, "terms": [{"legs": [[factor, ...], ...],
                                        "coeff": poly}, ...]}
    factor   {"g": "L"|"G", "i2": int}
    poly     [{"pow": int, "num": str, "den": str}, ...]

An element of U(L) is written as a rank 1 element.  Term lists are sorted
by the PBW key of their legs.
"""
import math
from fractions import Fraction

from .combination import Combination
from .errors import SvtError
from .liealg import Generator, LieElement
from .pbw import UeaElement
from .scalars import is_scalar, scalar, scalar_eval, \
    scalar_from_terms, scalar_terms
from .tensor import TensorElement
from .tseries import TSeries

__all__ = ["to_text", "to_latex", "to_json", "from_json", "specialize",
           "format_index", "twist_text", "twist_latex"]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
MINUS = "−"
TENSOR = "⊗"


def format_index(index, latex=False):
    """Formats a generator index, in braces unless it is one character."""
    text = str(Fraction(index))
    if latex and "/" in text:
        num, den = text.lstrip("-").split("/")
        text = "%s\\frac{%s}{%s}" % ("-" if index < 0 else "", num, den)
    if len(text) > 1:
        return "{%s}" % text
    return text


def _power(n, latex):
    if n == 1:
        return ""
    if latex:
        return "^{%d}" % n
    return str(n).translate(_SUPERSCRIPTS)


def _generator(g, latex):
    return "%s_%s" % (g.kind, format_index(g.index, latex))


def _monomial(monomial, latex):
    if not monomial:
        return "1"
    parts = []
    run = 1
    for pos, g in enumerate(monomial):
        if pos + 1 < len(monomial) and monomial[pos + 1] == g:
            run += 1
            continue
        parts.append(_generator(g, latex) + _power(run, latex))
        run = 1
    return " ".join(parts) if latex else "".join(parts)


def _rational(q, latex, wrap=False):
    if q.denominator == 1:
        return str(q.numerator)
    if latex:
        return "\\frac{%d}{%d}" % (q.numerator, q.denominator)
    text = "%d/%d" % (q.numerator, q.denominator)
    return "(%s)" % text if wrap else text


def _alpha(p, latex):
    if p == 0:
        return ""
    return ("\\alpha" if latex else "α") + _power(p, latex)


def _scalar_term(p, q, latex, wrap):
    if p == 0:
        return _rational(q, latex, wrap)
    if q == 1:
        return _alpha(p, latex)
    return _rational(q, latex, True) + _alpha(p, latex)


def _join(pieces, latex):
    """Joins (negative, text) pairs into a signed sum."""
    if not pieces:
        return "0"
    minus = "-" if latex else MINUS
    out = []
    for pos, (negative, text) in enumerate(pieces):
        if pos == 0:
            out.append(minus + text if negative else text)
        else:
            out.append(" %s %s" % (minus if negative else "+", text))
    return "".join(out)


def _scalar(x, latex):
    terms = scalar_terms(x)
    return _join([(q < 0, _scalar_term(p, abs(q), latex, False))
                  for p, q in terms], latex)


def _coefficient(c):
    """Splits a Scalar into (negative, magnitude) with a single-term sign."""
    terms = scalar_terms(c)
    if len(terms) == 1 and terms[0][1] < 0:
        return True, -c
    return False, c


def _scaled(c, body, latex):
    """Renders c * body, body being the text of a basis element."""
    negative, c = _coefficient(c)
    terms = scalar_terms(c)
    if body == "1":
        return negative, _scalar(c, latex) if len(terms) > 1 else \
            _scalar_term(terms[0][0], terms[0][1], latex, False)
    if len(terms) > 1:
        prefix = "(%s)" % _scalar(c, latex)
    elif terms[0] == (0, 1):
        prefix = ""
    else:
        prefix = _scalar_term(terms[0][0], terms[0][1], latex, True)
    sep = " " if latex and prefix else ""
    return negative, prefix + sep + body


def _text_key(legs):
    return (-sum(len(m) for m in legs), tuple(-len(m) for m in legs), legs)


def _legs_text(legs, latex):
    join = " \\otimes " if latex else TENSOR
    return join.join(_monomial(m, latex) for m in legs)


def _combination(x, latex):
    if isinstance(x, TensorElement):
        items = sorted(x.terms.items(), key=lambda item: _text_key(item[0]))
        pieces = [_scaled(c, _legs_text(legs, latex), latex)
                  for legs, c in items]
    elif isinstance(x, UeaElement):
        items = sorted(x.terms.items(), key=lambda item: _text_key((item[0],)))
        pieces = [_scaled(c, _monomial(m, latex), latex) for m, c in items]
    else:
        pieces = [_scaled(c, _generator(g, latex), latex)
                  for g, c in sorted(x.terms.items())]
    return _join(pieces, latex)


def _series(x, latex):
    pieces = []
    for degree, coeff in enumerate(x.coeffs):
        if not coeff:
            continue
        text = _combination(coeff, latex)
        if degree == 0:
            pieces.append((False, text))
            continue
        negative = False
        if len(coeff) == 1:
            (_, c), = coeff.terms.items()
            negative, _ = _coefficient(c)
            if negative:
                text = _combination(-coeff, latex)
        t = "t" + _power(degree, latex)
        pieces.append((negative, "(%s)%s" % (text, t)))
    return _join(pieces, latex)


def _render(value, latex):
    if isinstance(value, TSeries):
        return _series(value, latex)
    if isinstance(value, Combination):
        return _combination(value, latex)
    if isinstance(value, Generator):
        return _generator(value, latex)
    if isinstance(value, Fraction) or isinstance(value, int):
        return _rational(Fraction(value), latex)
    if is_scalar(value):
        return _scalar(value, latex)
    raise TypeError("cannot render %s" % type(value).__name__)


def to_text(value):
    """Renders a Scalar, Generator, element or series as Unicode text."""
    return _render(value, False)


def to_latex(value):
    """Renders a Scalar, Generator, element or series as LaTeX."""
    return _render(value, True)


def _factorial_symbol(a, r, rising, latex):
    a = Fraction(a)
    if r == 0:
        return ""
    if r == 1:
        if not a:
            return "X"
        sign = "+" if a > 0 else ("-" if latex else MINUS)
        return "(X %s %s)" % (sign, _rational(abs(a), latex))
    shift = "" if not a else "_%s" % format_index(a, latex)
    if latex:
        bracket = "^{\\langle %d\\rangle}" if rising else "^{[%d]}"
    else:
        bracket = "^<%d>" if rising else "^[%d]"
    return "X" + shift + bracket % r


def _y_symbol(r, latex):
    if r == 0:
        return ""
    return "Y" + _power(r, latex)


def twist_text(kind, a, order, latex=False):
    """Renders F_a, Fcal_a, u_a or v_a symbolically in X and Y.

    twist_text('Fcal', 0, 1) is '1⊗1 − (X⊗Y)t'.
    """
    a = Fraction(a)
    pieces = []
    for r in range(order + 1):
        negative = kind in ("Fcal", "u") and r % 2 == 1
        if kind == "F":
            left = _factorial_symbol(a, r, True, latex)
        elif kind == "u":
            left = _factorial_symbol(-a, r, False, latex)
        else:
            left = _factorial_symbol(a, r, False, latex)
        right = _y_symbol(r, latex)
        if kind in ("F", "Fcal"):
            join = " \\otimes " if latex else TENSOR
            body = join.join([left or "1", right or "1"])
        else:
            body = (left + (" " if latex and left and right else "")
                    + right) or "1"
        if r == 0:
            pieces.append((False, body))
            continue
        weight = Fraction(1, math.factorial(r))
        prefix = "" if weight == 1 else _rational(weight, latex, True)
        pieces.append((negative, "%s(%s)t%s" % (prefix, body,
                                                _power(r, latex))))
    return _join(pieces, latex)


def twist_latex(kind, a, order):
    return twist_text(kind, a, order, latex=True)


def _poly_json(c):
    return [{"pow": p, "num": str(q.numerator), "den": str(q.denominator)}
            for p, q in scalar_terms(c)]


def _factor_json(g):
    return {"g": g.kind, "i2": g.index2}


def _element_json(x):
    if isinstance(x, LieElement):
        x = UeaElement.from_lie(x)
    if isinstance(x, UeaElement):
        items = [((m,), c) for m, c in x.terms.items()]
        rank = 1
    else:
        items = list(x.terms.items())
        rank = x.rank
    return {"rank": rank,
            "terms": [{"legs": [[_factor_json(g) for g in m] for m in legs],
                       "coeff": _poly_json(c)}
                      for legs, c in sorted(items)]}


def to_json(value):
    """Returns the JSON-ready structure (dicts, lists, str, int) of value."""
    if isinstance(value, TSeries):
        return {"order": value.order,
                "coeffs": [_element_json(c) for c in value.coeffs]}
    if isinstance(value, Combination):
        return _element_json(value)
    if is_scalar(value) or isinstance(value, (int, Fraction)):
        return _poly_json(scalar(value))
    raise TypeError("cannot encode %s" % type(value).__name__)


class _BadJson(SvtError):
    """Malformed element JSON."""


def _poly_from(data):
    terms = []
    for t in data:
        den = int(t["den"])
        if not den:
            raise _BadJson("zero denominator in coefficient %r" % (t,))
        terms.append((int(t["pow"]), Fraction(int(t["num"]), den)))
    return scalar_from_terms(terms)


def _factor_from(data):
    if data["g"] not in ("L", "G"):
        raise _BadJson("unknown generator kind %r" % (data["g"],))
    return Generator(int(data["i2"]), data["g"] == "G")


def _element_from(data):
    rank = int(data["rank"])
    terms = {}
    for term in data["terms"]:
        legs = tuple(tuple(_factor_from(f) for f in leg)
                     for leg in term["legs"])
        if len(legs) != rank:
            raise _BadJson("term with %d legs in a rank %d element"
                           % (len(legs), rank))
        terms[legs] = _poly_from(term["coeff"])
    if rank == 1:
        return UeaElement(dict((legs[0], c) for legs, c in terms.items()))
    return TensorElement(rank, terms)


def from_json(data):
    """Parses the structure produced by to_json back into a value.

    Raises
    ------
    ValueError
        If data does not follow the schema.
    """
    try:
        if isinstance(data, list):
            return _poly_from(data)
        if "order" in data:
            return TSeries(int(data["order"]),
                           [_element_from(c) for c in data["coeffs"]])
        return _element_from(data)
    except (KeyError, TypeError, _BadJson) as error:
        raise ValueError("malformed element JSON: %s" % (error,))


def specialize(value, alpha):
    """Substitutes alpha := alpha in every coefficient of value."""
    if isinstance(value, TSeries):
        return value.map(lambda c: specialize(c, alpha))
    if isinstance(value, Combination):
        return value._like(dict(
            (key, scalar(scalar_eval(c, alpha)))
            for key, c in value.terms.items()))
    if is_scalar(value):
        return scalar(scalar_eval(value, alpha))
    raise TypeError("cannot specialize %s" % type(value).__name__)

