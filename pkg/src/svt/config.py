"""Defaults and parameter validation.

svt reads no configuration files and no environment variables; every knob
is a keyword argument or a command-line option.  The rules below follow one
convention: a rule takes a value, returns it (possibly converted) and raises
TypeError or ValueError with a ``{name}`` placeholder in the message, which
check_param() fills in with the parameter's name.
"""
from fractions import Fraction

__all__ = ["DEFAULT_ORDER", "MAX_ORDER", "DEFAULT_M_VALUES",
           "DEFAULT_I_RANGE", "DEFAULT_K2_RANGE", "DEFAULT_A_VALUES",
           "DEFAULT_MAX_POWER", "check_param", "integer", "rational",
           "nonzero", "nonnegative", "at_most", "nonempty", "each"]

DEFAULT_ORDER = 3
MAX_ORDER = 5
DEFAULT_M_VALUES = (1, 2)
DEFAULT_I_RANGE = (-4, 4)
DEFAULT_K2_RANGE = (-5, 5)
DEFAULT_A_VALUES = (Fraction(0), Fraction(1), Fraction(-1, 2),
                    Fraction(3, 2))
DEFAULT_MAX_POWER = 3


def check_param(name, value, *rules, ignore_none=False):
    """Runs value through rules in order and returns the converted value.

    Errors raised by a rule are re-raised with the same type and the
    parameter name substituted into the message.
    """
    if ignore_none and value is None:
        return None
    for rule in rules:
        try:
            value = rule(value)
        except (TypeError, ValueError) as error:
            raise type(error)(error.args[0].format(name='`%s`' % name))
    return value


def integer(value):
    if isinstance(value, bool):
        raise TypeError('{name} must be an integer, not a bool')
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError('{name} must be an integer')
        return int(value)
    try:
        return int(value)
    except (ValueError, TypeError):
        raise TypeError('Could not convert {name} into an integer')


def rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError('{name} must be exact, floating point is not accepted')
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise TypeError('Could not convert {name} into a rational number P/Q')


def nonzero(value):
    if value == 0:
        raise ValueError('{name} must be nonzero')
    return value


def nonnegative(value):
    if value < 0:
        raise ValueError('{name} must not be negative')
    return value


def at_most(limit):
    def rule(value):
        if value > limit:
            raise ValueError('{name} must be at most %d' % limit)
        return value
    return rule


def nonempty(value):
    if not value:
        raise ValueError('{name} must not be empty')
    return value


def each(*rules):
    """Lifts rules to a rule over a sequence, returning a tuple."""
    def rule(values):
        result = []
        for value in values:
            for inner in rules:
                value = inner(value)
            result.append(value)
        return tuple(result)
    return rule
