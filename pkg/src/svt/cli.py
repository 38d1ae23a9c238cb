"""The svt command line.

    svt expand <object> [--m INT] [--order INT] [--format text|latex|json]
                        [--alpha P/Q]
    svt check <suite> [--m INT]... [--order INT] [--i-min INT --i-max INT]
                      [--k2-min INT --k2-max INT] [--a P/Q]...
                      [--jobs N] [--format text|json]
    svt list-suites

Exit codes: 0 success, 1 an identity failed, 2 a usage or parameter error.
"""
import argparse
import json
import logging
import re
import sys
from fractions import Fraction

from . import __version__
from .config import DEFAULT_A_VALUES, DEFAULT_I_RANGE, DEFAULT_K2_RANGE, \
    DEFAULT_M_VALUES, DEFAULT_MAX_POWER, DEFAULT_ORDER, check_param, each, \
    integer, nonempty, nonnegative, nonzero, rational
from .errors import SvtError
from .liealg import G, L
from .render import specialize, to_json, to_latex, to_text, twist_latex, \
    twist_text
from .twist import KINDS, TwistContext, antipode_closed, delta_closed
from .verify import SUITES, SUMMARIES, SuiteSpec, run_suite

__all__ = ["CliConfig", "build_parser", "cmd_expand", "cmd_check",
           "cmd_list_suites", "main", "OBJECTS", "FORMATS"]

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

OBJECTS = ("delta-L", "delta-G", "antipode-L", "antipode-G", "twist")
FORMATS = ("text", "latex", "json")

_OBJECT_HELP = """\
objects:
  delta-L I        twisted coproduct of L_I
  delta-G K2       twisted coproduct of G_{K2/2}
  antipode-L I     twisted antipode of L_I
  antipode-G K2    twisted antipode of G_{K2/2}
  twist KIND A     twist element KIND_A, KIND one of F, Fcal, u, v

G indices are passed doubled, so delta-G 1 is the coproduct of G_{1/2}.
A may be any rational P/Q.  Twist elements print symbolically in X and Y;
with --alpha or --format json they are expanded in the PBW basis.
"""


# Negative rationals such as -1/2 are values, not option flags.
_NEGATIVE_NUMBER = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class _Parser(argparse.ArgumentParser):

    def __init__(self, *args, **kwargs):
        super(_Parser, self).__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_NUMBER


def _rational_arg(text):
    try:
        return check_param("value", text, rational)
    except (TypeError, ValueError) as error:
        raise argparse.ArgumentTypeError(str(error))


class CliConfig(object):
    """The validated options of one svt invocation.

    Raises
    ------
    TypeError, ValueError
        For malformed values.
    """

    def __init__(self, command, selector=(), m_values=(1,),
                 order=DEFAULT_ORDER, format="text", alpha=None,
                 i_range=DEFAULT_I_RANGE, k2_range=DEFAULT_K2_RANGE,
                 a_values=DEFAULT_A_VALUES, max_power=DEFAULT_MAX_POWER,
                 jobs=1, unsafe_order=False, verbose=0):
        if command not in ("expand", "check", "list-suites"):
            raise ValueError("unknown command %r" % (command,))
        self.command = command
        self.selector = tuple(selector)
        self.m_values = check_param("m", m_values, nonempty,
                                    each(integer, nonzero))
        self.order = check_param("order", order, integer, nonnegative)
        if format not in FORMATS:
            raise ValueError("unknown format %r" % (format,))
        self.format = format
        self.alpha = check_param("alpha", alpha, rational, ignore_none=True)
        self.i_range = tuple(check_param("i range", i_range, each(integer)))
        self.k2_range = tuple(check_param("k2 range", k2_range,
                                          each(integer)))
        self.a_values = check_param("a", a_values, nonempty, each(rational))
        self.max_power = check_param("max-power", max_power, integer,
                                     nonnegative)
        self.jobs = check_param("jobs", jobs, integer, nonzero, nonnegative)
        self.unsafe_order = bool(unsafe_order)
        self.verbose = verbose

    @property
    def m(self):
        return self.m_values[0]

    @classmethod
    def from_args(cls, args):
        """Builds the config from a parsed argparse namespace."""
        if args.command == "expand":
            return cls("expand", [args.object] + list(args.params),
                       m_values=(args.m,), order=args.order,
                       format=args.format, alpha=args.alpha,
                       unsafe_order=args.unsafe_order, verbose=args.verbose)
        if args.command == "check":
            return cls("check", [args.suite],
                       m_values=args.m or DEFAULT_M_VALUES, order=args.order,
                       format=args.format,
                       i_range=(args.i_min, args.i_max),
                       k2_range=(args.k2_min, args.k2_max),
                       a_values=args.a or DEFAULT_A_VALUES,
                       max_power=args.max_power, jobs=args.jobs,
                       unsafe_order=args.unsafe_order, verbose=args.verbose)
        return cls("list-suites", verbose=args.verbose)

    def __repr__(self):
        return "CliConfig(%r, %r, m=%r, order=%d, format=%r)" % (
            self.command, self.selector, self.m_values, self.order,
            self.format)


def build_parser():
    parser = _Parser(
        prog="svt",
        description="Expand and verify the twisted Hopf structure of the "
                    "super-Virasoro algebra.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-vv for debug)")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    expand = commands.add_parser(
        "expand", help="print a twisted coproduct, antipode or twist element",
        epilog=_OBJECT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    expand.add_argument("object", choices=OBJECTS)
    expand.add_argument("params", nargs="+", metavar="param")
    expand.add_argument("--m", type=int, default=1)
    expand.add_argument("--order", type=int, default=DEFAULT_ORDER)
    expand.add_argument("--format", choices=FORMATS, default="text")
    expand.add_argument("--alpha", type=_rational_arg, default=None,
                        help="substitute a rational P/Q for alpha")
    expand.add_argument("--unsafe-order", action="store_true")

    check = commands.add_parser(
        "check", help="run a verification suite",
        description="Runs one of the suites listed by list-suites, or all.")
    check.add_argument("suite")
    check.add_argument("--m", type=int, action="append",
                       help="repeatable, default 1 and 2")
    check.add_argument("--order", type=int, default=DEFAULT_ORDER)
    check.add_argument("--i-min", type=int, default=DEFAULT_I_RANGE[0])
    check.add_argument("--i-max", type=int, default=DEFAULT_I_RANGE[1])
    check.add_argument("--k2-min", type=int, default=DEFAULT_K2_RANGE[0],
                       help="lower bound of 2k")
    check.add_argument("--k2-max", type=int, default=DEFAULT_K2_RANGE[1],
                       help="upper bound of 2k")
    check.add_argument("--a", type=_rational_arg, action="append",
                       help="repeatable shift P/Q of the twist elements")
    check.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--unsafe-order", action="store_true")

    commands.add_parser("list-suites", help="list the verification suites")
    return parser


def _index(text, name):
    return check_param(name, text, integer)


def _expand_value(selector, config):
    name, params = selector[0], selector[1:]
    if name not in OBJECTS:
        raise ValueError("unknown object %r, expected one of %s"
                         % (name, ", ".join(OBJECTS)))
    wanted = 2 if name == "twist" else 1
    if len(params) != wanted:
        raise ValueError("%s takes %d parameter%s" % (
            name, wanted, "s" if wanted > 1 else ""))
    ctx = TwistContext(config.m, config.order,
                       unsafe_order=config.unsafe_order)
    if name == "twist":
        kind = params[0]
        if kind not in KINDS:
            raise ValueError("unknown twist element %r, expected one of %s"
                             % (kind, ", ".join(KINDS)))
        a = check_param("a", params[1], rational)
        return ("twist", kind, a), ctx.element(kind, a)
    if name.endswith("-L"):
        g = L(_index(params[0], "i"))
    else:
        g = G(Fraction(_index(params[0], "k2"), 2))
    if name.startswith("delta"):
        return (name, g), delta_closed(g, ctx)
    return (name, g), antipode_closed(g, ctx)


def cmd_expand(selector, config):
    """Returns the rendering of the selected object.

    Raises
    ------
    SvtError, TypeError, ValueError
        For a malformed selector or parameters.
    """
    what, value = _expand_value(selector, config)
    _log.info("expanded %s at m=%d, order %d", what, config.m, config.order)
    if config.alpha is not None:
        value = specialize(value, config.alpha)
    if config.format == "json":
        return json.dumps(to_json(value))
    if what[0] == "twist" and config.alpha is None:
        if config.format == "latex":
            return twist_latex(what[1], what[2], config.order)
        return twist_text(what[1], what[2], config.order)
    if config.format == "latex":
        return to_latex(value)
    return to_text(value)


def cmd_check(suite, config, out=None):
    """Runs a suite, prints its report and returns the exit code."""
    out = out or sys.stdout
    spec = SuiteSpec(suite, m_values=config.m_values,
                     i_range=config.i_range, k2_range=config.k2_range,
                     order=config.order, a_values=config.a_values,
                     max_power=config.max_power, jobs=config.jobs,
                     unsafe_order=config.unsafe_order)
    report = run_suite(spec)
    if config.format == "json":
        out.write(json.dumps(report.to_json()) + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_list_suites(out=None):
    out = out or sys.stdout
    for name in SUITES:
        out.write("%-22s %s\n" % (name, SUMMARIES[name]))
    out.write("%-22s %s\n" % ("all", "every suite above"))
    return EXIT_OK


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="[%(levelname)s] %(name)s: %(message)s")


def main(argv=None, out=None, err=None):
    """Runs svt with the given arguments and returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code
    try:
        config = CliConfig.from_args(args)
        _configure_logging(config.verbose)
        if config.command == "expand":
            out.write(cmd_expand(config.selector, config) + "\n")
            return EXIT_OK
        if config.command == "check":
            return cmd_check(config.selector[0], config, out)
        return cmd_list_suites(out)
    except (SvtError, TypeError, ValueError) as error:
        err.write("svt: error: %s\n" % (error,))
        return EXIT_USAGE
