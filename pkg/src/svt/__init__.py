'''
svt - exact symbolic computation of the Jordanian twist quantization of
the centerless super-Virasoro algebra.

Notes
-----

Coefficients
~~~~~~~~~~~~
Every coefficient lives in Q[alpha], alpha being the free parameter of the
twist.  Rational numbers are ``fractions.Fraction`` values, polynomials in
alpha are sympy ring elements (see svt.scalars).  Nothing is ever rounded;
two values are equal exactly when their canonical forms are.

Elements
~~~~~~~~
 *  LieElement     combinations of the generators L_i and G_k (svt.liealg)
 *  UeaElement     the enveloping algebra U(L) in its PBW basis (svt.pbw)
 *  TensorElement  U(L) x U(L) and U(L) x U(L) x U(L) (svt.tensor)
 *  TSeries        power series in t truncated at an order N (svt.tseries)

G indices are half-integers; internally every index is stored doubled.

Twisting
~~~~~~~~
A TwistContext fixes the integer m and the order N.  It builds
X = L_0/m + alpha L_{-m} and Y = exp(alpha ad L_{-m})(L_m), the twist
elements F_a, Fcal_a, u_a, v_a, and from them the twisted coproduct and
antipode, both by conjugation and from their closed forms (svt.twist).

Verification
~~~~~~~~~~~~
svt.verify runs grids of exact identity checks; svt.cli wraps expansion
and verification in the ``svt`` command.  Example::

    >>> from svt import TwistContext, L, delta_closed, to_text
    >>> ctx = TwistContext(1, order=0)
    >>> to_text(delta_closed(L(0), ctx))
    'L_0⊗1 + 1⊗L_0'
'''
__version__ = "1.0.0"
version_info = (1, 0, 0, "")

from .errors import *
from .scalars import ALPHA, scalar
from .liealg import G, L, Generator, LieElement, bracket, build_xy
from .pbw import UeaElement, normal_order, uea_mul
from .tensor import TensorElement
from .tseries import TSeries
from .twist import TwistContext, antipode_closed, delta_closed, \
    twisted_direct
from .render import from_json, to_json, to_latex, to_text
from .verify import SuiteSpec, run_suite
