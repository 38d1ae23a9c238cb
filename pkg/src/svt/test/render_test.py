import json
import sys
import unittest
from fractions import Fraction
from ..liealg import G, L
from ..pbw import UeaElement, coproduct0
from ..render import format_index, from_json, specialize, to_json, \
    to_latex, to_text, twist_latex, twist_text
from ..scalars import ALPHA, scalar
from ..tensor import TensorElement
from ..tseries import TSeries
from ..twist import TwistContext, delta_closed


def gen(g, coeff=1):
    return UeaElement.from_generator(g, coeff)


HALF = Fraction(1, 2)


class TextTest(unittest.TestCase):
    __tags__ = ["render"]

    def test_primitive_coproduct(self):
        ctx = TwistContext(1, order=0)
        self.assertEqual(to_text(delta_closed(L(0), ctx)), "L_0⊗1 + 1⊗L_0")
        self.assertEqual(to_latex(delta_closed(L(0), ctx)),
                         "L_0 \\otimes 1 + 1 \\otimes L_0")

    def test_powers(self):
        square = gen(L(1)) * gen(L(1))
        self.assertEqual(to_text(square), "L_1²")
        self.assertEqual(to_text(coproduct0(square)),
                         "L_1²⊗1 + 2L_1⊗L_1 + 1⊗L_1²")

    def test_signs_and_indices(self):
        self.assertEqual(to_text(gen(G(1)) * gen(G(HALF))),
                         "−G_{1/2}G_1 + 2L_{3/2}")
        self.assertEqual(to_text(gen(L(2), -ALPHA)), "−αL_2")
        self.assertEqual(to_text(scalar(HALF) - 3 * ALPHA), "1/2 − 3α")
        self.assertEqual(to_text(UeaElement()), "0")
        self.assertEqual(to_text(G(HALF)), "G_{1/2}")
        self.assertEqual(to_text(Fraction(-3, 4)), "-3/4")

    def test_series(self):
        x = TSeries(1, [UeaElement.one(), gen(L(1), -1)])
        self.assertEqual(to_text(x), "1 − (L_1)t")
        y = TSeries(2, [UeaElement.one(), UeaElement(), gen(L(-1), HALF)])
        self.assertEqual(to_text(y), "1 + ((1/2)L_{-1})t²")

    def test_format_index(self):
        self.assertEqual(format_index(3), "3")
        self.assertEqual(format_index(-2), "{-2}")
        self.assertEqual(format_index(Fraction(-1, 2)), "{-1/2}")
        self.assertEqual(format_index(Fraction(-1, 2), latex=True),
                         "{-\\frac{1}{2}}")

    def test_unrenderable(self):
        self.assertRaises(TypeError, to_text, [1, 2])
        self.assertRaises(TypeError, to_latex, "L_0")


class TwistTextTest(unittest.TestCase):
    __tags__ = ["render"]

    def test_twist_text(self):
        self.assertEqual(twist_text("Fcal", 0, 1), "1⊗1 − (X⊗Y)t")
        self.assertEqual(twist_text("F", 0, 2),
                         "1⊗1 + (X⊗Y)t + (1/2)(X^<2>⊗Y²)t²")
        self.assertEqual(twist_text("u", 0, 1), "1 − (XY)t")
        self.assertEqual(twist_text("v", 1, 1), "1 + ((X + 1)Y)t")
        self.assertEqual(twist_text("Fcal", 0, 0), "1⊗1")

    def test_twist_latex(self):
        self.assertEqual(twist_latex("F", 1, 1),
                         "1 \\otimes 1 + ((X + 1) \\otimes Y)t")


class JsonTest(unittest.TestCase):
    __tags__ = ["render"]

    def test_structure(self):
        self.assertEqual(to_json(gen(L(1))), {
            "rank": 1,
            "terms": [{"legs": [[{"g": "L", "i2": 2}]],
                       "coeff": [{"pow": 0, "num": "1", "den": "1"}]}]})
        self.assertEqual(to_json(scalar(0)), [])
        self.assertEqual(to_json(scalar(HALF) * ALPHA), [
            {"pow": 1, "num": "1", "den": "2"}])

    def test_round_trip(self):
        ctx = TwistContext(1, order=1)
        values = [gen(G(HALF)) * gen(G(Fraction(3, 2))),
                  coproduct0(gen(G(HALF)) * gen(L(2), ALPHA)),
                  delta_closed(G(HALF), ctx),
                  ctx.element("u", HALF),
                  scalar(HALF) - ALPHA ** 2]
        for value in values:
            text = json.dumps(to_json(value))
            self.assertEqual(from_json(json.loads(text)), value)

    def test_term_order(self):
        data = to_json(gen(L(1)) + gen(L(-1)))
        self.assertEqual([t["legs"][0][0]["i2"] for t in data["terms"]],
                         [-2, 2])

    def test_malformed(self):
        self.assertRaises(ValueError, from_json, {"rank": 1})
        self.assertRaises(ValueError, from_json, None)
        self.assertRaises(ValueError, from_json, {
            "rank": 1, "terms": [{"legs": [[{"g": "H", "i2": 0}]],
                                  "coeff": []}]})
        self.assertRaises(ValueError, from_json, {
            "rank": 2, "terms": [{"legs": [[]],
                                  "coeff": [{"pow": 0, "num": "1",
                                             "den": "1"}]}]})
        self.assertRaises(TypeError, to_json, object())

    def test_zero_denominator(self):
        coeff = [{"pow": 0, "num": "1", "den": "0"}]
        self.assertRaises(ValueError, from_json, coeff)
        self.assertRaises(ValueError, from_json, [{"pow": 0, "num": "1",
                                                   "den": "two"}])
        element = {"rank": 1, "terms": [{"legs": [[{"g": "L", "i2": 2}]],
                                         "coeff": coeff}]}
        self.assertRaises(ValueError, from_json, element)
        self.assertRaises(ValueError, from_json,
                          {"order": 0, "coeffs": [element]})
        with self.assertRaises(ValueError) as caught:
            from_json(coeff)
        self.assertIn("zero denominator", str(caught.exception))


class SpecializeTest(unittest.TestCase):
    __tags__ = ["render"]

    def test_specialize(self):
        self.assertEqual(specialize(gen(L(1), ALPHA + 1), 2), gen(L(1), 3))
        self.assertEqual(specialize(ALPHA ** 2 - ALPHA, HALF),
                         scalar(Fraction(-1, 4)))
        x = TSeries(1, [TensorElement.one(2),
                        TensorElement.pure(gen(L(0)), gen(L(1), ALPHA))])
        self.assertEqual(specialize(x, 0),
                         TSeries(1, [TensorElement.one(2)]))
        self.assertRaises(TypeError, specialize, "alpha", 1)


if __name__ == '__main__':
    sys.exit(unittest.main())
