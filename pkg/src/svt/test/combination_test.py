import sys
import unittest
from fractions import Fraction
from ..combination import Combination, accumulate
from ..liealg import L, LieElement
from ..pbw import UeaElement
from ..scalars import ALPHA, scalar


class CombinationTest(unittest.TestCase):
    __tags__ = ["combination"]

    def test_accumulate(self):
        acc = {}
        accumulate(acc, "a", scalar(2))
        accumulate(acc, "b", scalar(0))
        self.assertEqual(acc, {"a": scalar(2)})
        accumulate(acc, "a", scalar(-2))
        self.assertEqual(acc, {})

    def test_zero_coefficients_dropped(self):
        x = LieElement({L(1): scalar(0), L(2): ALPHA})
        self.assertEqual(len(x), 1)
        self.assertEqual(x.coefficient(L(1)), scalar(0))
        self.assertEqual(x.coefficient(L(2)), ALPHA)

    def test_arithmetic(self):
        x = LieElement.from_generator(L(1), 2)
        y = LieElement.from_generator(L(2), ALPHA)
        self.assertEqual((x + y) - y, x)
        self.assertEqual(x - x, LieElement())
        self.assertTrue((x - x).is_zero)
        self.assertEqual(-x, x.scale(-1))
        self.assertEqual(x.scale(Fraction(1, 2)),
                         LieElement.from_generator(L(1)))
        self.assertEqual(x.scale(0), LieElement())
        self.assertEqual(y.scale(ALPHA).coefficient(L(2)), ALPHA * ALPHA)

    def test_items(self):
        x = LieElement({L(2): scalar(1), L(-1): scalar(3)})
        self.assertEqual([g for g, _ in x.items()], [L(-1), L(2)])
        self.assertEqual(list(x), x.items())

    def test_equality(self):
        x = LieElement.from_generator(L(1))
        self.assertEqual(x, LieElement.from_generator(L(1)))
        self.assertEqual(hash(x), hash(LieElement.from_generator(L(1))))
        self.assertNotEqual(x, UeaElement.from_generator(L(1)))
        self.assertNotEqual(LieElement(), UeaElement())
        self.assertEqual(UeaElement.one(), 1)
        self.assertEqual(UeaElement(), 0)

    def test_unit_like(self):
        self.assertRaises(NotImplementedError, Combination().unit_like)
        self.assertEqual(UeaElement.from_generator(L(1)).unit_like(),
                         UeaElement.one())


if __name__ == '__main__':
    sys.exit(unittest.main())
