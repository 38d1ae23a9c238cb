import random
import sys
import unittest
from fractions import Fraction
from ..errors import MixedParity
from ..liealg import G, Generator, L, LieElement
from ..pbw import UNIT, UeaElement, antipode0, cache_info, clear_caches, \
    coproduct0, counit0, falling, is_canonical, monomial_parity, \
    monomial_product, normal_order, rising, shifted_factorial, uea_mul
from ..scalars import ALPHA, scalar
from ..tensor import TensorElement


def half(n):
    return Fraction(n, 2)


def gen(g, coeff=1):
    return UeaElement.from_generator(g, coeff)


def mono(*gens):
    return UeaElement({tuple(gens): scalar(1)})


GENERATORS = [L(i) for i in range(-2, 3)] + \
    [G(half(k2)) for k2 in range(-3, 4)]


def random_word(rng, length):
    return tuple(rng.choice(GENERATORS) for _ in range(length))


def random_element(rng):
    total = UeaElement()
    for _ in range(rng.randint(1, 3)):
        coeff = scalar(rng.randint(-3, 3)) + ALPHA * rng.randint(0, 2)
        total = total + normal_order(random_word(rng, rng.randint(0, 2)),
                                     coeff)
    return total


class MonomialTest(unittest.TestCase):
    __tags__ = ["pbw"]

    def test_is_canonical(self):
        self.assertTrue(is_canonical(UNIT))
        self.assertTrue(is_canonical((L(0), L(1))))
        self.assertTrue(is_canonical((L(1), L(1))))
        self.assertTrue(is_canonical((G(half(-1)), L(0), G(half(1)))))
        self.assertFalse(is_canonical((L(1), L(0))))
        self.assertFalse(is_canonical((G(half(1)), G(half(1)))))

    def test_monomial_parity(self):
        self.assertEqual(monomial_parity(UNIT), 0)
        self.assertEqual(monomial_parity((G(half(1)), L(1))), 1)
        self.assertEqual(monomial_parity((G(half(1)), G(1))), 0)


class NormalOrderTest(unittest.TestCase):
    __tags__ = ["pbw"]

    def test_normal_order(self):
        self.assertEqual(normal_order((L(1), L(0))),
                         mono(L(0), L(1)) - gen(L(1)))
        self.assertEqual(normal_order((L(0), L(1))), mono(L(0), L(1)))
        self.assertEqual(normal_order(()), UeaElement.one())
        self.assertEqual(normal_order((L(2), L(-2))),
                         mono(L(-2), L(2)) - gen(L(0), 4))

    def test_odd_square(self):
        self.assertEqual(normal_order((G(half(1)), G(half(1)))), gen(L(1)))
        self.assertEqual(normal_order((G(0), G(0))), gen(L(0)))

    def test_odd_swap(self):
        # G_1 G_{1/2} = -G_{1/2} G_1 + 2 L_{3/2}
        self.assertEqual(normal_order((G(1), G(half(1)))),
                         -mono(G(half(1)), G(1)) +
                         gen(Generator(3, False), 2))

    def test_coefficient(self):
        self.assertEqual(normal_order((L(1), L(0)), ALPHA),
                         (mono(L(0), L(1)) - gen(L(1))).scale(ALPHA))
        self.assertEqual(normal_order((L(1), L(0)), 0), UeaElement())

    def test_strategy(self):
        self.assertRaises(ValueError, normal_order, (L(1),), 1, "middle")
        rng = random.Random(1234)
        for _ in range(200):
            word = random_word(rng, rng.randint(0, 5))
            self.assertEqual(normal_order(word, strategy="leftmost"),
                             normal_order(word, strategy="rightmost"), word)

    def test_monomial_product(self):
        rng = random.Random(99)
        for _ in range(100):
            left = random_word(rng, rng.randint(0, 3))
            right = random_word(rng, rng.randint(0, 3))
            expected = normal_order(left + right)
            for lm, lc in normal_order(left).terms.items():
                self.assertTrue(is_canonical(lm))
            product = uea_mul(normal_order(left), normal_order(right))
            self.assertEqual(product, expected, (left, right))
        self.assertEqual(dict(monomial_product((L(0),), (L(1),))),
                         {(L(0), L(1)): 1})


class UeaElementTest(unittest.TestCase):
    __tags__ = ["pbw"]

    def test_constructors(self):
        self.assertEqual(UeaElement.one(), mono())
        self.assertEqual(UeaElement.from_monomial((L(1), L(0))),
                         normal_order((L(1), L(0))))
        lie = LieElement.from_generator(L(1), ALPHA)
        self.assertEqual(UeaElement.from_lie(lie), gen(L(1), ALPHA))

    def test_parity(self):
        self.assertEqual(mono(G(half(1)), G(1)).parity, 0)
        self.assertEqual(gen(G(half(1))).parity, 1)
        mixed = gen(L(1)) + gen(G(half(1)))
        self.assertFalse(mixed.is_homogeneous)
        self.assertRaises(MixedParity, getattr, mixed, "parity")

    def test_operators(self):
        x = gen(L(1))
        y = gen(L(0))
        self.assertEqual(x * y, normal_order((L(1), L(0))))
        self.assertEqual(x * 2, x.scale(2))
        self.assertEqual(2 * x, x.scale(2))
        self.assertEqual(x * LieElement.from_generator(L(0)), x * y)
        self.assertEqual(x + 1, x + UeaElement.one())
        self.assertEqual(1 - x, UeaElement.one() - x)
        self.assertEqual(x ** 0, UeaElement.one())
        self.assertEqual(x ** 2, mono(L(1), L(1)))
        self.assertRaises(ValueError, pow, x, -1)

    def test_associativity(self):
        rng = random.Random(2024)
        for _ in range(200):
            x, y, z = (random_element(rng) for _ in range(3))
            self.assertEqual(uea_mul(uea_mul(x, y), z),
                             uea_mul(x, uea_mul(y, z)))

    def test_shifted_factorial(self):
        e = gen(L(0))
        e2 = mono(L(0), L(0))
        self.assertEqual(rising(e, 0, 0), UeaElement.one())
        self.assertEqual(rising(e, 0, 2), e2 + e)
        self.assertEqual(falling(e, 0, 2), e2 - e)
        self.assertEqual(rising(e, half(1), 1), e + half(1))
        self.assertEqual(falling(e, 2, 3), rising(e, 0, 3))
        self.assertRaises(ValueError, shifted_factorial, e, 0, 2, "up")
        self.assertRaises(ValueError, rising, e, 0, -1)


class UndeformedHopfTest(unittest.TestCase):
    __tags__ = ["pbw"]

    def test_coproduct0(self):
        self.assertEqual(coproduct0(gen(L(1))),
                         TensorElement(2, {((L(1),), UNIT): scalar(1),
                                           (UNIT, (L(1),)): scalar(1)}))
        a, b = G(half(1)), G(half(3))
        self.assertEqual(coproduct0(mono(a, b)),
                         TensorElement(2, {((a, b), UNIT): scalar(1),
                                           ((a,), (b,)): scalar(1),
                                           ((b,), (a,)): scalar(-1),
                                           (UNIT, (a, b)): scalar(1)}))
        self.assertEqual(coproduct0(UeaElement.one()), TensorElement.one(2))

    def test_coproduct0_homomorphism(self):
        rng = random.Random(7)
        for _ in range(50):
            x, y = random_element(rng), random_element(rng)
            self.assertEqual(coproduct0(uea_mul(x, y)),
                             coproduct0(x) * coproduct0(y))

    def test_antipode0(self):
        self.assertEqual(antipode0(gen(L(1))), gen(L(1), -1))
        self.assertEqual(antipode0(mono(L(0), L(1))),
                         mono(L(0), L(1)) - gen(L(1)))
        a, b = G(half(1)), G(half(3))
        self.assertEqual(antipode0(mono(a, b)), mono(a, b) - gen(L(2), 2))
        self.assertEqual(antipode0(UeaElement.one()), UeaElement.one())

    def test_antipode0_antihomomorphism(self):
        rng = random.Random(11)
        for _ in range(100):
            u, v = rng.choice(GENERATORS), rng.choice(GENERATORS)
            sign = -1 if u.odd and v.odd else 1
            self.assertEqual(antipode0(gen(u) * gen(v)),
                             (antipode0(gen(v)) *
                              antipode0(gen(u))).scale(sign))

    def test_counit0(self):
        self.assertEqual(counit0(UeaElement.one().scale(ALPHA)), ALPHA)
        self.assertEqual(counit0(gen(L(0))), scalar(0))
        self.assertEqual(counit0(normal_order((L(1), L(-1)))), scalar(0))

    def test_caches(self):
        normal_order((L(2), L(1)))
        info = cache_info()
        self.assertGreater(info["rewrite"], 0)
        clear_caches()
        self.assertEqual(cache_info()["rewrite"], 0)
        self.assertEqual(normal_order((L(1), L(0))),
                         mono(L(0), L(1)) - gen(L(1)))


if __name__ == '__main__':
    sys.exit(unittest.main())
