# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
import random
import unittest

from tubular.algebra.arith import function_field, parse_rational, integer_kernel, rational_root, \
    ratfunc_arith, ratfunc_square_class, squarefree_part, is_cube, DivisionByZero, FieldMismatch, PoleAt, ZeroPolynomial
from tubular.algebra.tests.helper import random_ratfunc


class RationalTest(unittest.TestCase):
    def test_parse_rational(self):
        self.assertEqual(parse_rational('3/2'), Fraction(3, 2))
        self.assertEqual(parse_rational(' -6 '), -6)
        self.assertEqual(parse_rational('1.25'), Fraction(5, 4))
        with self.assertRaises(ValueError):
            parse_rational('3/0')
        with self.assertRaises(ValueError):
            parse_rational('t')

    def test_integer_kernel(self):
        self.assertEqual(integer_kernel(12), 3)
        self.assertEqual(integer_kernel(Fraction(-8, 27)), -6)
        self.assertEqual(integer_kernel(Fraction(9, 4)), 1)
        with self.assertRaises(ZeroPolynomial):
            integer_kernel(0)

    def test_rational_root(self):
        self.assertEqual(rational_root(Fraction(9, 4), 2), Fraction(3, 2))
        self.assertEqual(rational_root(-27, 3), -3)
        self.assertIsNone(rational_root(2, 2))
        self.assertIsNone(rational_root(-4, 2))



class RatFuncTest(unittest.TestCase):
    def setUp(self):
        self.field = function_field('t')
        self.t = self.field.gen('t')
        self.rng = random.Random(7)

    def test_field_axioms(self):
        for _ in range(50):
            a, b, c = (random_ratfunc(self.rng, self.field) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a - a, self.field.zero)
            if a:
                self.assertEqual(a * a.inverse(), self.field.one)

    def test_canonical_form(self):
        t = self.t
        self.assertEqual((t * t - 1) / (t - 1), t + 1)
        self.assertEqual(str((t * t - 1) / (2 * t - 2)), '1/2*t + 1/2')
        self.assertEqual(str(1 / (3 * t)), '(1/3)/(t)')

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            self.t / self.field.zero
        with self.assertRaises(ZeroDivisionError):
            self.field.zero.inverse()

    def test_evaluate(self):
        t = self.t
        f = (t ** 2 + 1) / (t - 2)
        self.assertEqual(f.value_at(t=3), 10)
        self.assertEqual(f.evaluate(dict(t=Fraction(1, 2))), Fraction(-5, 6))
        with self.assertRaises(PoleAt):
            f.evaluate(dict(t=2))

    def test_diff_and_subs(self):
        t = self.t
        f = t ** 3 / (t + 1)
        self.assertEqual(f.diff('t'), (2 * t ** 3 + 3 * t ** 2) / (t + 1) ** 2)
        self.assertEqual(f.subs('t', 1 / t), 1 / (t ** 2 * (t + 1)))

    def test_field_mismatch(self):
        s = function_field('s').gen('s')
        with self.assertRaises(FieldMismatch):
            self.t + s
        with self.assertRaises(FieldMismatch):
            self.field.gen('s')

    def test_ratfunc_arith(self):
        t = self.t
        self.assertEqual(ratfunc_arith(t, 2, 'add'), t + 2)
        self.assertEqual(ratfunc_arith(t, t, 'sub'), 0)
        self.assertEqual(ratfunc_arith(t, t, 'mul'), t ** 2)
        self.assertEqual(ratfunc_arith(t, t, 'div'), 1)
        with self.assertRaises(DivisionByZero):
            ratfunc_arith(t, 0, 'div')
        with self.assertRaises(ValueError):
            ratfunc_arith(t, t, 'pow')

    def test_square_class(self):
        t = self.t
        self.assertEqual(ratfunc_square_class(12 * t ** 3 / (t + 1) ** 2), 3 * t.numer)
        self.assertEqual(ratfunc_square_class(4 * (t + 1) ** 2 / 9), 1)
        self.assertEqual(ratfunc_square_class(t / (t + 1)), (t * (t + 1)).numer)

    def test_squarefree_part(self):
        t = self.t.numer
        self.assertEqual(squarefree_part(t ** 2), 1)
        self.assertEqual(squarefree_part(3 * t), 3 * t)
        self.assertEqual(squarefree_part(t ** 3 + 27), t ** 3 + 27)
        self.assertEqual(squarefree_part(5 * (t + 1) * (t - 2) ** 2), 5 * (t + 1))
        with self.assertRaises(ZeroPolynomial):
            squarefree_part(t - t)

    def test_is_cube(self):
        t = self.t
        self.assertTrue(is_cube(-(t + 3) ** 3 / 27))
        self.assertFalse(is_cube(-(t ** 3 + 27) / 81))
        self.assertFalse(is_cube(2 * t ** 3))

    def test_multivariate(self):
        field = function_field('t', 'a', 'b', 'c', 'd')
        a, b, t = field.gen('a'), field.gen('b'), field.gen('t')
        f = a * b / (t + a)
        self.assertEqual(f.evaluate(dict(a=1, b=2)), 2 / (t + 1))
        self.assertEqual(f.value_at(a=1, b=2, t=1), 1)
