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

from tubular.algebra import linalg
from tubular.algebra.arith import function_field
from tubular.algebra.tests.helper import random_fraction


def fractions(rows):
    return [[Fraction(entry) for entry in row] for row in rows]


class LinalgTest(unittest.TestCase):
    def test_inverse(self):
        rng = random.Random(3)
        for n in (1, 2, 4):
            while True:
                m = [[random_fraction(rng) for _ in range(n)] for _ in range(n)]
                if linalg.determinant(m):
                    break
            inv = linalg.inverse(m)
            self.assertEqual(linalg.mat_mul(m, inv), linalg.identity(n, Fraction(0)))

    def test_determinant(self):
        self.assertEqual(linalg.determinant(fractions([[1, 2], [3, 4]])), -2)
        self.assertEqual(linalg.determinant(fractions([[0, 1, 0], [1, 0, 0], [0, 0, 5]])), -5)
        self.assertEqual(linalg.determinant(fractions([[1, 2], [2, 4]])), 0)

    def test_fraction_free_solve(self):
        rng = random.Random(5)
        for n in (1, 3, 5):
            while True:
                m = [[random_fraction(rng) for _ in range(n)] for _ in range(n)]
                if linalg.determinant(m):
                    break
            b = [random_fraction(rng) for _ in range(n)]
            self.assertEqual(linalg.mat_vec(m, linalg.solve(m, b)), b)
            self.assertEqual(linalg.solve(m, b), linalg.mat_vec(linalg.inverse(m), b))
        with self.assertRaises(linalg.DimensionMismatch):
            linalg.solve(fractions([[1, 0], [0, 1]]), [Fraction(1)])

    def test_determinant_cofactors(self):
        rng = random.Random(8)
        for _ in range(10):
            (a, b, c), (d, e, f), (g, h, i) = m = [[random_fraction(rng) for _ in range(3)] for _ in range(3)]
            expected = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
            self.assertEqual(linalg.determinant(m), expected)

    def test_singular(self):
        with self.assertRaises(linalg.SingularMatrix):
            linalg.inverse(fractions([[1, 2], [2, 4]]))
        with self.assertRaises(ArithmeticError):
            linalg.solve(fractions([[0, 0], [0, 1]]), fractions([[1, 1]])[0])

    def test_dimensions(self):
        with self.assertRaises(linalg.DimensionMismatch):
            linalg.mat_mul(fractions([[1, 2]]), fractions([[1, 2]]))
        with self.assertRaises(linalg.DimensionMismatch):
            linalg.inverse(fractions([[1, 2]]))
        with self.assertRaises(ValueError):
            linalg.mat_vec(fractions([[1, 2]]), [Fraction(1)])

    def test_rational_functions(self):
        field = function_field('t')
        t = field.gen('t')
        m = [[t, field.one], [field.one, t]]
        self.assertEqual(linalg.determinant(m), t * t - 1)
        x = linalg.solve(m, [field.one, field.zero])
        self.assertEqual(x, [t / (t * t - 1), -1 / (t * t - 1)])
        self.assertTrue(linalg.is_symmetric(m))
