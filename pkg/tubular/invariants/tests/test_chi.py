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
import unittest

from tubular.algebra.arith import function_field
from tubular.algebra.tower import TowerSpec, NotDenestable
from tubular.invariants.chi import OutOfRange, chi, chi_inverse, chi_monotone_scan


def sqrt(value):
    _, (root,), _ = TowerSpec.from_radicals(function_field('t'), [value])
    return root


class ChiTest(unittest.TestCase):
    def test_rational(self):
        self.assertEqual(chi(1), -6)
        self.assertEqual(chi(4), Fraction(-24, 5))
        self.assertEqual(chi('9'), Fraction(-18, 5))
        self.assertEqual(chi(2), -4 * sqrt(2))

    def test_tower(self):
        self.assertEqual(chi(17 + 12 * sqrt(2)), -2)
        self.assertEqual(chi(7 + 4 * sqrt(3)), -3)

    def test_out_of_range(self):
        with self.assertRaises(OutOfRange):
            chi(Fraction(1, 2))
        with self.assertRaises(OutOfRange):
            chi(1 - sqrt(2))
        with self.assertRaises(NotDenestable):
            chi(2 + sqrt(2))



class ChiInverseTest(unittest.TestCase):
    def test_lower(self):
        self.assertEqual(chi_inverse(-6, 'lower'), 1)
        self.assertEqual(chi_inverse(-3, 'lower'), 7 + 4 * sqrt(3))
        self.assertEqual(chi_inverse('-24/5', 'lower'), 4)
        self.assertEqual(chi_inverse(Fraction(-18, 5), 'lower'), 9)

    def test_upper(self):
        self.assertEqual(chi_inverse(Fraction(-2, 3), 'upper'), 161 + 72 * sqrt(5))

    def test_round_trip(self):
        for tau, branch in ((-3, 'lower'), (Fraction(-2, 3), 'upper'), (-5, 'lower')):
            self.assertEqual(chi(chi_inverse(tau, branch)), tau)

    def test_ranges(self):
        for tau, branch in ((-2, 'lower'), (-2, 'upper'), (-7, 'lower'), (0, 'upper'), (-3, 'upper')):
            with self.assertRaises(OutOfRange, msg='%s %s' % (tau, branch)):
                chi_inverse(tau, branch)
        with self.assertRaises(ValueError):
            chi_inverse(-3, 'middle')



class ChiScanTest(unittest.TestCase):
    def test_monotone(self):
        result = chi_monotone_scan(1, 50, count=99)
        self.assertTrue(result.monotone)
        self.assertEqual(result.samples, 100)

    def test_below_one(self):
        with self.assertRaises(OutOfRange):
            chi_monotone_scan(0, 10, count=5)
