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

from tubular.algebra.linalg import DimensionMismatch
from tubular.algebra.poly import MPoly, VariableSpace
from tubular.algebra.tower import TowerSpec
from tubular.geometry.families import TubeBase, instantiate_family
from tubular.maps.separation import NON_EQUIVALENT, INCONCLUSIVE, PreconditionViolated, graded_separation


def genhyper(t, a=1):
    return instantiate_family('GenHyper', t=t, a=a, b=1, c=1, d=1)


class GradedSeparationTest(unittest.TestCase):
    def setUp(self):
        spec = TowerSpec.rational()
        self.space = VariableSpace.real(2)
        self.x1, self.x2 = (MPoly.variable(self.space, spec, name) for name in ('x1', 'x2'))

    def test_quartic_parts(self):
        result = graded_separation(genhyper(2), genhyper(3))
        self.assertEqual(result.verdict, NON_EQUIVALENT)
        self.assertTrue(result.separated)
        self.assertEqual(result.witness, 4)
        self.assertEqual(result.detail.witness, 'absolute invariant')
        first, second = result.detail.first, result.detail.second
        self.assertEqual(first.I ** 3 / first.J ** 2, Fraction(1331, 49))
        self.assertEqual(second.I ** 3 / second.J ** 2, Fraction(59319, 2116))

    def test_inconclusive(self):
        result = graded_separation(genhyper(2), genhyper(2, a=5))
        self.assertEqual(result.verdict, INCONCLUSIVE)
        self.assertIsNone(result.witness)
        self.assertFalse(result.detail.separated)

    def test_missing_piece(self):
        x1, x2 = self.x1, self.x2
        result = graded_separation(TubeBase('custom', 2, x1 * x2), TubeBase('custom', 2, x1 * x2 + x1 ** 4))
        self.assertEqual(result, (NON_EQUIVALENT, 4, None))

    def test_preconditions(self):
        x1, x2 = self.x1, self.x2
        traced = TubeBase('custom', 2, x1 ** 2 + x2 ** 2 + x1 ** 3)
        plain = TubeBase('custom', 2, x1 ** 2 + x2 ** 2)
        with self.assertRaises(PreconditionViolated):
            graded_separation(traced, plain)
        with self.assertRaises(PreconditionViolated):
            graded_separation(plain, TubeBase('custom', 2, x1 ** 2 + x2 ** 3))
        with self.assertRaises(DimensionMismatch):
            graded_separation(instantiate_family('St'), genhyper(2))

    def test_cubic_piece(self):
        m1, m2 = instantiate_family('M1', n=3), instantiate_family('M2', n=3)
        self.assertEqual(graded_separation(m1, m2), (NON_EQUIVALENT, 3, None))
        self.assertEqual(graded_separation(m2, m1), (NON_EQUIVALENT, 3, None))

    def test_pt_pairs(self):
        pairs = ((2, 3), (2, 5), (3, 4), (4, 9), (5, 8), (Fraction(3, 2), 7), (6, 12), (10, 20), (15, 30),
                 (Fraction(9, 4), 33))
        for t1, t2 in pairs:
            first, second = instantiate_family('Pt', t=t1), instantiate_family('Pt', t=t2)
            result = graded_separation(first, second)
            msg = 't1=%s t2=%s' % (t1, t2)
            self.assertEqual(result.verdict, NON_EQUIVALENT, msg=msg)
            self.assertEqual(result.witness, 4, msg=msg)
            swapped = graded_separation(second, first)
            self.assertEqual((swapped.verdict, swapped.witness), (result.verdict, result.witness), msg=msg)
