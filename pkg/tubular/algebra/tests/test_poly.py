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

from tubular.algebra.arith import function_field
from tubular.algebra.poly import MPoly, VariableSpace, UnknownVariable, complex_split, render
from tubular.algebra.tests.helper import random_mpoly
from tubular.algebra.tower import TowerSpec, SpecMismatch


class MPolyTest(unittest.TestCase):
    def setUp(self):
        self.field = function_field('t')
        self.spec, (self.root,), _ = TowerSpec.from_radicals(self.field, [3 * self.field.gen('t')])
        self.space = VariableSpace.real(3)
        self.x = [MPoly.variable(self.space, self.spec, 'x%d' % j) for j in range(4)]
        self.rng = random.Random(5)

    def test_ring_axioms(self):
        for _ in range(20):
            p, q, r = (random_mpoly(self.rng, self.space, self.spec) for _ in range(3))
            self.assertEqual(p * (q + r), p * q + p * r)
            self.assertEqual((p * q) * r, p * (q * r))
            self.assertTrue((p - p).is_zero)

    def test_queries(self):
        x = self.x
        p = x[1] ** 2 * x[2] * 3 - x[3] + self.root * x[1] * x[2] ** 2
        self.assertEqual(p.degree(), 3)
        self.assertEqual(p.degree(['x2']), 2)
        self.assertEqual(p.variables(), ['x1', 'x2', 'x3'])
        self.assertEqual(p.coefficient({'x1': 2, 'x2': 1}), 3)
        self.assertEqual(p.coefficient({'x1': 1, 'x2': 2}), self.root)
        self.assertEqual(p.homogeneous_component(1), -x[3])
        self.assertEqual(p.homogeneous_component(1, ['x2']), 3 * x[1] ** 2 * x[2])
        self.assertIsNone(p.constant_value())
        self.assertEqual((x[0] - x[0] + 5).constant_value(), 5)

    def test_diff(self):
        x = self.x
        p = x[1] ** 3 * x[2] + self.root * x[2]
        self.assertEqual(p.diff('x1'), 3 * x[1] ** 2 * x[2])
        self.assertEqual(p.diff('x2'), x[1] ** 3 + self.root)
        self.assertTrue(p.diff('x3').is_zero)

    def test_substitute(self):
        x = self.x
        p = x[1] ** 2 - x[2]
        self.assertEqual(p.substitute({'x1': x[2] + 1, 'x2': x[3]}), x[2] ** 2 + 2 * x[2] + 1 - x[3])
        self.assertEqual(p.value_at({'x1': 3, 'x2': Fraction(1, 2)}), Fraction(17, 2))
        self.assertEqual(p.evaluate({'x1': self.root}), 3 * self.field.gen('t') - x[2])
        with self.assertRaises(ValueError):
            p.value_at({'x1': 1})
        with self.assertRaises(UnknownVariable):
            p.substitute({'x9': x[1]})

    def test_division(self):
        p = self.x[1] * 6
        self.assertEqual(p / 3, self.x[1] * 2)
        self.assertEqual(p / self.root, self.x[1] * self.root * 2 / self.field.gen('t'))
        with self.assertRaises(ValueError):
            p / self.x[1]

    def test_mismatch(self):
        other = VariableSpace.real(2)
        with self.assertRaises(SpecMismatch):
            self.x[1] + MPoly.variable(other, self.spec, 'x1')
        with self.assertRaises(UnknownVariable):
            MPoly.variable(self.space, self.spec, 'z1')

    def test_specialize(self):
        p = self.x[1] * self.root
        q = p.specialize(dict(t=12))
        self.assertEqual(q.coefficient({'x1': 1}), 6)

    def test_render(self):
        x = self.x
        self.assertEqual(render(x[1] ** 2 - x[2] * x[3]), 'x1^2 - x2*x3')
        self.assertEqual(render(2 * self.root * x[1] * x[2] ** 2), '2*sqrt(3*t)*x1*x2^2')
        self.assertEqual(render(-Fraction(3, 2) * x[1] + 1), '-3/2*x1 + 1')
        self.assertEqual(render(MPoly(self.space, self.spec)), '0')



class ComplexSplitTest(unittest.TestCase):
    def test_split(self):
        spec = TowerSpec.rational(function_field('t'), imaginary=True)
        space = VariableSpace.complex(1)
        z0, z1, zb1 = (MPoly.variable(space, spec, name) for name in ('z0', 'z1', 'zb1'))
        i = spec.imaginary_unit
        re, im = complex_split(z1 * z1 - z0 * i)
        x0, y0, x1, y1 = (MPoly.variable(re.space, spec, name) for name in ('x0', 'y0', 'x1', 'y1'))
        self.assertEqual(re, x1 * x1 - y1 * y1 + y0)
        self.assertEqual(im, 2 * x1 * y1 - x0)

        re, im = complex_split(z1 * zb1)
        self.assertEqual(re, x1 * x1 + y1 * y1)
        self.assertTrue(im.is_zero)
        self.assertFalse((z1 * zb1).is_holomorphic())
        self.assertEqual((z1 * i).conjugate(), -zb1 * i)

    def test_needs_imaginary_unit(self):
        spec = TowerSpec.rational(function_field('t'))
        z = MPoly.variable(VariableSpace.complex(1), spec, 'z1')
        with self.assertRaises(SpecMismatch):
            complex_split(z)
