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
from tubular.algebra.poly import MPoly, VariableSpace, render
from tubular.algebra.tests.helper import random_mpoly
from tubular.algebra.tower import TowerSpec
from tubular.cli.parse import ParseError, UnsupportedRadicand, parse_expression, tokenize


class TokenizeTest(unittest.TestCase):
    def test_tokens(self):
        tokens = tokenize('x1^2 - sqrt(3*t)')
        self.assertEqual([token.kind for token in tokens],
                         ['name', 'op', 'int', 'op', 'name', 'op', 'int', 'op', 'name', 'op', 'end'])
        self.assertEqual(tokens[4].pos, 7)

    def test_bad_character(self):
        with self.assertRaises(ParseError) as ctx:
            tokenize('x1 + $')
        self.assertEqual(ctx.exception.position, 5)



class ParseExpressionTest(unittest.TestCase):
    def setUp(self):
        self.field = function_field('t')
        self.space = VariableSpace.real(3)
        self.spec = TowerSpec.rational(self.field)
        self.x = [MPoly.variable(self.space, self.spec, 'x%d' % j) for j in range(4)]

    def test_precedence(self):
        x = self.x
        space = self.space
        self.assertEqual(parse_expression('x1 + x2*x3', space=space), x[1] + x[2] * x[3])
        self.assertEqual(parse_expression('-x1^2 + 2*x2', space=space), -x[1] ** 2 + 2 * x[2])
        self.assertEqual(parse_expression('(x1 + x2)^2', space=space), (x[1] + x[2]) ** 2)
        self.assertEqual(parse_expression('x1 - -x2', space=space), x[1] + x[2])
        self.assertEqual(parse_expression('x1/2 - 3/4*x3', space=space), x[1] / 2 - Fraction(3, 4) * x[3])
        self.assertEqual(parse_expression('x1 - x2 - x3', space=space), x[1] - x[2] - x[3])

    def test_parameters(self):
        t = self.field.gen('t')
        p = parse_expression('x1*(t + 1)/(t - 1)', spec=self.spec, space=self.space)
        self.assertEqual(p, self.x[1] * ((t + 1) / (t - 1)))
        self.assertEqual(parse_expression('tau^2').spec.field.symbols, ('tau',))
        self.assertEqual(parse_expression('a*x1 + d').spec.field.symbols, ('t', 'a', 'b', 'c', 'd'))
        with self.assertRaises(ParseError):
            parse_expression('tau*x1', spec=self.spec)
        with self.assertRaises(ParseError):
            parse_expression('u + 1')

    def test_radicals(self):
        p = parse_expression('sqrt(8)*x1 + sqrt(2)*x2')
        root = p.coefficient({'x2': 1})
        self.assertEqual(p.coefficient({'x1': 1}), 2 * root)
        self.assertEqual(root * root, 2)
        self.assertEqual(parse_expression('sqrt(9/4)').constant_value(), Fraction(3, 2))
        c = parse_expression('cbrt(2*t)').constant_value()
        self.assertEqual(c ** 3, 2 * self.field.gen('t'))

    def test_imaginary(self):
        i = parse_expression('i').constant_value()
        self.assertEqual(i * i, -1)
        root = parse_expression('sqrt(-3)').constant_value()
        self.assertEqual(root * root, -3)
        z = parse_expression('z1*zb1')
        self.assertFalse(z.is_holomorphic())

    def test_unsupported(self):
        with self.assertRaises(UnsupportedRadicand):
            parse_expression('sqrt(x1)')
        with self.assertRaises(UnsupportedRadicand):
            parse_expression('cbrt(2) + cbrt(3)')
        with self.assertRaises(UnsupportedRadicand):
            parse_expression('sqrt(5)', spec=self.spec)

    def test_errors(self):
        for text, position in (('x1 + + x2', 5), ('x1 +', 4), ('(x1', 3), ('x1^x2', 3), ('x1 x2', 3)):
            with self.assertRaises(ParseError, msg=text) as ctx:
                parse_expression(text)
            self.assertEqual(ctx.exception.position, position, msg=text)
        with self.assertRaises(ParseError):
            parse_expression('x1/x2')
        with self.assertRaises(ParseError):
            parse_expression('x1/(2 - 2)')
        with self.assertRaises(ParseError):
            parse_expression('x1 + z1')
        with self.assertRaises(ParseError):
            parse_expression('x4', space=self.space)

    def test_render_round_trip(self):
        rng = random.Random(11)
        spec, _, _ = TowerSpec.from_radicals(self.field, [2, 3 * self.field.gen('t')], cube=5, imaginary=True)
        for _ in range(200):
            p = random_mpoly(rng, self.space, spec)
            self.assertEqual(parse_expression(render(p), spec=spec, space=self.space), p, msg=render(p))
