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

'''
The expression grammar of the command line:

    expr     := expr ('+' | '-') expr | expr ('*' | '/') expr
              | '-' expr | expr '^' INTEGER | atom
    atom     := INTEGER | VARIABLE | PARAMETER | 'i'
              | ('sqrt' | 'cbrt') '(' expr ')' | '(' expr ')'

with the usual precedence (^ binds tightest and takes an integer exponent,
unary minus binds tighter than * and /). Variables are x0..xN, y0..yN (real) or
z0..zN, zb0..zbN (complex), parameters are the symbols of the coefficient
field (t; tau; s; or t, a, b, c, d). Divisors must be free of variables and
radicands must be rational functions of the parameters.
'''

from collections import namedtuple
from fractions import Fraction
import logging
import re

from sympy import factorint

from tubular.algebra.arith import function_field, integer_kernel, rational_root, DivisionByZero
from tubular.algebra.poly import MPoly, VariableSpace
from tubular.algebra.tower import TowerSpec, DependentRadicands, SpecMismatch, ZeroDivisor
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


class ParseError(TubularError, SyntaxError):
    def __init__(self, message, position):
        super().__init__('%s at position %d' % (message, position))
        self.position = position



class UnsupportedRadicand(TubularError, ValueError):
    pass



FIELDS = (('t',), ('tau',), ('s',), ('t', 'a', 'b', 'c', 'd'))

PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2, '^': 4}
UNARY = 3
FUNCTIONS = ('sqrt', 'cbrt')

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))')
_VARIABLE = re.compile(r'^(x|y|z|zb)(\d+)$')


Token = namedtuple('Token', 'kind text pos')
Node = namedtuple('Node', 'kind args pos')


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError('Unexpected character %r' % text[pos + offset], pos + offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens



class _Parser(object):
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.idx = 0


    def peek(self):
        return self.tokens[self.idx]


    def next(self):
        token = self.tokens[self.idx]
        self.idx += 1
        return token


    def expect(self, text):
        token = self.next()
        if token.text != text:
            raise ParseError('Expected %r, got %r' % (text, token.text or 'end of input'), token.pos)
        return token


    def parse(self):
        node = self.expression(1)
        token = self.peek()
        if token.kind != 'end':
            raise ParseError('Unexpected %r' % token.text, token.pos)
        return node


    def expression(self, min_prec):
        lhs = self.unary()
        while True:
            token = self.peek()
            prec = PRECEDENCE.get(token.text) if token.kind == 'op' else None
            if prec is None or prec < min_prec:
                return lhs
            self.next()
            if token.text == '^':
                exponent = self.next()
                if exponent.kind != 'int':
                    raise ParseError('Exponents must be nonnegative integers', exponent.pos)
                lhs = Node('^', (lhs, int(exponent.text)), token.pos)
            else:
                lhs = Node(token.text, (lhs, self.expression(prec + 1)), token.pos)


    def unary(self):
        token = self.peek()
        if token.kind == 'op' and token.text == '-':
            self.next()
            return Node('neg', (self.expression(UNARY),), token.pos)
        return self.atom()


    def atom(self):
        token = self.next()
        if token.kind == 'int':
            return Node('num', (Fraction(int(token.text)),), token.pos)
        if token.kind == 'name':
            if token.text in FUNCTIONS:
                self.expect('(')
                argument = self.expression(1)
                self.expect(')')
                return Node(token.text, (argument,), token.pos)
            if token.text == 'i':
                return Node('i', (), token.pos)
            if _VARIABLE.match(token.text):
                return Node('var', (token.text,), token.pos)
            return Node('param', (token.text,), token.pos)
        if token.text == '(':
            node = self.expression(1)
            self.expect(')')
            return node
        raise ParseError('Unexpected %r' % (token.text or 'end of input'), token.pos)



def _walk(node):
    yield node
    for arg in node.args:
        if isinstance(arg, Node):
            yield from _walk(arg)


def _infer_field(symbols, position):
    for field in FIELDS:
        if symbols <= set(field):
            return function_field(*field)
    raise ParseError('Unknown parameters %s' % ', '.join(sorted(symbols)), position)


def _infer_space(names):
    indices = [int(_VARIABLE.match(name).group(2)) for name in names]
    n = max(indices, default=0)
    if any(name.startswith('z') for name in names):
        if any(not name.startswith('z') for name in names):
            raise ValueError('Real and complex variables can\'t be mixed')
        return VariableSpace.complex(n)
    return VariableSpace.real(n)



class _Scalars(object):
    '''
    Evaluates variable free subexpressions (radicands) in the parameter field.
    '''

    def __init__(self, field):
        self.field = field


    def __call__(self, node):
        kind, args = node.kind, node.args
        if kind == 'num':
            return self.field(args[0])
        if kind == 'param':
            return self.field.gen(args[0])
        if kind == 'neg':
            return -self(args[0])
        if kind == '^':
            return self(args[0]) ** args[1]
        if kind in '+-*/':
            lhs, rhs = self(args[0]), self(args[1])
            if kind == '/':
                if not rhs:
                    raise ParseError('Division by zero', node.pos)
                return lhs / rhs
            return lhs + rhs if kind == '+' else lhs - rhs if kind == '-' else lhs * rhs
        raise UnsupportedRadicand('Radicands must be rational functions of the parameters, got %s at '
                                  'position %d' % ('a variable' if kind == 'var' else kind, node.pos))



def _find_generator(spec, exponent, radicand):
    '''
    A multiple c·g of a generator g with c rational and (c·g)^exponent = radicand.
    '''
    for idx, g in enumerate(spec.generators):
        if g.exponent != exponent or g.imaginary:
            continue
        ratio = radicand / g.radicand
        if ratio.is_ground:
            c = rational_root(ratio.to_fraction(), exponent)
            if c is not None:
                return spec.gen(idx) * c
    return None


def _resolve(spec, kind, radicand):
    '''
    The element of spec standing for sqrt(radicand) or cbrt(radicand).
    '''
    exponent = 2 if kind == 'sqrt' else 3
    if not radicand:
        return spec.zero
    if radicand.is_ground:
        value = radicand.to_fraction()
        root = rational_root(value, exponent)
        if root is not None:
            return spec.ground(root)
        if exponent == 2:
            kernel = integer_kernel(value)
            element = spec.ground(rational_root(value / kernel, 2))
            for p in sorted(factorint(abs(kernel))):
                factor = _find_generator(spec, 2, radicand.field(p))
                if factor is None:
                    break
                element = element * factor
            else:
                if kernel < 0:
                    try:
                        element = element * spec.imaginary_unit
                    except SpecMismatch as exc:
                        raise UnsupportedRadicand(str(exc)) from exc
                return element
    element = _find_generator(spec, exponent, radicand)
    if element is None:
        raise UnsupportedRadicand('%s(%s) is not in %r' % (kind, radicand, spec))
    return element


def _build_spec(field, radicals, imaginary):
    squares = []
    for kind, radicand in radicals:
        if kind == 'sqrt' and radicand not in squares:
            squares.append(radicand)
    cubes = []
    for kind, radicand in radicals:
        if kind == 'cbrt' and radicand not in cubes:
            cubes.append(radicand)
    if len(cubes) > 1:
        raise UnsupportedRadicand('At most one cube root radicand is supported, got %s'
                                  % ', '.join(map(str, cubes)))
    imaginary = imaginary or any(r.is_ground and r.to_fraction() < 0 for r in squares)
    try:
        spec, _, _ = TowerSpec.from_radicals(field, squares, cubes[0] if cubes else None, imaginary=imaginary)
    except DependentRadicands as exc:
        raise UnsupportedRadicand(str(exc)) from exc
    return spec



class _Polynomials(object):
    def __init__(self, space, spec, radicals):
        self.space = space
        self.spec = spec
        self.radicals = radicals


    def constant(self, value):
        return MPoly.constant(self.space, self.spec, value)


    def __call__(self, node):
        kind, args = node.kind, node.args
        if kind == 'num':
            return self.constant(args[0])
        if kind == 'param':
            return self.constant(self.spec.field.gen(args[0]))
        if kind == 'i':
            try:
                return self.constant(self.spec.imaginary_unit)
            except SpecMismatch as exc:
                raise ParseError(str(exc), node.pos) from exc
        if kind == 'var':
            if args[0] not in self.space:
                raise ParseError('Variable %s is not in %r' % (args[0], self.space), node.pos)
            return MPoly.variable(self.space, self.spec, args[0])
        if kind in FUNCTIONS:
            return self.constant(self.radicals[node])
        if kind == 'neg':
            return -self(args[0])
        if kind == '^':
            return self(args[0]) ** args[1]
        lhs, rhs = self(args[0]), self(args[1])
        if kind == '+':
            return lhs + rhs
        if kind == '-':
            return lhs - rhs
        if kind == '*':
            return lhs * rhs
        divisor = rhs.constant_value()
        if divisor is None:
            raise ParseError('Divisors must be free of variables', node.pos)
        try:
            return lhs / divisor
        except (ZeroDivisor, DivisionByZero) as exc:
            raise ParseError('Division by zero', node.pos) from exc



def parse_expression(text, spec=None, space=None):
    '''
    Parse an expression into an MPoly.

    :param spec: the tower of the coefficients; radicals are matched against
        its generators. By default a tower is built from the radicals of the
        expression over the smallest parameter field holding its symbols.
    :param space: the variable space, by default inferred from the variables
    :raises ParseError: on malformed input, with the position of the fault
    :raises UnsupportedRadicand: for radicands that are not rational
        functions of the parameters, or that the tower lacks
    '''
    tree = _Parser(text).parse()
    nodes = list(_walk(tree))
    symbols = {node.args[0] for node in nodes if node.kind == 'param'}
    if spec is not None:
        unknown = symbols - set(spec.field.symbols)
        if unknown:
            position = min(node.pos for node in nodes if node.kind == 'param' and node.args[0] in unknown)
            raise ParseError('Unknown parameters %s' % ', '.join(sorted(unknown)), position)
        field = spec.field
    else:
        field = _infer_field(symbols, min((node.pos for node in nodes if node.kind == 'param'), default=0))

    scalars = _Scalars(field)
    radicals = [(node, node.kind, scalars(node.args[0])) for node in nodes if node.kind in FUNCTIONS]
    if spec is None:
        uses_i = any(node.kind == 'i' for node in nodes)
        spec = _build_spec(field, [(kind, radicand) for _, kind, radicand in radicals], uses_i)
    elements = {node: _resolve(spec, kind, radicand) for node, kind, radicand in radicals}

    if space is None:
        try:
            space = _infer_space({node.args[0] for node in nodes if node.kind == 'var'})
        except ValueError as exc:
            raise ParseError(str(exc), 0) from exc
    result = _Polynomials(space, spec, elements)(tree)
    logger.trace('parsed %r into %d terms over %r', text, len(result.terms), spec)
    return result
