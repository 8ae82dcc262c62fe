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
Radical towers over a field of rational functions: square roots, at most one
cube root and optionally the imaginary unit adjoined to ℚ(params).

Elements are stored in the monomial basis of the generators, exponents
reduced below each generator's degree, with :class:`RatFunc` coefficients.
Since independence of the radicands is validated when a tower is built, an
element is zero exactly when its coefficient map is empty.
'''

from collections import namedtuple
from fractions import Fraction
from itertools import combinations, product as cartesian
import logging
import numbers
import re

from cytoolz import merge_with, valfilter
from sympy import factorint, integer_nthroot

from tubular.algebra import linalg
from tubular.algebra.arith import RatFunc, ratfunc_square_class, square_class, \
    is_cube, integer_kernel, rational_root, to_fraction, function_field, format_bindings
from tubular.util import conf
from tubular.util.exceptions import TubularError
import tubular


logger = logging.getLogger(__name__)


precision = conf.Int(32, desc='The number of bits of the first interval enclosure when deciding '
                              'the real sign of a radical expression.')
max_precision = conf.Int(4096, desc='The number of bits at which interval refinement gives up.')


class SpecMismatch(TubularError, ValueError):
    pass


class ZeroDivisor(TubularError, ZeroDivisionError):
    pass


class DependentRadicands(TubularError, ValueError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class NegativeRadicand(TubularError, ValueError):
    pass


class ImaginaryPresent(TubularError, ValueError):
    pass


class PrecisionExhausted(TubularError, ArithmeticError):
    pass


class NotDenestable(TubularError, ValueError):
    pass



Generator = namedtuple('Generator', 'name exponent radicand imaginary')


class IndependenceReport(namedtuple('IndependenceReport', 'independent offending reason')):
    def __bool__(self):
        return self.independent

    def __str__(self):
        if self.independent:
            return 'radicands are independent'
        return '%s: %s' % (self.reason, ', '.join(self.offending))


RealSign = namedtuple('RealSign', 'sign interval')



class TowerSpec(object):
    '''
    The generators of a tower, in order. Quadratic generators denote the
    nonnegative square root of their radicand, a cubic generator the real
    cube root, the imaginary generator (radicand -1) is i.
    '''

    def __init__(self, field, generators, validate=True):
        self.field = field
        self.generators = tuple(Generator(name, exponent, field(radicand), imaginary)
                                for name, exponent, radicand, imaginary in generators)

        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError('Generator names must be unique, got %s' % names)
        for g in self.generators:
            if g.exponent not in (2, 3):
                raise ValueError('Generator %s has unsupported degree %s' % (g.name, g.exponent))
            if not g.radicand:
                raise ValueError('Generator %s has a zero radicand' % g.name)
            if g.imaginary and (g.exponent != 2 or g.radicand != -1):
                raise ValueError('The imaginary unit must be a square root of -1')
        if sum(1 for g in self.generators if g.exponent == 3) > 1:
            raise ValueError('At most one cube root can be adjoined')
        if sum(1 for g in self.generators if g.imaginary) > 1:
            raise ValueError('At most one imaginary unit can be adjoined')

        self.moduli = tuple(g.exponent for g in self.generators)
        self.unit = (0,) * len(self.generators)
        self._products = {}
        self._specializations = {}
        self._key = (field, tuple((g.exponent, g.radicand, g.imaginary) for g in self.generators))

        if validate:
            report = validate_independence(self)
            if not report:
                raise DependentRadicands(report)
        logger.trace('built tower %r', self)


    @classmethod
    def rational(cls, field=None, imaginary=False):
        generators = [('i', 2, -1, True)] if imaginary else []
        return cls(field or function_field('t'), generators)


    @classmethod
    def from_radicals(cls, field, squares=(), cube=None, imaginary=False, names=()):
        '''
        Build a validated tower holding the given radicals.

        Constant radicands are split into square roots of primes, so that bound
        parameter values never yield dependent generators; other radicands are
        adjoined as they are, named after ``names`` when given.

        :return: (spec, square roots, cube root or None)
        '''
        squares = [field(r) for r in squares]
        cube = field(cube) if cube is not None else None
        names = list(names) + ['g%d' % i for i in range(len(names), len(squares))]

        generators = []
        plans = []
        needs_i = imaginary
        for name, radicand in zip(names, squares):
            if not radicand:
                plans.append(('zero',))
            elif radicand.is_ground:
                value = radicand.to_fraction()
                kernel = integer_kernel(value)
                coefficient = rational_root(value / kernel, 2)
                primes = sorted(factorint(abs(kernel)))
                for p in primes:
                    if not any(g[0] == 'sqrt%d' % p for g in generators):
                        generators.append(('sqrt%d' % p, 2, p, False))
                if kernel < 0:
                    if not imaginary:
                        raise NegativeRadicand('Square root of the negative constant %s in a real tower'
                                               % value)
                    needs_i = True
                plans.append(('ground', coefficient, ['sqrt%d' % p for p in primes], kernel < 0))
            else:
                generators.append((name, 2, radicand, False))
                plans.append(('gen', name))

        cube_plan = None
        if cube is not None:
            if not cube:
                cube_plan = ('zero',)
            elif cube.is_ground and rational_root(cube.to_fraction(), 3) is not None:
                cube_plan = ('rational', rational_root(cube.to_fraction(), 3))
            else:
                generators.append(('cbrt', 3, cube, False))
                cube_plan = ('gen', 'cbrt')

        if needs_i:
            generators.append(('i', 2, -1, True))

        spec = cls(field, generators)
        roots = [spec._realize(plan) for plan in plans]
        cube_root = spec._realize(cube_plan) if cube_plan else None
        return spec, roots, cube_root


    def _realize(self, plan):
        kind = plan[0]
        if kind == 'zero':
            return self.zero
        if kind == 'gen':
            return self.gen(plan[1])
        if kind == 'rational':
            return self.ground(plan[1])
        _, coefficient, prime_names, negative = plan
        element = self.ground(coefficient)
        for name in prime_names:
            element = element * self.gen(name)
        if negative:
            element = element * self.imaginary_unit
        return element


    def specialize(self, bindings):
        '''
        Bind parameters to rationals. Returns the resulting tower and the images
        of this tower's generators in it. In a real tower a generator whose
        radicand turns negative has no image (None); only elements using it
        fail to specialize.
        '''
        key = tuple(sorted((symbol, to_fraction(value)) for symbol, value in bindings.items()))
        cached = self._specializations.get(key)
        if cached is not None:
            return cached
        bindings = dict(key)
        quadratic = [g for g in self.generators if g.exponent == 2 and not g.imaginary]
        cubic = [g for g in self.generators if g.exponent == 3]
        values = {g.name: g.radicand.evaluate(bindings) for g in quadratic}
        if not self.includes_imaginary_unit:
            negative = {name for name, value in values.items() if value.is_ground and value.to_fraction() < 0}
            if negative:
                logger.debug('%s have negative radicands at %s', ', '.join(sorted(negative)),
                             format_bindings(bindings))
            quadratic = [g for g in quadratic if g.name not in negative]
        spec, roots, cube_root = TowerSpec.from_radicals(
            self.field, [values[g.name] for g in quadratic], cubic[0].radicand.evaluate(bindings) if cubic else None,
            imaginary=self.includes_imaginary_unit, names=[g.name for g in quadratic])
        square_images = dict(zip((g.name for g in quadratic), roots))
        images = []
        for g in self.generators:
            if g.imaginary:
                images.append(spec.imaginary_unit)
            elif g.exponent == 3:
                images.append(cube_root)
            else:
                images.append(square_images.get(g.name))
        result = self._specializations[key] = (spec, tuple(images))
        return result


    @property
    def includes_imaginary_unit(self):
        return any(g.imaginary for g in self.generators)


    @property
    def imaginary_index(self):
        for idx, g in enumerate(self.generators):
            if g.imaginary:
                return idx
        return None


    @property
    def imaginary_unit(self):
        idx = self.imaginary_index
        if idx is None:
            raise SpecMismatch('Tower %r has no imaginary unit' % self)
        return self.gen(idx)


    def index(self, name):
        if isinstance(name, int):
            return name
        for idx, g in enumerate(self.generators):
            if g.name == name:
                return idx
        raise KeyError('No generator named %r in %r' % (name, self))


    def gen(self, name):
        monom = list(self.unit)
        monom[self.index(name)] = 1
        return TowerElement(self, {tuple(monom): self.field.one})


    def basis(self, active=None):
        ranges = [range(e) if active is None or idx in active else range(1)
                  for idx, e in enumerate(self.moduli)]
        return [tuple(m) for m in cartesian(*ranges)]


    @property
    def dimension(self):
        size = 1
        for e in self.moduli:
            size *= e
        return size


    @property
    def zero(self):
        return TowerElement(self, {})


    @property
    def one(self):
        return TowerElement(self, {self.unit: self.field.one})


    def ground(self, value):
        if isinstance(value, TowerElement):
            return value.lift(self)
        value = self.field(value)
        return TowerElement(self, {self.unit: value} if value else {})


    def monomial_product(self, m1, m2):
        '''
        The reduced monomial of m1·m2 and the rational function factor picked
        up by the relations gᵉ = radicand (None for 1).
        '''
        key = (m1, m2)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        monom = []
        factor = None
        for a, b, g in zip(m1, m2, self.generators):
            s = a + b
            if s >= g.exponent:
                s -= g.exponent
                factor = g.radicand if factor is None else factor * g.radicand
            monom.append(s)
        result = self._products[key] = (tuple(monom), factor)
        return result


    def embedding(self, target):
        '''
        Generator index map of this tower into target, matching generators by
        degree, radicand and the imaginary flag.
        '''
        if target.field != self.field:
            raise SpecMismatch('Can\'t embed %r into %r' % (self, target))
        mapping = []
        for g in self.generators:
            for idx, h in enumerate(target.generators):
                if (g.exponent, g.radicand, g.imaginary) == (h.exponent, h.radicand, h.imaginary):
                    mapping.append(idx)
                    break
            else:
                raise SpecMismatch('Generator %s of %r is missing in %r' % (g.name, self, target))
        return mapping


    def __eq__(self, other):
        return self is other or (isinstance(other, TowerSpec) and self._key == other._key)


    def __hash__(self):
        return hash(self._key)


    def __repr__(self):
        gens = ', '.join(render_generator(g) for g in self.generators)
        return '<TowerSpec %r[%s]>' % (self.field, gens)



def render_generator(g, exponent=1):
    if g.imaginary:
        return 'i'
    text = '%s(%s)' % ('sqrt' if g.exponent == 2 else 'cbrt', g.radicand)
    return text if exponent == 1 else '%s^%d' % (text, exponent)


_SIMPLE = re.compile(r'^[\w^/*]+$')


def _wrap(text):
    return text if _SIMPLE.match(text) else '(%s)' % text



class TowerElement(object):
    '''
    An element of a radical tower, a sparse map from reduced generator
    exponent vectors to nonzero rational function coefficients.
    '''

    __slots__ = ('spec', 'coeffs', '_hash')

    def __init__(self, spec, coeffs):
        self.spec = spec
        self.coeffs = coeffs
        self._hash = None


    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatch('Elements of %r and %r can\'t be combined' % (self.spec, other.spec))
            return other
        if isinstance(other, (numbers.Rational, RatFunc)):
            return self.spec.ground(other)
        return NotImplemented


    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        return TowerElement(self.spec, valfilter(bool, merge_with(_sum, self.coeffs, other.coeffs)))

    __radd__ = __add__


    def __neg__(self):
        return TowerElement(self.spec, {m: -c for m, c in self.coeffs.items()})


    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)


    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)


    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return self.spec.zero
        spec = self.spec
        result = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                monom, factor = spec.monomial_product(m1, m2)
                c = c1 * c2
                if factor is not None:
                    c = c * factor
                if monom in result:
                    result[monom] = result[monom] + c
                else:
                    result[monom] = c
        return TowerElement(spec, valfilter(bool, result))

    __rmul__ = __mul__


    def inverse(self):
        return tower_inv(self)


    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_ground():
            return self * (1 / other.ground())
        return self * tower_inv(other)


    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * tower_inv(self)


    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        if exponent < 0:
            return tower_inv(self) ** -exponent
        result = self.spec.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


    def __bool__(self):
        return bool(self.coeffs)


    def is_ground(self):
        return not self.coeffs or (len(self.coeffs) == 1 and self.spec.unit in self.coeffs)


    def ground(self):
        '''
        The rational function value of a ground element.
        '''
        if not self.is_ground():
            raise ValueError('%s is not in the ground field' % self)
        return self.coeffs.get(self.spec.unit, self.spec.field.zero)


    def to_fraction(self):
        return self.ground().to_fraction()


    def coefficient(self, monom):
        return self.coeffs.get(tuple(monom), self.spec.field.zero)


    def conjugate(self):
        '''
        Complex conjugation: i ↦ -i, all other generators are real.
        '''
        idx = self.spec.imaginary_index
        if idx is None:
            return self
        return TowerElement(self.spec, {m: -c if m[idx] else c for m, c in self.coeffs.items()})


    def split_imaginary(self):
        '''
        (re, im) with self = re + i·im and re, im free of i.
        '''
        idx = self.spec.imaginary_index
        if idx is None:
            return self, self.spec.zero
        re, im = {}, {}
        for m, c in self.coeffs.items():
            if m[idx]:
                im[m[:idx] + (0,) + m[idx + 1:]] = c
            else:
                re[m] = c
        return TowerElement(self.spec, re), TowerElement(self.spec, im)


    def lift(self, target):
        if target is self.spec or target == self.spec:
            return self if target is self.spec else TowerElement(target, self.coeffs)
        mapping = self.spec.embedding(target)
        coeffs = {}
        for m, c in self.coeffs.items():
            monom = [0] * len(target.generators)
            for idx, e in zip(mapping, m):
                monom[idx] = e
            coeffs[tuple(monom)] = c
        return TowerElement(target, coeffs)


    def specialize(self, bindings):
        '''
        Bind parameters to rationals, giving an element of the specialized tower.
        '''
        target, images = self.spec.specialize(bindings)
        total = target.zero
        for m, c in self.coeffs.items():
            term = target.ground(c.evaluate(bindings))
            for g, image, e in zip(self.spec.generators, images, m):
                if e:
                    if image is None:
                        raise NegativeRadicand('Radicand %s of %s is negative at %s'
                                               % (g.radicand, g.name, format_bindings(bindings)))
                    term = term * image ** e
            total = total + term
        return total


    def evaluate(self, bindings):
        '''
        Bind parameters inside the coefficients only, keeping the tower.
        '''
        coeffs = {m: c.evaluate(bindings) for m, c in self.coeffs.items()}
        return TowerElement(self.spec, valfilter(bool, coeffs))


    def generators_used(self):
        return {idx for m in self.coeffs for idx, e in enumerate(m) if e}


    def __eq__(self, other):
        if isinstance(other, TowerElement):
            if other.spec != self.spec:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (numbers.Rational, RatFunc)):
            return self.is_ground() and self.ground() == other
        return NotImplemented


    def __hash__(self):
        if self._hash is None:
            if self.is_ground():
                self._hash = hash(self.ground())
            else:
                self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash


    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            radicals = [render_generator(g, e) for g, e in zip(self.spec.generators, m) if e]
            if not radicals:
                terms.append(_wrap(str(c)))
            elif c == 1:
                terms.append('*'.join(radicals))
            else:
                terms.append('*'.join([_wrap(str(c))] + radicals))
        return ' + '.join(terms)


    def __repr__(self):
        return '<TowerElement %s>' % self



def _sum(values):
    total = values[0]
    for value in values[1:]:
        total = total + value
    return total



def tower_mul(a, b):
    if a.spec != b.spec:
        raise SpecMismatch('Elements of %r and %r can\'t be multiplied' % (a.spec, b.spec))
    return a * b


def tower_is_zero(a):
    return not a.coeffs


def tower_inv(a):
    '''
    The inverse of a by solving the regular representation of multiplication
    by a, restricted to the generators a involves.
    '''
    spec = a.spec
    if not a.coeffs:
        raise ZeroDivisor('The zero element has no inverse')
    if len(a.coeffs) == 1:
        (monom, coeff), = a.coeffs.items()
        result = spec.ground(coeff.inverse())
        for idx, e in enumerate(monom):
            if e:
                g = spec.generators[idx]
                power = list(spec.unit)
                power[idx] = g.exponent - e
                result = result * TowerElement(spec, {tuple(power): 1 / g.radicand})
        return result

    active = a.generators_used()
    basis = spec.basis(active)
    position = {m: idx for idx, m in enumerate(basis)}
    columns = []
    for b in basis:
        image = a * TowerElement(spec, {b: spec.field.one})
        column = [spec.field.zero] * len(basis)
        for m, c in image.coeffs.items():
            column[position[m]] = c
        columns.append(column)
    matrix = linalg.transpose(columns)
    rhs = [spec.field.one if m == spec.unit else spec.field.zero for m in basis]
    try:
        solution = linalg.solve(matrix, rhs)
    except linalg.SingularMatrix as exc:
        raise ZeroDivisor('Multiplication by %s is singular' % a) from exc
    logger.trace('inverted a %d term element over a %d dimensional subalgebra', len(a.coeffs), len(basis))
    return TowerElement(spec, {m: c for m, c in zip(basis, solution) if c})



def validate_independence(spec):
    '''
    Check that no product of quadratic radicands (the imaginary unit counting
    as -1) is a square and that a cubic radicand is not a cube.
    '''
    quadratic = [g for g in spec.generators if g.exponent == 2]
    classes = [ratfunc_square_class(g.radicand) for g in quadratic]
    for size in range(1, len(quadratic) + 1):
        for subset in combinations(range(len(quadratic)), size):
            poly = classes[subset[0]]
            for idx in subset[1:]:
                poly = poly * classes[idx]
            if square_class(poly) == 1:
                offending = tuple(quadratic[idx].name for idx in subset)
                reason = 'radicand is a square' if size == 1 else 'product of radicands is a square'
                return IndependenceReport(False, offending, reason)
    for g in spec.generators:
        if g.exponent == 3 and is_cube(g.radicand):
            return IndependenceReport(False, (g.name,), 'radicand is a cube')
    return IndependenceReport(True, (), None)



def _root_enclosure(radicand, exponent, bits):
    '''
    Interval [lo, hi] of width at most 2^-bits/denominator holding the real root.
    '''
    p, q = radicand.numerator, radicand.denominator
    if exponent == 2:
        n = p * q * 4 ** bits
        s, exact = integer_nthroot(n, 2)
        scale = q * 2 ** bits
    else:
        n = abs(p) * q * q * 8 ** bits
        s, exact = integer_nthroot(n, 3)
        scale = q * 2 ** bits
    lo = Fraction(int(s), scale)
    hi = lo if exact else Fraction(int(s) + 1, scale)
    if p < 0:
        lo, hi = -hi, -lo
    return lo, hi


def _interval_mul(a, b):
    products = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(products), max(products)


def tower_eval_real(a, t0=None, precision=None, bindings=None):
    '''
    Exact real sign of a at a rational parameter value, with an enclosing
    interval.

    :param t0: value of the parameter ``t`` (or of the only parameter of the field)
    :param precision: number of bits at which refinement gives up
    :param bindings: explicit parameter values, alternative to t0
    :return: RealSign(sign in {-1, 0, 1}, (lo, hi))
    '''
    spec = a.spec
    if spec.imaginary_index is not None and spec.imaginary_index in a.generators_used():
        raise ImaginaryPresent('%s involves the imaginary unit' % a)

    bindings = dict(bindings or {})
    if t0 is not None:
        symbol = 't' if 't' in spec.field.symbols else spec.field.symbols[0]
        bindings[symbol] = to_fraction(t0)

    for idx in a.generators_used():
        g = spec.generators[idx]
        value = g.radicand.evaluate(bindings)
        if g.exponent == 2 and value.is_ground and value.to_fraction() < 0:
            raise NegativeRadicand('Radicand %s of %s is negative at %s'
                                   % (g.radicand, g.name, format_bindings(bindings)))

    element = a.specialize(bindings) if bindings else a
    if not element.coeffs:
        return RealSign(0, (Fraction(0), Fraction(0)))

    target = element.spec
    for c in element.coeffs.values():
        if not c.is_ground:
            raise ValueError('Parameters %s of %s are unbound' % (', '.join(target.field.symbols), a))

    bits = tubular.conf['tubular.algebra.tower.precision']
    limit = precision or tubular.conf['tubular.algebra.tower.max_precision']
    while True:
        enclosures = {idx: _root_enclosure(target.generators[idx].radicand.to_fraction(),
                                           target.generators[idx].exponent, bits)
                      for idx in element.generators_used()}
        lo = hi = Fraction(0)
        for m, c in element.coeffs.items():
            value = c.to_fraction()
            term = (value, value)
            for idx, e in enumerate(m):
                for _ in range(e):
                    term = _interval_mul(term, enclosures[idx])
            lo += term[0]
            hi += term[1]
        if lo > 0 or hi < 0:
            logger.trace('sign of %s decided at %d bits', a, bits)
            return RealSign(1 if lo > 0 else -1, (lo, hi))
        if bits >= limit:
            raise PrecisionExhausted('Sign of %s undecided at %d bits' % (a, bits))
        bits = min(bits * 2, limit)



def denest_sqrt(x):
    '''
    The nonnegative square root of x = a + b·M inside x's tower, where a, b are
    rational and M is a product of real quadratic generators, provided
    a² - M²·b² is a rational square.
    '''
    spec = x.spec
    if x.is_ground():
        root = rational_root(x.to_fraction(), 2)
        if root is None:
            raise NotDenestable('%s is not a rational square' % x)
        return spec.ground(root)
    others = [m for m in x.coeffs if m != spec.unit]
    if len(others) != 1 or any(e > 1 or spec.generators[idx].exponent != 2 or spec.generators[idx].imaginary
                               for idx, e in enumerate(others[0]) if e):
        raise NotDenestable('%s is not of the form a + b·sqrt(m)' % x)
    monom = others[0]
    radical = TowerElement(spec, {monom: spec.field.one})
    m = (radical * radical).to_fraction()
    a = x.coefficient(spec.unit).to_fraction()
    b = x.coefficient(monom).to_fraction()
    s = rational_root(a * a - m * b * b, 2)
    if s is None:
        raise NotDenestable('%s does not denest' % x)

    def root(u):
        r = rational_root(u, 2)
        if r is not None:
            return spec.ground(r)
        r = rational_root(u / m, 2)
        if r is not None:
            return radical * r
        raise NotDenestable('%s does not denest' % x)

    y = root((a + s) / 2) + root((a - s) / 2) * (1 if b > 0 else -1)
    if y * y != x:
        raise NotDenestable('%s does not denest' % x)
    if tower_eval_real(y).sign < 0:
        y = -y
    return y

