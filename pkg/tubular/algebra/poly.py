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
Sparse multivariate polynomials with radical tower coefficients.

A :class:`VariableSpace` fixes the variable names, either the real tube
coordinates ``x0..xn, y0..yn`` or the formal complex coordinates
``z0..zn, zb0..zbn`` (``zbj`` standing for the conjugate of ``zj``).
'''

import logging
import numbers
import re

from cytoolz import valfilter, merge_with

from tubular.algebra.arith import RatFunc, render_terms
from tubular.algebra.tower import TowerElement, SpecMismatch, _wrap, render_generator
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


class UnknownVariable(TubularError, KeyError):
    def __str__(self):
        return str(self.args[0])



class VariableSpace(object):
    def __init__(self, names):
        self.names = tuple(names)
        self._index = {name: idx for idx, name in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError('Variable names must be unique, got %s' % (self.names,))


    @classmethod
    def real(cls, n):
        return cls(['x%d' % j for j in range(n + 1)] + ['y%d' % j for j in range(n + 1)])


    @classmethod
    def complex(cls, n):
        return cls(['z%d' % j for j in range(n + 1)] + ['zb%d' % j for j in range(n + 1)])


    @property
    def arity(self):
        return len(self.names)


    @property
    def dimension(self):
        return sum(1 for name in self.names if name[0] in 'xz' and not name.startswith('zb')) - 1


    @property
    def is_complex(self):
        return 'z0' in self._index


    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable('Variable %r is not in %r' % (name, self))


    def __contains__(self, name):
        return name in self._index


    def __eq__(self, other):
        return self is other or (isinstance(other, VariableSpace) and self.names == other.names)


    def __hash__(self):
        return hash(self.names)


    def __repr__(self):
        return '<VariableSpace %s>' % ','.join(self.names)



def conjugate_name(name):
    if name.startswith('zb'):
        return 'z' + name[2:]
    if name.startswith('z'):
        return 'zb' + name[1:]
    return name



class MPoly(object):
    '''
    A polynomial over a radical tower in the variables of a VariableSpace.
    Terms map exponent tuples to nonzero TowerElements.
    '''

    __slots__ = ('space', 'spec', 'terms', '_hash')

    def __init__(self, space, spec, terms=None):
        self.space = space
        self.spec = spec
        self.terms = terms or {}
        self._hash = None


    @classmethod
    def constant(cls, space, spec, value):
        value = spec.ground(value) if not isinstance(value, TowerElement) else value
        if value.spec != spec:
            value = value.lift(spec)
        return cls(space, spec, {(0,) * space.arity: value} if value else {})


    @classmethod
    def variable(cls, space, spec, name, coefficient=1):
        monom = [0] * space.arity
        monom[space.index(name)] = 1
        return cls(space, spec, {tuple(monom): spec.ground(coefficient)})


    def var(self, name):
        return MPoly.variable(self.space, self.spec, name)


    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.space != self.space:
                raise SpecMismatch('Polynomials over %r and %r can\'t be combined' % (self.space, other.space))
            if other.spec != self.spec:
                raise SpecMismatch('Polynomials over %r and %r can\'t be combined' % (self.spec, other.spec))
            return other
        if isinstance(other, (numbers.Rational, RatFunc, TowerElement)):
            return MPoly.constant(self.space, self.spec, other)
        return NotImplemented


    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        return MPoly(self.space, self.spec, valfilter(bool, merge_with(_sum, self.terms, other.terms)))

    __radd__ = __add__


    def __neg__(self):
        return MPoly(self.space, self.spec, {m: -c for m, c in self.terms.items()})


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
        if isinstance(other, (numbers.Rational, RatFunc, TowerElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monom = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                if monom in result:
                    result[monom] = result[monom] + c
                else:
                    result[monom] = c
        return MPoly(self.space, self.spec, valfilter(bool, result))

    __rmul__ = __mul__


    def scale(self, factor):
        if not isinstance(factor, TowerElement):
            factor = self.spec.ground(factor)
        elif factor.spec != self.spec:
            factor = factor.lift(self.spec)
        if not factor:
            return MPoly(self.space, self.spec)
        if factor == 1:
            return self
        return MPoly(self.space, self.spec, valfilter(bool, {m: c * factor for m, c in self.terms.items()}))


    def __truediv__(self, other):
        if isinstance(other, MPoly):
            value = other.constant_value()
            if value is None:
                raise ValueError('Division by the non-constant polynomial %s' % other)
            other = value
        if not isinstance(other, TowerElement):
            other = self.spec.ground(other)
        return self.scale(1 / other)


    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            return NotImplemented
        result = MPoly.constant(self.space, self.spec, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


    def __bool__(self):
        return bool(self.terms)


    @property
    def is_zero(self):
        return not self.terms


    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.space == other.space and self.spec == other.spec and self.terms == other.terms
        if isinstance(other, (numbers.Rational, RatFunc, TowerElement)):
            value = self.constant_value()
            return value is not None and value == other
        return NotImplemented


    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self.terms.items())))
        return self._hash


    def constant_value(self):
        '''
        The coefficient of a constant polynomial, None when not constant.
        '''
        if not self.terms:
            return self.spec.zero
        if len(self.terms) == 1:
            (monom, coeff), = self.terms.items()
            if not any(monom):
                return coeff
        return None


    def coefficient(self, monom):
        '''
        Coefficient of a monomial given as an exponent tuple or a dict of variable exponents.
        '''
        if isinstance(monom, dict):
            exponents = [0] * self.space.arity
            for name, e in monom.items():
                exponents[self.space.index(name)] = e
            monom = exponents
        return self.terms.get(tuple(monom), self.spec.zero)


    def degree(self, names=None):
        if not self.terms:
            return -1
        indices = self._indices(names)
        return max(sum(m[idx] for idx in indices) for m in self.terms)


    def _indices(self, names):
        if names is None:
            return range(self.space.arity)
        return [self.space.index(name) for name in names]


    def variables(self):
        used = set()
        for m in self.terms:
            used.update(idx for idx, e in enumerate(m) if e)
        return [self.space.names[idx] for idx in sorted(used)]


    def homogeneous_component(self, d, names=None):
        indices = self._indices(names)
        return MPoly(self.space, self.spec,
                     {m: c for m, c in self.terms.items() if sum(m[idx] for idx in indices) == d})


    def diff(self, name):
        idx = self.space.index(name)
        terms = {}
        for m, c in self.terms.items():
            if m[idx]:
                monom = m[:idx] + (m[idx] - 1,) + m[idx + 1:]
                terms[monom] = c * m[idx]
        return MPoly(self.space, self.spec, terms)


    def substitute(self, bindings, space=None):
        '''
        Simultaneous substitution of polynomials for variables. Unbound
        variables are carried over by name into the target space.
        '''
        return mpoly_substitute(self, bindings, space)


    def evaluate(self, values):
        '''
        Substitute scalars (rationals, rational functions, tower elements) for variables.
        '''
        bindings = {name: MPoly.constant(self.space, self.spec, value) for name, value in values.items()}
        return mpoly_substitute(self, bindings)


    def value_at(self, values):
        result = self.evaluate(values).constant_value()
        if result is None:
            raise ValueError('Variables remain unbound in %s' % self)
        return result


    def map_coefficients(self, func, spec=None):
        spec = spec or self.spec
        return MPoly(self.space, spec, valfilter(bool, {m: func(c) for m, c in self.terms.items()}))


    def lift(self, spec):
        if spec == self.spec:
            return self
        return self.map_coefficients(lambda c: c.lift(spec), spec)


    def specialize(self, bindings):
        '''
        Bind coefficient parameters to rationals, moving into the specialized tower.
        '''
        target, _ = self.spec.specialize(bindings)
        return self.map_coefficients(lambda c: c.specialize(bindings), target)


    def conjugate(self):
        '''
        Complex conjugate: i ↦ -i on coefficients and zj ↔ zbj on variables.
        '''
        permutation = [self.space.index(conjugate_name(name)) for name in self.space.names]
        terms = {}
        for m, c in self.terms.items():
            monom = [0] * len(m)
            for idx, e in enumerate(m):
                monom[permutation[idx]] = e
            terms[tuple(monom)] = c.conjugate()
        return MPoly(self.space, self.spec, terms)


    def is_holomorphic(self):
        return not any(name.startswith('zb') for name in self.variables())


    def __str__(self):
        return render(self)


    def __repr__(self):
        return '<MPoly %s>' % render(self)



def _sum(values):
    total = values[0]
    for value in values[1:]:
        total = total + value
    return total



def mpoly_substitute(p, bindings, space=None):
    '''
    Substitute the images in ``bindings`` (variable name to MPoly) for the
    variables of p, all images living in one common space.
    '''
    for name in bindings:
        p.space.index(name)
    images = list(bindings.values())
    if space is None:
        space = images[0].space if images else p.space
    for image in images:
        if image.space != space:
            raise SpecMismatch('Substitution images live in different spaces')
        if image.spec != p.spec:
            raise SpecMismatch('Substitution image over %r, expected %r' % (image.spec, p.spec))

    columns = []
    for name in p.space.names:
        if name in bindings:
            columns.append(bindings[name])
        else:
            columns.append(MPoly.variable(space, p.spec, name))

    powers = {}

    def power(idx, e):
        key = (idx, e)
        if key not in powers:
            powers[key] = columns[idx] if e == 1 else power(idx, e - 1) * columns[idx]
        return powers[key]

    result = {}
    for monom, coeff in p.terms.items():
        term = None
        for idx, e in enumerate(monom):
            if e:
                factor = power(idx, e)
                term = factor if term is None else term * factor
        if term is None:
            term_terms = {(0,) * space.arity: coeff}
        else:
            term_terms = {m: c * coeff for m, c in term.terms.items()}
        for m, c in term_terms.items():
            if m in result:
                result[m] = result[m] + c
            else:
                result[m] = c
    logger.trace('substituted %d variables into %d terms giving %d terms', len(bindings), len(p.terms), len(result))
    return MPoly(space, p.spec, valfilter(bool, result))



def complex_split(e, space=None):
    '''
    Split an expression in z, zb into real and imaginary parts in the real
    variables x, y with z = x + iy, zb = x - iy.
    '''
    spec = e.spec
    if not spec.includes_imaginary_unit:
        raise SpecMismatch('Splitting needs a tower with the imaginary unit, got %r' % spec)
    n = e.space.dimension
    space = space or VariableSpace.real(n)
    i = spec.imaginary_unit
    bindings = {}
    for j in range(n + 1):
        x = MPoly.variable(space, spec, 'x%d' % j)
        iy = MPoly.variable(space, spec, 'y%d' % j, i)
        bindings['z%d' % j] = x + iy
        bindings['zb%d' % j] = x - iy
    expanded = mpoly_substitute(e, bindings, space)
    re, im = {}, {}
    for m, c in expanded.terms.items():
        c_re, c_im = c.split_imaginary()
        if c_re:
            re[m] = c_re
        if c_im:
            im[m] = c_im
    return MPoly(space, spec, re), MPoly(space, spec, im)



def homogeneous_component(p, d, names=None):
    return p.homogeneous_component(d, names)



_VARIABLE_ORDER = re.compile(r'^([a-z]+)(\d+)$')


def render_monomial(space, monom):
    factors = []
    for name, e in zip(space.names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('%s^%d' % (name, e))
    return '*'.join(factors)


def render(p):
    '''
    Canonical text of a polynomial: terms in graded lexicographic order,
    explicit exponents, coefficients in the expression grammar.
    '''
    terms = []
    for monom in sorted(p.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
        coeff = p.terms[monom]
        monomial = render_monomial(p.space, monom)
        if coeff.is_ground() and coeff.ground().is_ground:
            value = coeff.to_fraction()
            text = '' if abs(value) == 1 and monomial else str(abs(value))
            terms.append((text, value < 0, monomial))
        elif len(coeff.coeffs) == 1 and next(iter(coeff.coeffs.values())).is_ground:
            (radical, value), = coeff.coeffs.items()
            value = value.to_fraction()
            factors = [render_generator(g, e) for g, e in zip(p.spec.generators, radical) if e]
            if abs(value) != 1:
                factors.insert(0, str(abs(value)))
            terms.append(('*'.join(factors), value < 0, monomial))
        else:
            terms.append((_wrap(str(coeff)), False, monomial))
    return render_terms(terms)
