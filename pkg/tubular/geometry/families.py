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
The catalog of tube hypersurface bases x0 = F(x1, ..., xn).

Each family is built over a radical tower holding every radical its
equation and its catalog automorphism need, plus the imaginary unit, so a
base and the map carrying it onto a quadric share one tower.
'''

from collections import namedtuple
from functools import lru_cache
import inspect
import logging

from tubular.algebra.arith import function_field, parse_rational, to_fraction
from tubular.algebra.poly import MPoly, VariableSpace
from tubular.algebra.tower import TowerSpec
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


TAGS = ('M1', 'M2', 'QuadricTube', 'Pt', 'CalPt', 'FrakP', 'St', 'GenHyper')


class ParameterOutOfDomain(TubularError, ValueError):
    pass


class NotOnHypersurface(TubularError, ValueError):
    pass



FamilyTower = namedtuple('FamilyTower', 'spec roots')


@lru_cache(maxsize=256)
def family_tower(symbols, radicands, names):
    '''
    A tower over ℚ(symbols) with the imaginary unit and the square roots of
    the radicands named by keys of :data:`_RADICANDS`.
    '''
    field = function_field(*symbols)
    values = [_RADICANDS[key](field) for key in radicands]
    spec, roots, _ = TowerSpec.from_radicals(field, values, imaginary=True, names=names)
    return FamilyTower(spec, dict(zip(radicands, roots)))


def _t(field):
    return field.gen('t')


_RADICANDS = {
    'two': lambda field: field(2),
    '2(1+t)': lambda field: 2 * (1 + _t(field)),
    '3t': lambda field: 3 * _t(field),
    '(-t^2+34t-1)/(3t)': lambda field: (-_t(field) ** 2 + 34 * _t(field) - 1) / (3 * _t(field)),
    '(t^2-34t+1)/(3t)': lambda field: (_t(field) ** 2 - 34 * _t(field) + 1) / (3 * _t(field)),
}



class TubeBase(object):
    '''
    The base x0 = F(x1, ..., xn) of a tube hypersurface.

    :param tag: the family tag (or 'custom')
    :param n: the dimension, F lives in the real variable space of dimension n
    :param F: MPoly in x1..xn
    :param params: the family parameters, None for symbolic ones
    :param roots: the named radicals of the family tower
    '''

    def __init__(self, tag, n, F, params=None, roots=None):
        if F.space != VariableSpace.real(n):
            raise ValueError('F must live in the real variables of dimension %d' % n)
        if F.degree(['x0']) > 0 or any(name.startswith('y') for name in F.variables()):
            raise ValueError('F may only depend on x1..x%d' % n)
        self.tag = tag
        self.n = n
        self.F = F
        self.params = dict(params or {})
        self.roots = dict(roots or {})


    @property
    def space(self):
        return self.F.space


    @property
    def spec(self):
        return self.F.spec


    def variables(self):
        return ['x%d' % j for j in range(1, self.n + 1)]


    def part(self, d):
        '''
        The homogeneous part of degree d of F.
        '''
        return self.F.homogeneous_component(d)


    def value_at(self, point):
        '''
        F at a point (x1, ..., xn).
        '''
        if len(point) != self.n:
            raise ValueError('Expected %d coordinates, got %d' % (self.n, len(point)))
        return self.F.value_at(dict(zip(self.variables(), point)))


    def contains(self, q):
        '''
        Whether q = (x0, x1, ..., xn) satisfies x0 = F(x1, ..., xn) exactly.
        '''
        return self.value_at(q[1:]) == q[0]


    def point_over(self, x):
        '''
        The point (F(x), x) of the hypersurface above x.
        '''
        return (self.value_at(x),) + tuple(x)


    def with_polynomial(self, F, tag=None):
        return TubeBase(tag or self.tag, self.n, F, self.params, self.roots)


    def __eq__(self, other):
        return isinstance(other, TubeBase) and self.n == other.n and self.F == other.F


    def __hash__(self):
        return hash((self.n, self.F))


    def describe(self):
        params = ', '.join('%s=%s' % (key, 'symbolic' if value is None else value)
                           for key, value in sorted(self.params.items()))
        return '%s(%s)' % (self.tag, params)


    def __repr__(self):
        return '<TubeBase %s: x0 = %s>' % (self.describe(), self.F)



def _parameter(value):
    if value is None:
        return None
    return parse_rational(value) if isinstance(value, str) else to_fraction(value)


def _require(condition, message, *args):
    if not condition:
        raise ParameterOutOfDomain(message % args)


class _Builder(object):
    def __init__(self, n, spec):
        self.space = VariableSpace.real(n)
        self.spec = spec


    def x(self, j):
        return MPoly.variable(self.space, self.spec, 'x%d' % j)


    def const(self, value):
        return MPoly.constant(self.space, self.spec, value)


    def squares(self, indices):
        total = self.const(0)
        for j in indices:
            total = total + self.x(j) ** 2
        return total


    def field_value(self, symbol, value):
        '''
        The tower element of a parameter: its symbol when symbolic, else the rational.
        '''
        field = self.spec.field
        return self.spec.ground(field.gen(symbol) if value is None else value)



def _m1(n=3):
    _require(n >= 2, 'M1 needs n >= 2, got n=%s', n)
    tower = family_tower(('t',), ('two',), ('sqrt2',))
    b = _Builder(n, tower.spec)
    F = b.squares(range(1, n)) - b.x(n) ** 2
    return TubeBase('M1', n, F, dict(n=n), tower.roots)


def _m2(n=3):
    _require(n >= 2, 'M2 needs n >= 2, got n=%s', n)
    tower = family_tower(('t',), ('two',), ('sqrt2',))
    b = _Builder(n, tower.spec)
    F = b.squares(range(1, n - 1)) + b.x(n - 1) * b.x(n) + b.x(n) ** 3
    return TubeBase('M2', n, F, dict(n=n), tower.roots)


def _quadric_tube(k=2, n=3):
    _require(1 <= k <= n, 'QuadricTube needs 1 <= k <= n, got k=%s, n=%s', k, n)
    tower = family_tower(('t',), ('two',), ('sqrt2',))
    b = _Builder(n, tower.spec)
    F = b.squares(range(1, k + 1)) - b.squares(range(k + 1, n + 1))
    return TubeBase('QuadricTube', n, F, dict(k=k, n=n), tower.roots)


def _check_pt_domain(t):
    _require(t >= 1, 'Pt needs t >= 1, got t=%s', t)
    _require(-t * t + 34 * t - 1 >= 0, 'Pt needs t <= 17+12*sqrt(2), got t=%s', t)


def _check_calpt_domain(t):
    _require(t >= 17 and t * t - 34 * t + 1 >= 0, 'CalPt needs t >= 17+12*sqrt(2), got t=%s', t)


@lru_cache(maxsize=256)
def _pt_tower(t, key):
    if t is None:
        return family_tower(('t',), ('2(1+t)', '3t', key, 'two'), ('alpha', 'beta', 'gamma', 'sqrt2'))
    field = function_field('t')
    radicands = [_RADICANDS[name](field).evaluate(dict(t=t)) for name in ('2(1+t)', '3t', key, 'two')]
    spec, roots, _ = TowerSpec.from_radicals(field, radicands, imaginary=True,
                                             names=('alpha', 'beta', 'gamma', 'sqrt2'))
    return FamilyTower(spec, dict(zip(('2(1+t)', '3t', key, 'two'), roots)))


def _pt(k=5, n=7, t=None):
    _require(n >= 7 and 5 <= k <= n - 2, 'Pt needs n >= 7 and 5 <= k <= n-2, got k=%s, n=%s', k, n)
    t = _parameter(t)
    if t is not None:
        _check_pt_domain(t)
    tower = _pt_tower(t, '(-t^2+34t-1)/(3t)')
    b = _Builder(n, tower.spec)
    x, tt = b.x, b.field_value('t', t)
    alpha, beta = tower.roots['2(1+t)'], tower.roots['3t']
    gamma = tower.roots['(-t^2+34t-1)/(3t)']
    F = (b.squares(range(1, k - 1)) + x(k - 1) * x(k) + x(k + 1) * x(k + 2)
         - b.squares(range(k + 3, n + 1))
         + x(k - 4) * x(k - 1) * x(k + 1) * (2 * alpha)
         + x(k - 3) * x(k + 1) ** 2 * (2 * beta)
         + x(k - 3) * x(k - 1) ** 2 * ((1 + tt) / beta)
         + x(k - 2) * x(k - 1) ** 2 * gamma
         + (x(k - 1) ** 2 + x(k + 1) ** 2) * (x(k - 1) ** 2 + x(k + 1) ** 2 * tt))
    return TubeBase('Pt', n, F, dict(k=k, n=n, t=t), tower.roots)


def _calpt(k=4, n=7, t=None):
    _require(n >= 7 and 4 <= k <= n - 3, 'CalPt needs n >= 7 and 4 <= k <= n-3, got k=%s, n=%s', k, n)
    t = _parameter(t)
    if t is not None:
        _check_calpt_domain(t)
    tower = _pt_tower(t, '(t^2-34t+1)/(3t)')
    b = _Builder(n, tower.spec)
    x, tt = b.x, b.field_value('t', t)
    alpha, beta = tower.roots['2(1+t)'], tower.roots['3t']
    gamma = tower.roots['(t^2-34t+1)/(3t)']
    F = (b.squares(range(1, k - 1)) - x(k - 1) ** 2 + x(k) * x(k + 1) + x(k + 2) * x(k + 3)
         - b.squares(range(k + 4, n + 1))
         + x(k - 3) * x(k) * x(k + 2) * (2 * alpha)
         + x(k - 2) * x(k + 2) ** 2 * (2 * beta)
         + x(k - 2) * x(k) ** 2 * ((1 + tt) / beta)
         + x(k - 1) * x(k) ** 2 * gamma
         + (x(k) ** 2 + x(k + 2) ** 2) * (x(k) ** 2 + x(k + 2) ** 2 * tt))
    return TubeBase('CalPt', n, F, dict(k=k, n=n, t=t), tower.roots)


def _frakp(n=7, p=0, tau=None):
    _require(n >= 7 and 0 <= p <= n - 7, 'FrakP needs n >= 7 and 0 <= p <= n-7, got n=%s, p=%s', n, p)
    tau = _parameter(tau)
    _require(tau is None or tau not in (2, -2), 'FrakP needs tau != +-2, got tau=%s', tau)
    tower = family_tower(('tau',), (), ())
    b = _Builder(n, tower.spec)
    x, tt = b.x, b.field_value('tau', tau)
    F = (4 * x(1) * x(7) + 4 * x(2) * x(6) - x(3) ** 2 * tt + 2 * x(4) ** 2 - x(5) ** 2 * tt
         + 4 * x(3) * x(5)
         + b.squares(range(8, p + 8)) - b.squares(range(p + 8, n + 1))
         - x(1) ** 2 * x(3) * (2 * tt) - x(2) ** 2 * x(5) * (2 * tt)
         + 4 * x(1) ** 2 * x(5) + 4 * x(2) ** 2 * x(3) + 8 * x(1) * x(2) * x(4)
         - x(1) ** 4 * (tt / 3) + 4 * x(1) ** 2 * x(2) ** 2 - x(2) ** 4 * (tt / 3))
    return TubeBase('FrakP', n, F, dict(n=n, p=p, tau=tau), tower.roots)


def _st(t=None):
    t = _parameter(t)
    tower = family_tower(('t',), (), ())
    b = _Builder(6, tower.spec)
    x, tt = b.x, b.field_value('t', t)
    F = (x(1) * x(6) + x(2) * x(5) + x(3) * x(4)
         + x(4) ** 3 + x(5) ** 3 + x(6) ** 3 + x(4) * x(5) * x(6) * tt)
    return TubeBase('St', 6, F, dict(t=t), tower.roots)


def _genhyper(t=None, a=None, b=None, c=None, d=None):
    params = dict(t=_parameter(t), a=_parameter(a), b=_parameter(b), c=_parameter(c), d=_parameter(d))
    for name in 'abc':
        _require(params[name] != 0, 'GenHyper needs %s != 0', name)
    tower = family_tower(('t', 'a', 'b', 'c', 'd'), (), ())
    bld = _Builder(7, tower.spec)
    x = bld.x
    ta, tb, tc, td, tt = (bld.field_value(name, params[name]) for name in 'abcdt')
    F = (bld.squares((1, 2, 3)) + x(4) * x(5) + x(6) * x(7)
         + x(1) * x(4) * x(6) * ta + x(2) * x(6) ** 2 * tb + x(2) * x(4) ** 2 * tc
         + x(3) * x(4) ** 2 * td
         + (x(4) ** 2 + x(6) ** 2) * (x(4) ** 2 + x(6) ** 2 * tt))
    return TubeBase('GenHyper', 7, F, params, tower.roots)


_FAMILIES = {
    'M1': _m1,
    'M2': _m2,
    'QuadricTube': _quadric_tube,
    'Pt': _pt,
    'CalPt': _calpt,
    'FrakP': _frakp,
    'St': _st,
    'GenHyper': _genhyper,
}


def instantiate_family(tag, **params):
    '''
    Build a catalog base by tag. Parameters left out (or None) are symbolic.

    :param tag: one of :data:`TAGS`
    :raises ParameterOutOfDomain: when a parameter violates the family's domain
    '''
    try:
        family = _FAMILIES[tag]
    except KeyError:
        raise ParameterOutOfDomain('Unknown family %r, use one of %s' % (tag, ', '.join(TAGS)))
    params = {key: value for key, value in params.items() if value is not None}
    try:
        inspect.signature(family).bind(**params)
    except TypeError as exc:
        raise ParameterOutOfDomain('Invalid parameters for %s: %s' % (tag, exc)) from exc
    base = family(**params)
    logger.debug('instantiated %s with %d terms', base.describe(), len(base.F.terms))
    return base
