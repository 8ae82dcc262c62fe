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
The catalog of polynomial automorphisms of C^(n+1) carrying tube
hypersurfaces onto quadrics (or, for ``quadric_to_tube``, a quadric onto a
tube). Components are polynomials in the formal complex variables z0..zn.
'''

from collections import namedtuple
from fractions import Fraction
import logging

from tubular.algebra.poly import MPoly, VariableSpace
from tubular.geometry.families import instantiate_family, ParameterOutOfDomain
from tubular.geometry.quadrics import HermitianQuadric
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


TAGS = ('phi1', 'phi2', 'pt', 'calpt', 'st', 'quadric_to_tube')


class NonHolomorphicComponent(TubularError, ValueError):
    pass



class PolyAutomorphism(object):
    '''
    The map Z ↦ (z0*, ..., zn*) given by n+1 holomorphic polynomials.
    '''

    def __init__(self, tag, components, params=None):
        if not components:
            raise ValueError('An automorphism needs components')
        space = components[0].space
        n = len(components) - 1
        if space != VariableSpace.complex(n):
            raise ValueError('Components must live in the complex variables of dimension %d' % n)
        for idx, component in enumerate(components):
            if component.space != space or component.spec != components[0].spec:
                raise ValueError('Component %d lives in another space or tower' % idx)
            if not component.is_holomorphic():
                raise NonHolomorphicComponent('Component z%d* depends on conjugate variables' % idx)
        self.tag = tag
        self.n = n
        self.components = list(components)
        self.params = dict(params or {})


    @property
    def space(self):
        return self.components[0].space


    @property
    def spec(self):
        return self.components[0].spec


    @classmethod
    def identity(cls, n, spec):
        space = VariableSpace.complex(n)
        return cls('identity', [MPoly.variable(space, spec, 'z%d' % j) for j in range(n + 1)])


    def __repr__(self):
        return '<PolyAutomorphism %s n=%d>' % (self.tag, self.n)



CatalogEntry = namedtuple('CatalogEntry', 'base map quadric')


class _Maker(object):
    def __init__(self, base):
        self.n = base.n
        self.spec = base.spec
        self.space = VariableSpace.complex(base.n)
        self.i = self.spec.imaginary_unit
        self.roots = base.roots
        self.half = Fraction(1, 2)


    def z(self, j):
        return MPoly.variable(self.space, self.spec, 'z%d' % j)


    def sum_squares(self, indices):
        total = MPoly(self.space, self.spec)
        for j in indices:
            total = total + self.z(j) ** 2
        return total


    def parameter(self, base, symbol):
        value = base.params.get(symbol)
        return self.spec.ground(self.spec.field.gen(symbol) if value is None else value)


    @property
    def inv_sqrt2(self):
        return 1 / self.roots['two']



def _phi1(n=3):
    base = instantiate_family('M1', n=n)
    mk = _Maker(base)
    z, h = mk.z, mk.half
    z0 = mk.i * (z(0) - mk.sum_squares(range(1, n)) * h + z(n) ** 2 * h)
    components = [z0] + [z(j) * mk.inv_sqrt2 for j in range(1, n + 1)]
    quadric = HermitianQuadric.standard(base.spec, n - 1, n)
    return CatalogEntry(base, PolyAutomorphism('phi1', components, dict(n=n)), quadric)


def _phi2(n=3):
    base = instantiate_family('M2', n=n)
    mk = _Maker(base)
    z, h = mk.z, mk.half
    z0 = mk.i * (z(0) - mk.sum_squares(range(1, n - 1)) * h - z(n - 1) * z(n) * h
                 - z(n) ** 3 * Fraction(1, 4))
    rest = z(n - 1) * Fraction(1, 4) + z(n) ** 2 * Fraction(3, 8)
    components = ([z0] + [z(j) * mk.inv_sqrt2 for j in range(1, n - 1)]
                  + [(z(n) + rest) * mk.inv_sqrt2, (z(n) - rest) * mk.inv_sqrt2])
    quadric = HermitianQuadric.standard(base.spec, n - 1, n)
    return CatalogEntry(base, PolyAutomorphism('phi2', components, dict(n=n)), quadric)


def _pt(k=5, n=7, t=None):
    base = instantiate_family('Pt', k=k, n=n, t=t)
    mk = _Maker(base)
    z, h, i = mk.z, mk.half, mk.i
    tt = mk.parameter(base, 't')
    alpha, beta = mk.roots['2(1+t)'], mk.roots['3t']
    gamma = mk.roots['(-t^2+34t-1)/(3t)']
    quarter = Fraction(1, 4)
    c = (1 + tt) / beta

    z0 = i * (z(0) - mk.sum_squares(range(1, k - 1)) * h - z(k - 1) * z(k) * h
              - z(k + 1) * z(k + 2) * h + mk.sum_squares(range(k + 3, n + 1)) * h
              - z(k - 4) * z(k - 1) * z(k + 1) * (alpha / 2)
              - z(k - 3) * z(k + 1) ** 2 * (beta / 2)
              - z(k - 3) * z(k - 1) ** 2 * (c / 4)
              - z(k - 2) * z(k - 1) ** 2 * (gamma / 4)
              - (z(k - 1) ** 2 + z(k + 1) ** 2) * (z(k - 1) ** 2 + z(k + 1) ** 2 * tt) * Fraction(1, 8))

    odd = (z(k - 2) * z(k - 1) * gamma + z(k - 4) * z(k + 1) * alpha + z(k - 3) * z(k - 1) * c
           + z(k - 1) ** 3 + z(k - 1) * z(k + 1) ** 2 * ((1 + tt) / 2))
    even = (z(k - 4) * z(k - 1) * alpha + z(k - 3) * z(k + 1) * (2 * beta)
            + z(k - 1) ** 2 * z(k + 1) * ((1 + tt) / 2) + z(k + 1) ** 3 * tt)
    scale = -i * quarter

    components = [z0]
    for j in range(1, n + 1):
        if j == k - 4:
            components.append((z(k - 4) + z(k - 1) * z(k + 1) * (alpha / 2)) * mk.inv_sqrt2)
        elif j == k - 3:
            components.append((z(k - 3) + z(k + 1) ** 2 * (beta / 2) + z(k - 1) ** 2 * (c / 4)) * mk.inv_sqrt2)
        elif j == k - 2:
            components.append((z(k - 2) + z(k - 1) ** 2 * (gamma / 4)) * mk.inv_sqrt2)
        elif j == k - 1:
            components.append((2 * z(k - 1) + z(k) + odd) * scale)
        elif j == k:
            components.append((2 * z(k + 1) + z(k + 2) + even) * scale)
        elif j == k + 1:
            components.append((-2 * z(k - 1) + z(k) + odd) * scale)
        elif j == k + 2:
            components.append((-2 * z(k + 1) + z(k + 2) + even) * scale)
        else:
            components.append(z(j) * mk.inv_sqrt2)
    quadric = HermitianQuadric.standard(base.spec, k, n)
    return CatalogEntry(base, PolyAutomorphism('pt', components, base.params), quadric)


def _calpt(k=4, n=7, t=None):
    base = instantiate_family('CalPt', k=k, n=n, t=t)
    mk = _Maker(base)
    z, h, i = mk.z, mk.half, mk.i
    tt = mk.parameter(base, 't')
    alpha, beta = mk.roots['2(1+t)'], mk.roots['3t']
    gamma = mk.roots['(t^2-34t+1)/(3t)']
    quarter = Fraction(1, 4)
    c = (1 + tt) / beta

    z0 = i * (z(0) - mk.sum_squares(range(1, k - 1)) * h + z(k - 1) ** 2 * h - z(k) * z(k + 1) * h
              - z(k + 2) * z(k + 3) * h + mk.sum_squares(range(k + 4, n + 1)) * h
              - z(k - 3) * z(k) * z(k + 2) * (alpha / 2)
              - z(k - 2) * z(k + 2) ** 2 * (beta / 2)
              - z(k - 2) * z(k) ** 2 * (c / 4)
              - z(k - 1) * z(k) ** 2 * (gamma / 4)
              - (z(k) ** 2 + z(k + 2) ** 2) * (z(k) ** 2 + z(k + 2) ** 2 * tt) * Fraction(1, 8))

    even = (z(k - 3) * z(k) * alpha + z(k - 2) * z(k + 2) * (2 * beta)
            + z(k) ** 2 * z(k + 2) * ((1 + tt) / 2) + z(k + 2) ** 3 * tt)
    odd = (z(k - 1) * z(k) * gamma + z(k - 3) * z(k + 2) * alpha + z(k - 2) * z(k) * c
           + z(k) ** 3 + z(k) * z(k + 2) ** 2 * ((1 + tt) / 2))
    scale = -i * quarter

    components = [z0]
    for j in range(1, n + 1):
        if j == k - 3:
            components.append((z(k - 3) + z(k) * z(k + 2) * (alpha / 2)) * mk.inv_sqrt2)
        elif j == k - 2:
            components.append((z(k - 2) + z(k + 2) ** 2 * (beta / 2) + z(k) ** 2 * (c / 4)) * mk.inv_sqrt2)
        elif j == k - 1:
            components.append((2 * z(k + 2) + z(k + 3) + even) * scale)
        elif j == k:
            components.append((2 * z(k) + z(k + 1) + odd) * scale)
        elif j == k + 1:
            components.append((z(k - 1) - z(k) ** 2 * (gamma / 4)) * mk.inv_sqrt2)
        elif j == k + 2:
            components.append((-2 * z(k) + z(k + 1) + odd) * scale)
        elif j == k + 3:
            components.append((-2 * z(k + 2) + z(k + 3) + even) * scale)
        else:
            components.append(z(j) * mk.inv_sqrt2)
    quadric = HermitianQuadric.standard(base.spec, k, n)
    return CatalogEntry(base, PolyAutomorphism('calpt', components, base.params), quadric)


def _st(t=None):
    base = instantiate_family('St', t=t)
    mk = _Maker(base)
    z, h = mk.z, mk.half
    tt = mk.parameter(base, 't')
    z0 = mk.i * (z(0) - (z(1) * z(6) + z(2) * z(5) + z(3) * z(4)) * h
                 - (z(4) ** 3 + z(5) ** 3 + z(6) ** 3 + z(4) * z(5) * z(6) * tt) * Fraction(1, 4))
    components = [
        z0,
        z(1) + z(6) ** 2 * Fraction(3, 2) + z(4) * z(5) * (tt / 2),
        z(2) + z(5) ** 2 * Fraction(3, 2) + z(4) * z(6) * (tt / 2),
        z(3) + z(4) ** 2 * Fraction(3, 2) + z(5) * z(6) * (tt / 2),
        z(4), z(5), z(6),
    ]
    quadric = HermitianQuadric.paired_33(base.spec)
    return CatalogEntry(base, PolyAutomorphism('st', components, base.params), quadric)


def _quadric_to_tube(k=2, n=3):
    '''
    The map from the quadric Q_{k,n-k} onto the tube over
    x0 = Σ_{j<=k} xj^2 - Σ_{j>k} xj^2; the catalog base is that tube.
    '''
    base = instantiate_family('QuadricTube', k=k, n=n)
    mk = _Maker(base)
    z = mk.z
    sqrt2 = mk.roots['two']
    z0 = -mk.i * z(0) + mk.sum_squares(range(1, k + 1)) - mk.sum_squares(range(k + 1, n + 1))
    components = [z0] + [z(j) * sqrt2 for j in range(1, n + 1)]
    quadric = HermitianQuadric.standard(base.spec, k, n)
    return CatalogEntry(base, PolyAutomorphism('quadric_to_tube', components, dict(k=k, n=n)), quadric)


_CATALOG = {
    'phi1': _phi1,
    'phi2': _phi2,
    'pt': _pt,
    'calpt': _calpt,
    'st': _st,
    'quadric_to_tube': _quadric_to_tube,
}


def catalog_entry(tag, **params):
    '''
    The base, the automorphism and the target quadric of a catalog map.
    '''
    try:
        make = _CATALOG[tag]
    except KeyError:
        raise ParameterOutOfDomain('Unknown automorphism %r, use one of %s' % (tag, ', '.join(TAGS)))
    entry = make(**{key: value for key, value in params.items() if value is not None})
    logger.debug('built automorphism %s with %d terms', tag, sum(len(c.terms) for c in entry.map.components))
    return entry


def automorphism(tag, **params):
    return catalog_entry(tag, **params).map
