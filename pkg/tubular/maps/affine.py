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
Affine maps of R^(n+1) that preserve the graph form x0 = F(x1, ..., xn).
'''

import logging

from tubular.algebra import linalg
from tubular.algebra.poly import MPoly


logger = logging.getLogger(__name__)



class AffineGraphMap(object):
    '''
    The map x0 ↦ λ·x0 + ℓ·x + μ, x ↦ C·x + b.

    :param lam: the nonzero scale of x0
    :param ell: the coefficients of the linear form ℓ in x1..xn
    :param mu: the constant added to x0
    :param C: n×n matrix
    :param b: the translation vector of x
    :param spec: the tower of all entries
    '''

    def __init__(self, lam, ell, mu, C, b, spec):
        n = len(C)
        if any(len(row) != n for row in C) or len(ell) != n or len(b) != n:
            raise linalg.DimensionMismatch('Inconsistent dimensions of an affine graph map')
        ground = spec.ground
        self.spec = spec
        self.n = n
        self.lam = ground(lam)
        if not self.lam:
            raise ValueError('The scale of x0 must be nonzero')
        self.ell = [ground(v) for v in ell]
        self.mu = ground(mu)
        self.C = [[ground(v) for v in row] for row in C]
        self.b = [ground(v) for v in b]


    @classmethod
    def identity(cls, n, spec):
        zeros = [0] * n
        return cls(1, zeros, 0, linalg.identity(n, spec.one), zeros, spec)


    @classmethod
    def translation(cls, q, spec):
        '''
        X ↦ X - q for q = (q0, q1, ..., qn).
        '''
        n = len(q) - 1
        return cls(1, [0] * n, -spec.ground(q[0]), linalg.identity(n, spec.one),
                   [-spec.ground(v) for v in q[1:]], spec)


    def compose(self, other):
        '''
        The map self ∘ other, i.e. other applied first.
        '''
        if other.n != self.n:
            raise linalg.DimensionMismatch('Can\'t compose maps of dimension %d and %d' % (self.n, other.n))
        C = linalg.mat_mul(self.C, other.C)
        b = [u + v for u, v in zip(linalg.mat_vec(self.C, other.b), self.b)]
        lam = self.lam * other.lam
        pulled = linalg.mat_vec(linalg.transpose(other.C), self.ell)
        ell = [self.lam * u + v for u, v in zip(other.ell, pulled)]
        mu = self.lam * other.mu + linalg.dot(self.ell, other.b) + self.mu
        return AffineGraphMap(lam, ell, mu, C, b, self.spec)


    def apply_point(self, q):
        '''
        The image of q = (x0, x1, ..., xn).
        '''
        if len(q) != self.n + 1:
            raise linalg.DimensionMismatch('Expected a point with %d coordinates, got %d' % (self.n + 1, len(q)))
        x = [self.spec.ground(v) for v in q[1:]]
        x0 = self.lam * self.spec.ground(q[0]) + linalg.dot(self.ell, x) + self.mu
        return (x0,) + tuple(u + v for u, v in zip(linalg.mat_vec(self.C, x), self.b))


    def is_identity(self):
        return self == AffineGraphMap.identity(self.n, self.spec)


    def __eq__(self, other):
        return (isinstance(other, AffineGraphMap) and self.n == other.n and self.lam == other.lam
                and self.ell == other.ell and self.mu == other.mu and self.C == other.C and self.b == other.b)


    def __repr__(self):
        return '<AffineGraphMap n=%d lam=%s mu=%s>' % (self.n, self.lam, self.mu)



def apply_affine(base, m):
    '''
    The graph F' of the image of the tube base under m:
    F'(x') = λ·F(C⁻¹(x' - b)) + ℓ·C⁻¹(x' - b) + μ.

    :raises SingularMatrix: when C is not invertible
    '''
    if m.n != base.n:
        raise linalg.DimensionMismatch('Map of dimension %d applied to a base of dimension %d' % (m.n, base.n))
    spec = base.spec
    if m.spec != spec:
        m = _lift(m, spec)
    inverse = linalg.inverse(m.C)
    space = base.space
    shifted = [MPoly.variable(space, spec, name) - b for name, b in zip(base.variables(), m.b)]
    preimage = [_combination(row, shifted, space, spec) for row in inverse]
    F = base.F.substitute(dict(zip(base.variables(), preimage)))
    F = F * m.lam + _combination(m.ell, preimage, space, spec) + m.mu
    logger.debug('applied affine map to %s giving %d terms', base.describe(), len(F.terms))
    return base.with_polynomial(F)


def _combination(coefficients, polys, space, spec):
    total = MPoly(space, spec)
    for c, p in zip(coefficients, polys):
        if c:
            total = total + p * c
    return total


def _lift(m, spec):
    lift = lambda v: v.lift(spec)
    return AffineGraphMap(lift(m.lam), [lift(v) for v in m.ell], lift(m.mu),
                          [[lift(v) for v in row] for row in m.C], [lift(v) for v in m.b], spec)
