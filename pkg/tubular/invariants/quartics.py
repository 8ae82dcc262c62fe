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
Binary quartic forms p4·ξ⁴ + p3·ξ³η + p2·ξ²η² + p1·ξη³ + p0·η⁴ and their
classical invariants.

The invariants use the normalized coefficients a = p4, b = p3/4, c = p2/6,
d = p1/4, e = p0:

    I = ae - 4bd + 3c²
    J = ace + 2bcd - ad² - b²e - c³
    disc = I³ - 27J²

Under a substitution of determinant δ, I scales by δ⁴ and J by δ⁶, so
I³/J² is an absolute invariant of GL2.
'''

from collections import namedtuple
from fractions import Fraction
from itertools import combinations
import logging
import numbers

from tubular.algebra.arith import function_field, parse_rational, to_fraction
from tubular.algebra.tower import TowerSpec
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


class NegativeParameter(TubularError, ValueError):
    pass


class CoincidentPoints(TubularError, ValueError):
    pass



def _scalar(value):
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    return value


def _times(p, q):
    r = [p[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                r[i + j] = r[i + j] + a * b
    return r



class BinaryQuartic(object):
    def __init__(self, p4, p3, p2, p1, p0):
        self.coefficients = tuple(_scalar(p) for p in (p4, p3, p2, p1, p0))
        if not any(self.coefficients):
            raise ValueError('A binary quartic can\'t be identically zero')


    @classmethod
    def from_mpoly(cls, q):
        '''
        The quartic of a homogeneous quartic MPoly in two variables, the
        first variable in the space's order playing ξ.
        '''
        names = q.variables()
        if len(names) != 2:
            raise ValueError('Expected a form in two variables, got %s' % (', '.join(names) or 'a constant'))
        if q.homogeneous_component(4) != q:
            raise ValueError('%s is not a quartic form' % q)
        xi, eta = names

        def coefficient(k):
            c = q.coefficient({xi: k, eta: 4 - k})
            return c.ground() if c.is_ground() else c

        return cls(*(coefficient(k) for k in range(4, -1, -1)))


    def transform(self, alpha, beta, gamma, delta):
        '''
        The quartic f(αξ + βη, γξ + δη).
        '''
        u, v = [alpha, beta], [gamma, delta]
        zero = self.coefficients[0] * 0
        total = [zero] * 5
        for k, p in zip(range(4, -1, -1), self.coefficients):
            if not p:
                continue
            term = [p]
            for _ in range(k):
                term = _times(term, u)
            for _ in range(4 - k):
                term = _times(term, v)
            total = [a + b for a, b in zip(total, term)]
        return BinaryQuartic(*total)


    def evaluate(self, xi, eta):
        total = 0
        for k, p in zip(range(4, -1, -1), self.coefficients):
            if p:
                total = total + p * xi ** k * eta ** (4 - k)
        return total


    def __eq__(self, other):
        return isinstance(other, BinaryQuartic) and self.coefficients == other.coefficients


    def __hash__(self):
        return hash(self.coefficients)


    def __repr__(self):
        return '<BinaryQuartic %s>' % ', '.join(map(str, self.coefficients))



def q_t(t=None):
    '''
    (ξ² + η²)(ξ² + t·η²), symbolic in t when t is None.
    '''
    if t is None:
        t = function_field('t').gen('t')
    elif isinstance(t, str):
        t = parse_rational(t)
    return BinaryQuartic(1, 0, 1 + t, 0, t)



QuarticInvariants = namedtuple('QuarticInvariants', 'I J disc')


def quartic_invariants(f):
    p4, p3, p2, p1, p0 = f.coefficients
    a, b, c, d, e = p4, p3 / 4, p2 / 6, p1 / 4, p0
    I = a * e - 4 * b * d + 3 * c * c
    J = a * c * e + 2 * b * c * d - a * d * d - b * b * e - c * c * c
    disc = I * I * I - 27 * J * J
    return QuarticInvariants(I, J, disc)


def quartic_absolute_invariant(f):
    '''
    I³/J², None when J vanishes.
    '''
    I, J, _ = quartic_invariants(f)
    if not J:
        return None
    return I * I * I / (J * J)



QuarticSeparation = namedtuple('QuarticSeparation', 'separated witness first second')


def separate_quartics(f, g):
    '''
    One-sided GL2(R) separation: the quartics are inequivalent when exactly
    one has a repeated root (vanishing discriminant) or when both are
    squarefree with J ≠ 0 and distinct absolute invariants. Equal invariants
    separate nothing.

    :return: QuarticSeparation(separated, witness, invariants of f, invariants of g)
    '''
    first, second = quartic_invariants(f), quartic_invariants(g)
    if bool(first.disc) != bool(second.disc):
        return QuarticSeparation(True, 'discriminant', first, second)
    if first.disc and first.J and second.J:
        a = first.I ** 3 / first.J ** 2
        b = second.I ** 3 / second.J ** 2
        if a != b:
            return QuarticSeparation(True, 'absolute invariant', first, second)
    return QuarticSeparation(False, None, first, second)


def gl2r_separate(t1, t2):
    '''
    Separate q_t1 and q_t2 under GL2(R).
    '''
    values = []
    for t in (t1, t2):
        t = parse_rational(t) if isinstance(t, str) else to_fraction(t)
        if t < 1 or -t * t + 34 * t - 1 < 0:
            logger.warning('t=%s is outside [1, 17+12*sqrt(2)]', t)
        values.append(t)
    result = separate_quartics(q_t(values[0]), q_t(values[1]))
    logger.debug('q_%s and q_%s: %s', values[0], values[1],
                 'separated by the %s' % result.witness if result.separated else 'inconclusive')
    return result



def quartic_root_lines(t):
    '''
    The zero lines of q_t as the ratios ζ = ξ/η of its roots, in a tower with
    i and √t: [i, -i, i√t, -i√t] (coinciding pairwise when t = 1).

    :raises NegativeParameter: when t < 0
    '''
    t = parse_rational(t) if isinstance(t, str) else to_fraction(t)
    if t < 0:
        raise NegativeParameter('q_t has real root lines for t < 0, got t=%s' % t)
    spec, (root,), _ = TowerSpec.from_radicals(function_field('t'), [t], imaginary=True, names=('sqrt_t',))
    i = spec.imaginary_unit
    return [i, -i, i * root, -i * root]



def cross_ratio(z1, z2, z3, z4):
    return ((z3 - z1) * (z4 - z2)) / ((z3 - z2) * (z4 - z1))


def cross_ratio_j(points):
    '''
    256(λ² - λ + 1)³ / (λ²(λ - 1)²) for the cross-ratio λ of four distinct
    points of the affine line, independent of their order.

    :raises CoincidentPoints: when two points coincide
    '''
    points = [_scalar(p) for p in points]
    if len(points) != 4:
        raise ValueError('Expected four points, got %d' % len(points))
    for u, v in combinations(points, 2):
        if u == v:
            raise CoincidentPoints('Point %s occurs twice' % u)
    lam = cross_ratio(*points)
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)
