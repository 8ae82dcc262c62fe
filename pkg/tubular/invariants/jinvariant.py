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
The plane cubics c_t = w1³ + w2³ + w3³ + t·w1w2w3: their singular points,
the reduction to Weierstrass form, the Tate quantities and the j-invariant

    j(t) = -t³(t³ - 216)³ / (t³ + 27)³ = Φ(t³),  Φ(s) = -s(s - 216)³ / (s + 27)³.
'''

from collections import namedtuple
from fractions import Fraction
import logging

from tubular.algebra.arith import RatFunc, function_field, parse_rational, to_fraction, PoleAt
from tubular.algebra.poly import MPoly, VariableSpace
from tubular.algebra.tower import TowerSpec
from tubular.util import conf
from tubular.util.exceptions import TubularError
import tubular


logger = logging.getLogger(__name__)


phi_samples = conf.Int(1000, desc='The number of grid steps of a monotonicity scan of Φ.')


class SingularCubic(TubularError, ValueError):
    pass


class ProportionalityFailed(TubularError, ArithmeticError):
    pass


class SingularModel(TubularError, ValueError):
    pass


class InconsistentModel(TubularError, ArithmeticError):
    pass


class ExcludedParameter(TubularError, ValueError):
    pass



CUBIC_SPACE = VariableSpace(['w1', 'w2', 'w3'])


def _parameter(t):
    if t is None:
        return function_field('t').gen('t')
    if isinstance(t, RatFunc):
        return t
    if isinstance(t, str):
        return parse_rational(t)
    return to_fraction(t)


def c_t(t=None, spec=None):
    '''
    The ternary cubic w1³ + w2³ + w3³ + t·w1w2w3 over spec (by default the
    tower ℚ(t) itself), symbolic in t when t is None.
    '''
    spec = spec or TowerSpec.rational(function_field('t'))
    w = [MPoly.variable(CUBIC_SPACE, spec, name) for name in CUBIC_SPACE.names]
    return w[0] ** 3 + w[1] ** 3 + w[2] ** 3 + w[0] * w[1] * w[2] * spec.ground(_parameter(t))


def _is_singular_parameter(t):
    return t is not None and t ** 3 == -27


def cubic_singular_locus(t):
    '''
    The singular points of c_t = 0 in the complex projective plane. For real t
    the cubic is singular only at t = -3, where the singular points are
    (1:ω:ω²) for the cube roots of unity ω.
    '''
    t = _parameter(t)
    if not _is_singular_parameter(t):
        logger.debug('c_%s is smooth since t^3 + 27 != 0', t)
        return []
    spec, (root,), _ = TowerSpec.from_radicals(function_field('t'), [-3], imaginary=True)
    omega = (root - 1) / 2
    cubic = c_t(t, spec)
    partials = [cubic.diff(name) for name in CUBIC_SPACE.names]
    one = spec.one
    points = []
    for w in (one, omega, omega * omega):
        point = (one, w, w * w)
        values = dict(zip(CUBIC_SPACE.names, point))
        if cubic.value_at(values) or any(p.value_at(values) for p in partials):
            raise InconsistentModel('(1:%s:%s) is not a singular point of c_%s' % (point[1], point[2], t))
        points.append(point)
    return points



class WeierstrassModel(namedtuple('WeierstrassModel', 'a1 a2 a3 a4 a6')):
    '''
    The curve y²z + a1·xyz + a3·yz² = x³ + a2·x²z + a4·xz² + a6·z³.
    '''

    def polynomial(self, space=CUBIC_SPACE):
        x, y, z = (MPoly.variable(space, self.a1.spec, name) for name in space.names)
        return (y * y * z + x * y * z * self.a1 + y * z * z * self.a3
                - x ** 3 - x * x * z * self.a2 - x * z * z * self.a4 - z ** 3 * self.a6)


    def tate(self):
        return tate_invariants(self)



WeierstrassReduction = namedtuple('WeierstrassReduction', 'model scale C')


def weierstrass_reduce(t=None):
    '''
    Reduce c_t by the substitution w1* = C·w3, w2* = -w2 + (t/3)·w3,
    w3* = w1 + w2 - (t/3)·w3 with C the real cube root of -(t³ + 27)/81.
    The Weierstrass polynomial composed with the substitution is checked to
    be a nonzero multiple of c_t.

    :return: WeierstrassReduction(model, scale, C)
    :raises SingularCubic: when t³ = -27
    '''
    t = _parameter(t)
    if _is_singular_parameter(t):
        raise SingularCubic('c_%s is singular' % t)
    field = function_field('t')
    spec, _, C = TowerSpec.from_radicals(field, (), cube=-(t ** 3 + 27) / Fraction(81))
    tt = spec.ground(t)
    model = WeierstrassModel(a1=-tt / (3 * C), a2=-tt * tt / (9 * C * C), a3=spec.one, a4=spec.zero,
                             a6=spec.ground(Fraction(-1, 3)))

    w1, w2, w3 = (MPoly.variable(CUBIC_SPACE, spec, name) for name in CUBIC_SPACE.names)
    substitution = dict(w1=w3 * C, w2=-w2 + w3 * (tt / 3), w3=w1 + w2 - w3 * (tt / 3))
    composite = model.polynomial().substitute(substitution)
    cubic = c_t(t, spec)
    scale = composite.coefficient({'w1': 3}) / cubic.coefficient({'w1': 3})
    if not scale or composite != cubic * scale:
        raise ProportionalityFailed('The Weierstrass substitution does not reduce c_%s' % t)
    logger.debug('reduced c_%s to Weierstrass form with scale %s', t, scale)
    return WeierstrassReduction(model, scale, C)



TateInvariants = namedtuple('TateInvariants', 'b2 b4 b6 b8 c4 c6 delta j')


def tate_invariants(m):
    '''
    The quantities b2, b4, b6, b8, c4, c6, Δ and j = c4³/Δ of a Weierstrass
    model, checked against 4·b8 = b2·b6 - b4² and 1728·Δ = c4³ - c6².

    :raises SingularModel: when Δ = 0
    '''
    a1, a2, a3, a4, a6 = m
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if 4 * b8 != b2 * b6 - b4 * b4:
        raise InconsistentModel('4*b8 != b2*b6 - b4^2')
    if not delta:
        raise SingularModel('The Weierstrass model has vanishing discriminant')
    if 1728 * delta != c4 ** 3 - c6 ** 2:
        raise InconsistentModel('1728*delta != c4^3 - c6^2')
    j = c4 ** 3 / delta
    return TateInvariants(b2, b4, b6, b8, c4, c6, delta, j)



def j_closed_form(t):
    return -t ** 3 * (t ** 3 - 216) ** 3 / (t ** 3 + 27) ** 3


def j_of_ct(t=None):
    '''
    The j-invariant of c_t. Symbolic t gives the rational function in ℚ(t),
    cross-checked against the Tate quantities of the Weierstrass model.

    :raises SingularCubic: at t = -3
    '''
    value = _parameter(t)
    if _is_singular_parameter(value):
        raise SingularCubic('c_%s is singular, j is undefined' % value)
    j = j_closed_form(value)
    if t is None:
        tate = tate_invariants(weierstrass_reduce().model)
        if not tate.j.is_ground() or tate.j.ground() != j:
            raise InconsistentModel('The Tate j-invariant %s differs from %s' % (tate.j, j))
    return j



def phi_expression(s):
    return -s * (s - 216) ** 3 / (s + 27) ** 3


def phi_ratfunc():
    '''
    Φ as an element of ℚ(s).
    '''
    return phi_expression(function_field('s').gen('s'))


def phi(s):
    '''
    Φ at a rational s.

    :raises PoleAt: at s = -27
    '''
    s = parse_rational(s) if isinstance(s, str) else to_fraction(s)
    if s == -27:
        raise PoleAt(dict(s=s))
    return phi_expression(s)


def phi_derivative_at_zero():
    return phi_ratfunc().diff('s').value_at(s=0)



MonotoneScan = namedtuple('MonotoneScan', 'monotone samples violation')


def monotone_scan(func, grid, increasing=True):
    '''
    Compare exact values along a grid, recording the first pair that breaks
    strict monotonicity.
    '''
    previous = None
    for x in grid:
        value = func(x)
        if previous is not None:
            px, pv = previous
            if (value <= pv) if increasing else (value >= pv):
                return MonotoneScan(False, len(grid), (px, x))
        previous = x, value
    return MonotoneScan(True, len(grid), None)


def rational_grid(lo, hi, samples):
    lo, hi = to_fraction(lo), to_fraction(hi)
    return [lo + (hi - lo) * Fraction(k, samples) for k in range(samples + 1)]


def phi_monotone_scan(lo=-1, hi=1, samples=None):
    '''
    Whether Φ strictly increases over ``samples`` steps of [lo, hi].
    '''
    samples = tubular.conf['tubular.invariants.jinvariant.phi_samples'] if samples is None else samples
    result = monotone_scan(phi, rational_grid(lo, hi, samples))
    logger.debug('phi over [%s, %s] in %d steps: %s', lo, hi, samples,
                 'increasing' if result.monotone else 'not increasing at %s' % (result.violation,))
    return result



def _check_reciprocity_parameter(t):
    if t in (0, 6, -3):
        raise ExcludedParameter('Reciprocity excludes t in {0, 6, -3}, got t=%s' % t)


def reciprocity_check(t):
    '''
    Whether J(t)·J(-18/t) = 1 for the normalized invariant J = j/1728.

    :raises ExcludedParameter: for t in {0, 6, -3}
    '''
    t = parse_rational(t) if isinstance(t, str) else to_fraction(t)
    _check_reciprocity_parameter(t)
    product = j_closed_form(t) * j_closed_form(-18 / t)
    logger.debug('j(%s)*j(%s) = %s', t, -18 / t, product)
    return product == 1728 ** 2


def reciprocity_identity():
    '''
    Whether Φ(s)·Φ(-5832/s) = 1728² in ℚ(s).
    '''
    s = function_field('s').gen('s')
    f = phi_ratfunc()
    return f * f.subs('s', -5832 / s) == 1728 ** 2


def phi_of_cube_identity():
    '''
    Whether the j-invariant of c_t equals Φ(t³) in ℚ(t).
    '''
    t = function_field('t').gen('t')
    return j_of_ct() == phi_expression(t ** 3)
