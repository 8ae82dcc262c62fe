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
The parameter change χ(t) = -12√t / (t + 1), a bijection from
[1, 17+12√2) onto [-6, -2) and from (17+12√2, ∞) onto (-2, 0).
'''

import logging

from tubular.algebra.arith import function_field, parse_rational, rational_root, to_fraction
from tubular.algebra.tower import TowerElement, TowerSpec, denest_sqrt, tower_eval_real
from tubular.invariants.jinvariant import monotone_scan, rational_grid
from tubular.util import conf
from tubular.util.exceptions import TubularError
import tubular


logger = logging.getLogger(__name__)


samples = conf.Int(100, desc='The number of grid steps of a monotonicity scan of chi.')


BRANCHES = ('lower', 'upper')


class OutOfRange(TubularError, ValueError):
    pass



def _sqrt(value):
    '''
    The nonnegative square root of a rational, exact in a tower when irrational.
    '''
    root = rational_root(value, 2)
    if root is not None:
        return root
    _, (root,), _ = TowerSpec.from_radicals(function_field('t'), [value])
    return root


def _simplify(value):
    if isinstance(value, TowerElement) and value.is_ground() and value.ground().is_ground:
        return value.to_fraction()
    return value


def chi(t):
    '''
    χ(t) for a rational t ≥ 1 or a tower element t ≥ 1 whose square root
    denests, e.g. χ(17 + 12√2) = -2.

    :raises OutOfRange: when t < 1
    '''
    if isinstance(t, TowerElement):
        if tower_eval_real(t - 1).sign < 0:
            raise OutOfRange('chi needs t >= 1, got t=%s' % t)
        root = denest_sqrt(t)
    else:
        t = parse_rational(t) if isinstance(t, str) else to_fraction(t)
        if t < 1:
            raise OutOfRange('chi needs t >= 1, got t=%s' % t)
        root = _sqrt(t)
    return _simplify(-12 * root / (t + 1))


def chi_inverse(tau, branch):
    '''
    The t with χ(t) = τ, for τ in [-6, -2) on the lower branch and in
    (-2, 0) on the upper one. Both solve τ·s² + 12·s + τ = 0 for s = √t with
    the larger root s = (-6 - √(36 - τ²))/τ.

    :raises OutOfRange: when τ is not in the range of the branch
    '''
    tau = parse_rational(tau) if isinstance(tau, str) else to_fraction(tau)
    if branch == 'lower':
        valid = -6 <= tau < -2
    elif branch == 'upper':
        valid = -2 < tau < 0
    else:
        raise ValueError('Unknown branch %r, use one of %s' % (branch, ', '.join(BRANCHES)))
    if not valid:
        raise OutOfRange('tau=%s is not in the range of the %s branch' % (tau, branch))
    s = (-6 - _sqrt(36 - tau * tau)) / tau
    t = _simplify(s * s)
    logger.debug('chi_inverse(%s, %s) = %s', tau, branch, t)
    return t


def chi_monotone_scan(lo=1, hi=100, count=None):
    '''
    Whether χ strictly increases over ``count`` steps of [lo, hi]. Since χ is
    negative this compares the rational values χ² = 144t/(t+1)², which must
    strictly decrease.
    '''
    count = tubular.conf['tubular.invariants.chi.samples'] if count is None else count
    if to_fraction(lo) < 1:
        raise OutOfRange('chi needs t >= 1, got lo=%s' % lo)
    result = monotone_scan(lambda t: 144 * t / (t + 1) ** 2, rational_grid(lo, hi, count), increasing=False)
    logger.debug('chi over [%s, %s] in %d steps: %s', lo, hi, count,
                 'increasing' if result.monotone else 'not increasing at %s' % (result.violation,))
    return result
