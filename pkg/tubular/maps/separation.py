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

from collections import namedtuple
import logging

from tubular.algebra.linalg import DimensionMismatch
from tubular.geometry.levi import cubic_trace, DegenerateQuadraticPart
from tubular.invariants.quartics import BinaryQuartic, separate_quartics
from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


NON_EQUIVALENT = 'NonEquivalent'
INCONCLUSIVE = 'Inconclusive'


class PreconditionViolated(TubularError, ValueError):
    pass



class SeparationResult(namedtuple('SeparationResult', 'verdict witness detail')):
    '''
    The verdict of a separation with the degree that witnesses it (None when
    inconclusive) and, for quartic separations, the quartic comparison.
    '''

    @property
    def separated(self):
        return self.verdict == NON_EQUIVALENT



def _check_trace_free(base):
    try:
        trace = cubic_trace(base)
    except DegenerateQuadraticPart as exc:
        raise PreconditionViolated(str(exc)) from exc
    if any(trace):
        raise PreconditionViolated('The cubic part of %s is not trace-free' % base.describe())


def graded_separation(base1, base2):
    '''
    Separate two affinely homogeneous bases with trace-free cubic parts by
    their graded pieces. Equivalences between such bases are graded linear
    maps x0 ↦ λ·x0, x ↦ C·x, so a piece vanishing on one side only, or
    GL2(R)-inequivalent binary quartic pieces, separate the bases.

    :return: SeparationResult
    :raises PreconditionViolated: when a cubic part is not trace-free
    '''
    if base1.n != base2.n:
        raise DimensionMismatch('Bases of dimension %d and %d' % (base1.n, base2.n))
    _check_trace_free(base1)
    _check_trace_free(base2)

    top = max(base1.F.degree(base1.variables()), base2.F.degree(base2.variables()))
    for d in range(2, top + 1):
        if base1.part(d).is_zero != base2.part(d).is_zero:
            logger.debug('%s and %s differ in degree %d', base1.describe(), base2.describe(), d)
            return SeparationResult(NON_EQUIVALENT, d, None)

    q1, q2 = base1.part(4), base2.part(4)
    if len(q1.variables()) == 2 and len(q2.variables()) == 2:
        comparison = separate_quartics(BinaryQuartic.from_mpoly(q1), BinaryQuartic.from_mpoly(q2))
        if comparison.separated:
            logger.debug('%s and %s have inequivalent quartic parts', base1.describe(), base2.describe())
            return SeparationResult(NON_EQUIVALENT, 4, comparison)
        return SeparationResult(INCONCLUSIVE, None, comparison)
    return SeparationResult(INCONCLUSIVE, None, None)
