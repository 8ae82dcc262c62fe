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
The Levi nondegenerate quadrics Im z0 = Σ H_jk z_j conj(z_k): the standard
forms of signature (k, n-k) and the paired form of signature (3, 3).
'''

from fractions import Fraction
import logging

from tubular.algebra import linalg
from tubular.algebra.linalg import SingularMatrix
from tubular.geometry.levi import signature


logger = logging.getLogger(__name__)


class HermitianQuadric(object):
    '''
    The quadric Im z0 = Σ H_jk z_j conj(z_k) for a real symmetric,
    nondegenerate n×n matrix H over a tower.
    '''

    def __init__(self, spec, H, name=None):
        n = len(H)
        H = [[spec.ground(entry) for entry in row] for row in H]
        if any(len(row) != n for row in H):
            raise linalg.DimensionMismatch('H must be square')
        if not linalg.is_symmetric(H):
            raise ValueError('H must be symmetric')
        if not linalg.determinant(H):
            raise SingularMatrix('The Hermitian form of %s is degenerate' % (name or 'the quadric'))
        self.spec = spec
        self.n = n
        self.H = H
        self.name = name or 'Q'


    @classmethod
    def standard(cls, spec, k, n):
        '''
        Q_{k,n-k}: H = diag(1, ..., 1, -1, ..., -1) with k positive entries.
        '''
        if not 0 <= k <= n:
            raise ValueError('Need 0 <= k <= n, got k=%s, n=%s' % (k, n))
        H = [[(1 if j < k else -1) if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(spec, H, 'Q_{%d,%d}' % (k, n - k))


    @classmethod
    def paired_33(cls, spec):
        '''
        The quadric Im z0 = 1/2 Re(z1 conj(z6) + z2 conj(z5) + z3 conj(z4)).
        '''
        quarter = Fraction(1, 4)
        H = [[quarter if i + j == 5 else 0 for j in range(6)] for i in range(6)]
        return cls(spec, H, "Q'_{3,3}")


    def entries(self):
        '''
        The nonzero entries as (j, k, H_jk) with 1-based indices.
        '''
        for i, row in enumerate(self.H):
            for j, entry in enumerate(row):
                if entry:
                    yield i + 1, j + 1, entry


    def signature(self):
        report = signature(self.H)
        return report.positives, report.negatives


    def __repr__(self):
        return '<HermitianQuadric %s n=%d>' % (self.name, self.n)
