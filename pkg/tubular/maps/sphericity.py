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
Exact verification that a polynomial automorphism carries a tube onto a
quadric (or a quadric onto a tube).

With z = x + iy, the residual of a map z* onto Im z0 = Σ H_jk z_j conj(z_k)
is Im z0* - Σ H_jk (Re zj* Re zk* + Im zj* Im zk*) with x0 bound to F(x).
The map is verified when this polynomial in x1..xn, y0..yn is zero.
'''

from collections import namedtuple
import logging

from tubular.algebra.linalg import DimensionMismatch
from tubular.algebra.poly import MPoly, complex_split
from tubular.maps.automorphisms import catalog_entry, NonHolomorphicComponent


logger = logging.getLogger(__name__)



class SphericityResult(namedtuple('SphericityResult', 'verified residual')):
    @property
    def residual_terms(self):
        return len(self.residual.terms)


    def __bool__(self):
        return self.verified



def _hermitian_sum(quadric, re, im, space, spec):
    total = MPoly(space, spec)
    for j, k, h in quadric.entries():
        if j > k:
            continue
        term = re[j] * re[k] + im[j] * im[k]
        total = total + term * (h if j == k else 2 * h)
    return total


def _split(components):
    parts = [complex_split(c) for c in components]
    return [re for re, _ in parts], [im for _, im in parts]


def _check(base, automorphism, quadric):
    if not base.n == automorphism.n == quadric.n:
        raise DimensionMismatch('Base, map and quadric have dimensions %d, %d and %d'
                                % (base.n, automorphism.n, quadric.n))
    for idx, component in enumerate(automorphism.components):
        if not component.is_holomorphic():
            raise NonHolomorphicComponent('Component z%d* depends on conjugate variables' % idx)
    if automorphism.spec != base.spec or quadric.spec != base.spec:
        raise DimensionMismatch('Base, map and quadric must share one tower')


def verify_sphericity(base, automorphism, quadric):
    '''
    Whether the automorphism maps the tube over base into the quadric.

    :return: SphericityResult(verified, residual)
    '''
    _check(base, automorphism, quadric)
    re, im = _split(automorphism.components)
    space, spec = base.space, base.spec
    residual = im[0] - _hermitian_sum(quadric, re, im, space, spec)
    logger.trace('unreduced residual of %s has %d terms', automorphism.tag, len(residual.terms))
    residual = residual.substitute({'x0': base.F})
    result = SphericityResult(residual.is_zero, residual)
    logger.debug('sphericity of %s under %s onto %s: %s with %d residual terms',
                 base.describe(), automorphism.tag, quadric.name,
                 'verified' if result.verified else 'refuted', result.residual_terms)
    return result


def verify_quadric_to_tube(k, n):
    '''
    Whether z0* = -i·z0 + Σ_{j<=k} zj² - Σ_{j>k} zj², z* = √2·z maps
    Q_{k,n-k} onto the tube over x0 = Σ_{j<=k} xj² - Σ_{j>k} xj².

    :return: SphericityResult(verified, residual)
    '''
    if n > 2 * k:
        logger.warning('quadric_to_tube is stated for n <= 2k, checking k=%d, n=%d anyway', k, n)
    entry = catalog_entry('quadric_to_tube', k=k, n=n)
    base, automorphism, quadric = entry
    _check(base, automorphism, quadric)
    re, im = _split(automorphism.components)
    residual = re[0] - base.F.substitute({'x%d' % j: re[j] for j in range(1, n + 1)})

    space, spec = base.space, base.spec
    x = [MPoly.variable(space, spec, 'x%d' % j) for j in range(n + 1)]
    y = [MPoly.variable(space, spec, 'y%d' % j) for j in range(n + 1)]
    residual = residual.substitute({'y0': _hermitian_sum(quadric, x, y, space, spec)})
    result = SphericityResult(residual.is_zero, residual)
    logger.debug('quadric_to_tube k=%d n=%d: %s with %d residual terms',
                 k, n, 'verified' if result.verified else 'refuted', result.residual_terms)
    return result


CATALOG_CHECKS = (
    ('Pt k=5 n=7', 'pt', dict(k=5, n=7)),
    ('Pt k=6 n=8', 'pt', dict(k=6, n=8)),
    ('CalPt k=4 n=7', 'calpt', dict(k=4, n=7)),
    ('CalPt k=4 n=8', 'calpt', dict(k=4, n=8)),
    ('St', 'st', dict()),
    ('M1 n=3', 'phi1', dict(n=3)),
    ('M2 n=3', 'phi2', dict(n=3)),
)


def verify_catalog(checks=CATALOG_CHECKS):
    '''
    Run the sphericity identities of the automorphism catalog with symbolic
    parameters, plus the quadric-to-tube map for (k, n) = (2, 3).

    :return: [(label, SphericityResult)]
    '''
    results = []
    for label, tag, params in checks:
        entry = catalog_entry(tag, **params)
        results.append((label, verify_sphericity(*entry)))
    results.append(('quadric_to_tube k=2 n=3', verify_quadric_to_tube(2, 3)))
    failed = [label for label, result in results if not result.verified]
    if failed:
        logger.warning('catalog identities failing: %s', ', '.join(failed))
    else:
        logger.info('all %d catalog identities verified', len(results))
    return results
