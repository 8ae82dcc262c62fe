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
Pointwise differential data of tube bases: Hessians, their inertia and the
trace of the cubic part against the quadratic part.

The Levi form of the tube over x0 = F(x) at a point is represented by the
Hessian of F there, so Levi signatures are Hessian signatures.
'''

from collections import namedtuple
from fractions import Fraction
from itertools import permutations
import logging
import numbers
import random

from tubular.algebra import linalg
from tubular.algebra.tower import TowerElement, tower_eval_real
from tubular.util import conf
from tubular.util.exceptions import TubularError
import tubular


logger = logging.getLogger(__name__)


sample_points = conf.Int(5, desc='The number of random rational base points at which a signature '
                                 'scan recomputes the Levi signature.')


class DegenerateQuadraticPart(TubularError, ValueError):
    pass



class SignatureReport(namedtuple('SignatureReport', 'positives negatives zeros point params')):
    def __str__(self):
        text = '(%d, %d)' % (self.positives, self.negatives)
        if self.zeros:
            text += ' with %d zero' % self.zeros
        return text


    @property
    def pair(self):
        return self.positives, self.negatives



def hessian(base, point=None):
    '''
    The matrix of second partials of F at a point (x1, ..., xn), the origin
    by default.
    '''
    names = base.variables()
    point = point if point is not None else [0] * base.n
    if len(point) != base.n:
        raise linalg.DimensionMismatch('Expected a point with %d coordinates, got %d' % (base.n, len(point)))
    values = dict(zip(names, point))
    firsts = [base.F.diff(name) for name in names]
    matrix = []
    for i, first in enumerate(firsts):
        row = []
        for j, name in enumerate(names):
            if j < i:
                row.append(matrix[j][i])
            else:
                row.append(first.diff(name).value_at(values))
        matrix.append(row)
    return matrix



def _bindings(spec, t0, bindings):
    bindings = dict(bindings or {})
    if t0 is not None and spec is not None:
        symbols = spec.field.symbols
        bindings['t' if 't' in symbols else symbols[0]] = Fraction(t0)
    return bindings


def _sign(entry):
    if isinstance(entry, numbers.Rational):
        return (entry > 0) - (entry < 0)
    if not entry:
        return 0
    if entry.is_ground() and entry.ground().is_ground:
        value = entry.to_fraction()
        return (value > 0) - (value < 0)
    return tower_eval_real(entry).sign


def signature(m, t0=None, bindings=None, point=None):
    '''
    Inertia of a symmetric matrix by exact congruence diagonalization.

    Entries over a tower with parameters are first bound at ``t0`` (or
    ``bindings``) so zero tests and signs are decided in a constant tower.
    A zero diagonal with a nonzero off-diagonal pair (i, j) is split by the
    congruence x_i = u + v, x_j = u - v.

    :return: SignatureReport
    '''
    n = len(m)
    if any(len(row) != n for row in m):
        raise linalg.DimensionMismatch('Matrix is not square')
    spec = next((entry.spec for row in m for entry in row if isinstance(entry, TowerElement)), None)
    bindings = _bindings(spec, t0, bindings)
    if bindings:
        a = [[entry.specialize(bindings) if isinstance(entry, TowerElement) else entry for entry in row]
             for row in m]
    else:
        a = [list(row) for row in m]
    a = [[entry if isinstance(entry, TowerElement) else Fraction(entry) for entry in row] for row in a]

    positives = negatives = 0
    active = list(range(n))
    while active:
        pivot = next((i for i in active if a[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            logger.trace('splitting hyperbolic pair (%d, %d)', i, j)
            # x_i = u + v, x_j = u - v
            for r in active:
                a[r][i], a[r][j] = a[r][i] + a[r][j], a[r][i] - a[r][j]
            for c in active:
                a[i][c], a[j][c] = a[i][c] + a[j][c], a[i][c] - a[j][c]
            continue

        d = a[pivot][pivot]
        sign = _sign(d)
        if sign > 0:
            positives += 1
        elif sign < 0:
            negatives += 1
        active.remove(pivot)
        for r in active:
            factor = a[r][pivot]
            if not factor:
                continue
            factor = factor / d
            for c in active:
                if a[pivot][c]:
                    a[r][c] = a[r][c] - factor * a[pivot][c]
    zeros = len(active)
    report = SignatureReport(positives, negatives, zeros, point, bindings)
    logger.debug('signature %s at %s', report, bindings or 'symbolic parameters')
    return report



def levi_signature(base, point=None, t0=None, bindings=None):
    '''
    The signature of the Levi form of the tube over base at the point above
    (x1, ..., xn), the origin by default.
    '''
    return signature(hessian(base, point), t0, bindings, point=tuple(point or [0] * base.n))



def random_point(rng, n, spread=5):
    return [Fraction(rng.randint(-spread * 4, spread * 4), rng.randint(1, 4)) for _ in range(n)]


def signature_scan(base, t0=None, count=None, seed=None, bindings=None):
    '''
    The Levi signature at the origin and at ``count`` random rational base
    points.

    :return: (all points agree, [SignatureReport])
    '''
    count = tubular.conf['tubular.geometry.levi.sample_points'] if count is None else count
    seed = tubular.conf['tubular.cli.run.seed'] if seed is None else seed
    rng = random.Random(seed)
    points = [[0] * base.n] + [random_point(rng, base.n) for _ in range(count)]
    reports = [levi_signature(base, point, t0, bindings) for point in points]
    agree = len({report.pair + (report.zeros,) for report in reports}) == 1
    return agree, reports



def gram_matrix(q2, names):
    '''
    The symmetric matrix G with q2 = Σ G_ij x_i x_j.
    '''
    n = len(names)
    zero = q2.spec.zero
    G = [[zero] * n for _ in range(n)]
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            if i == j:
                G[i][i] = q2.coefficient({a: 2})
            elif i < j:
                G[i][j] = G[j][i] = q2.coefficient({a: 1, b: 1}) / 2
    return G


def cubic_tensor(q3, names):
    '''
    The fully symmetric tensor C with q3 = Σ C_ijk x_i x_j x_k, as a sparse
    dict over index triples.
    '''
    index = {name: i for i, name in enumerate(names)}
    space = q3.space
    tensor = {}
    for monom, coeff in q3.terms.items():
        indices = []
        for pos, e in enumerate(monom):
            if e:
                indices.extend([index[space.names[pos]]] * e)
        orderings = set(permutations(indices))
        share = coeff / len(orderings)
        for ordering in orderings:
            tensor[ordering] = share
    return tensor


def cubic_trace(base):
    '''
    The contraction v_i = Σ_jk (G^-1)_jk C_ijk of the cubic part of F against
    the inverse of its quadratic part; the zero vector certifies that the
    cubic part is trace-free.

    :raises DegenerateQuadraticPart: when the quadratic part is degenerate
    '''
    names = base.variables()
    G = gram_matrix(base.part(2), names)
    try:
        inverse = linalg.inverse(G)
    except linalg.SingularMatrix as exc:
        raise DegenerateQuadraticPart('The quadratic part of %s is degenerate' % base.describe()) from exc
    tensor = cubic_tensor(base.part(3), names)
    zero = base.spec.zero
    trace = [zero] * base.n
    for (i, j, k), c in tensor.items():
        g = inverse[j][k]
        if g:
            trace[i] = trace[i] + g * c
    logger.debug('cubic trace of %s has %d nonzero entries', base.describe(), sum(1 for v in trace if v))
    return trace
