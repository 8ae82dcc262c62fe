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
Affine homogeneity of tube bases by absorption.

A base point q is moved to the origin by the translation X ↦ X - q, the
linear terms are absorbed into x0, and then the quadratic terms picked up
by the translation are absorbed template by template: a term pivot·L(x) is
absorbed into the partner variable of the pivot (the base has a term
c·pivot·partner), and unwanted cubic terms are killed by shearing a
variable that carries them. Each step is an :class:`AffineGraphMap` and
the steps compose to a map fixing the base and sending q to the origin.
'''

from collections import namedtuple
import logging
import random

from tubular.algebra import linalg
from tubular.algebra.poly import MPoly, render_monomial
from tubular.geometry.families import NotOnHypersurface
from tubular.geometry.levi import random_point
from tubular.maps.affine import AffineGraphMap, apply_affine
from tubular.util import conf
from tubular.util.exceptions import TubularError
import tubular


logger = logging.getLogger(__name__)


sample_points = conf.Int(20, desc='The number of random rational base points of a homogeneity round trip.')


class UnsupportedTemplate(TubularError, ValueError):
    pass


class AbsorptionFailed(TubularError, ArithmeticError):
    pass



Absorb = namedtuple('Absorb', 'labels')
Kill = namedtuple('Kill', 'name monomial carrier direction')
Shear = namedtuple('Shear', 'target kills observe')
Template = namedtuple('Template', 'pairs priority steps')


TEMPLATES = {
    'GenHyper': Template(
        pairs=(('x4', 'x5'), ('x6', 'x7')),
        priority=('x6', 'x4'),
        steps=(
            Absorb(('L1', 'L2')),
            Shear('x2', (Kill('A', {'x4': 3}, {'x2': 1, 'x4': 2}, 'x4'),
                         Kill('B', {'x6': 3}, {'x2': 1, 'x6': 2}, 'x6')),
                  dict(C={'x4': 1, 'x6': 2}, D={'x4': 2, 'x6': 1})),
            Absorb(('L3', 'L4')),
            Shear('x1', (Kill("D'", {'x4': 2, 'x6': 1}, {'x1': 1, 'x4': 1, 'x6': 1}, 'x4'),
                         Kill("C'", {'x4': 1, 'x6': 2}, {'x1': 1, 'x4': 1, 'x6': 1}, 'x6')),
                  {}),
            Absorb(('L5', 'L6')),
        )),
    'St': Template(
        pairs=(('x4', 'x3'), ('x5', 'x2'), ('x6', 'x1')),
        priority=('x4', 'x5', 'x6'),
        steps=(
            Absorb(('L1', 'L2', 'L3')),
        )),
}



class TraceStep(namedtuple('TraceStep', 'name map data')):
    def __str__(self):
        values = ', '.join('%s = %s' % item for item in self.data.items())
        return '%s: %s' % (self.name, values) if values else self.name



class NormalizationTrace(object):
    '''
    The steps of a normalization in the order they were applied.
    '''

    def __init__(self, n, spec, steps=()):
        self.n = n
        self.spec = spec
        self.steps = list(steps)


    def append(self, step):
        self.steps.append(step)


    def compose(self):
        '''
        The composite of all steps, the first step applied first.
        '''
        total = AffineGraphMap.identity(self.n, self.spec)
        for step in self.steps:
            total = step.map.compose(total)
        return total


    def data(self):
        '''
        All extracted linear forms and constants by label.
        '''
        values = {}
        for step in self.steps:
            values.update(step.data)
        return values


    def __iter__(self):
        return iter(self.steps)


    def __len__(self):
        return len(self.steps)


    def __str__(self):
        return '\n'.join(str(step) for step in self.steps)



def _template(base):
    try:
        return TEMPLATES[base.tag]
    except KeyError:
        raise UnsupportedTemplate('No homogeneity template for %s, supported are %s'
                                  % (base.describe(), ', '.join(sorted(TEMPLATES))))


def _linear(current, rows):
    n = current.n
    return AffineGraphMap(1, [0] * n, 0, rows, [0] * n, current.spec)


def _absorb_linear(current):
    L0 = current.part(1)
    ell = [-L0.coefficient({name: 1}) for name in current.variables()]
    m = AffineGraphMap(1, ell, 0, linalg.identity(current.n, current.spec.one), [0] * current.n, current.spec)
    return m, {'L0': L0}


def _absorb(current, base, template, labels):
    names = current.variables()
    index = {name: i for i, name in enumerate(names)}
    space, spec = current.space, current.spec
    forms = {pivot: MPoly(space, spec) for pivot, _ in template.pairs}

    extra = current.part(2) - base.part(2)
    for monom, coeff in extra.terms.items():
        used = {space.names[idx]: e for idx, e in enumerate(monom) if e}
        pivot = next((p for p in template.priority if p in used), None)
        if pivot is None:
            raise AbsorptionFailed('The quadratic term %s of %s has no absorbing variable'
                                   % (render_monomial(space, monom), base.describe()))
        used[pivot] -= 1
        other, = [name for name, e in used.items() if e]
        forms[pivot] = forms[pivot] + MPoly.variable(space, spec, other, coeff)

    rows = linalg.identity(current.n, spec.one)
    data = {}
    quadratic = base.part(2)
    for (pivot, partner), label in zip(template.pairs, labels):
        c = quadratic.coefficient({pivot: 1, partner: 1})
        if not c:
            raise AbsorptionFailed('%s has no term %s*%s to absorb %s into' % (base.describe(), pivot, partner, label))
        form = forms[pivot]
        data[label] = form
        # partner' = partner + L/c
        row = rows[index[partner]]
        for name in form.variables():
            row[index[name]] = row[index[name]] + form.coefficient({name: 1}) / c
        logger.debug('absorbing %s = %s into %s', label, form, partner)
    return _linear(current, rows), data


def _shear(current, step):
    names = current.variables()
    index = {name: i for i, name in enumerate(names)}
    F = current.F
    data = {name: F.coefficient(monomial) for name, monomial in step.observe.items()}
    rows = linalg.identity(current.n, current.spec.one)
    row = rows[index[step.target]]
    for kill in step.kills:
        value = F.coefficient(kill.monomial)
        carrier = F.coefficient(kill.carrier)
        if not carrier:
            raise AbsorptionFailed('Can\'t kill %s, the coefficient of %s vanishes'
                                   % (kill.name, '*'.join('%s^%d' % item for item in sorted(kill.carrier.items()))))
        data[kill.name] = value
        # target' = target + (value / carrier)·direction
        row[index[kill.direction]] = row[index[kill.direction]] + value / carrier
        logger.debug('shearing %s by %s/%s along %s', step.target, value, carrier, kill.direction)
    return _linear(current, rows), data


def _run(current, trace, name, m, data):
    current = apply_affine(current, m)
    trace.append(TraceStep(name, m, data))
    logger.trace('after %s the graph has %d terms', name, len(current.F.terms))
    return current


def homogenize_at(base, q):
    '''
    An affine map fixing the base and sending q to the origin.

    :param base: a GenHyper or St base
    :param q: a point (x0, x1, ..., xn) of the base
    :return: (AffineGraphMap, NormalizationTrace)
    :raises NotOnHypersurface: if q does not satisfy x0 = F(x) exactly
    :raises UnsupportedTemplate: for bases without an absorption template
    :raises AbsorptionFailed: when a coefficient absorption divides by vanishes
    '''
    template = _template(base)
    spec = base.spec
    if len(q) != base.n + 1:
        raise linalg.DimensionMismatch('Expected a point with %d coordinates, got %d' % (base.n + 1, len(q)))
    q = tuple(spec.ground(v) for v in q)
    if not base.contains(q):
        raise NotOnHypersurface('%s is not on %s' % (', '.join(map(str, q)), base.describe()))

    trace = NormalizationTrace(base.n, spec)
    if not any(q):
        return AffineGraphMap.identity(base.n, spec), trace

    current = _run(base, trace, 'translate', AffineGraphMap.translation(q, spec), {'q': q})
    current = _run(current, trace, 'absorb linear terms', *_absorb_linear(current))
    for step in template.steps:
        if isinstance(step, Absorb):
            m, data = _absorb(current, base, template, step.labels)
            current = _run(current, trace, 'absorb ' + ', '.join(step.labels), m, data)
        else:
            m, data = _shear(current, step)
            current = _run(current, trace, 'shear ' + step.target, m, data)

    if current.F != base.F:
        remainder = current.F - base.F
        raise AbsorptionFailed('Normalizing %s at q left %d terms, e.g. %s'
                               % (base.describe(), len(remainder.terms), remainder))
    m = trace.compose()
    logger.debug('homogenized %s in %d steps', base.describe(), len(trace))
    return m, trace


RoundTrip = namedtuple('RoundTrip', 'point fixed origin')


def homogeneity_round_trip(base, count=None, seed=None):
    '''
    Homogenize at random rational base points and check that each map
    fixes the base term for term and sends its point to the origin.

    :return: (all passed, [RoundTrip])
    '''
    count = tubular.conf['tubular.maps.homogeneity.sample_points'] if count is None else count
    seed = tubular.conf['tubular.cli.run.seed'] if seed is None else seed
    rng = random.Random(seed)
    origin = (base.spec.zero,) * (base.n + 1)
    results = []
    for _ in range(count):
        q = base.point_over(random_point(rng, base.n))
        m, _ = homogenize_at(base, q)
        fixed = apply_affine(base, m) == base
        results.append(RoundTrip(q, fixed, m.apply_point(q) == origin))
    passed = all(r.fixed and r.origin for r in results)
    logger.debug('round trip of %s over %d points: %s', base.describe(), count, 'passed' if passed else 'failed')
    return passed, results
