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

from fractions import Fraction

from tubular.algebra.poly import MPoly


def random_fraction(rng, spread=9, nonzero=False):
    while True:
        value = Fraction(rng.randint(-spread, spread), rng.randint(1, 4))
        if value or not nonzero:
            return value


def random_ratfunc(rng, field, degree=2):
    '''
    A random element of a one parameter field with a monic denominator of
    degree at most ``degree``.
    '''
    t = field.gen(field.symbols[0])
    numer = sum((random_fraction(rng) * t ** e for e in range(degree + 1)), field.zero)
    denom = t ** rng.randint(0, degree) + rng.randint(1, 5)
    return numer / denom


def random_element(rng, spec, nonzero=False):
    '''
    A random element of a constant tower.
    '''
    while True:
        total = spec.zero
        for monom in spec.basis():
            if rng.random() < .6:
                element = spec.one
                for idx, e in enumerate(monom):
                    if e:
                        element = element * spec.gen(idx) ** e
                total = total + element * random_fraction(rng)
        if total or not nonzero:
            return total


def random_mpoly(rng, space, spec, terms=4, degree=3, names=None):
    names = names or space.names
    total = MPoly(space, spec)
    for _ in range(terms):
        term = MPoly.constant(space, spec, random_element(rng, spec))
        for _ in range(rng.randint(0, degree)):
            term = term * MPoly.variable(space, spec, rng.choice(names))
        total = total + term
    return total
