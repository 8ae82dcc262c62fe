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
Exact base arithmetic: rationals (:class:`fractions.Fraction`) and fields of
rational functions over ℚ in a few named parameters (``t``, ``tau``, ...).

Polynomials are sympy sparse ring elements (``PolyElement``); a
:class:`RatFunc` pairs two of them in canonical form: no common factor and a
monic denominator, so that equality is a comparison of coefficients.
'''

from fractions import Fraction
from functools import lru_cache
import logging
import numbers
import operator

from sympy import QQ, factorint, integer_nthroot
from sympy.polys.rings import PolyElement, PolyRing

from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


Rational = Fraction


class DivisionByZero(TubularError, ZeroDivisionError):
    pass


class ZeroPolynomial(TubularError, ValueError):
    pass


class FieldMismatch(TubularError, ValueError):
    pass


class PoleAt(TubularError, ZeroDivisionError):
    def __init__(self, bindings):
        super().__init__('Rational function has a pole at %s' % format_bindings(bindings))
        self.bindings = bindings


def format_bindings(bindings):
    return ', '.join('%s=%s' % item for item in sorted(bindings.items()))


def parse_rational(text):
    '''
    Parse '3/2', '-6' or '1.25' into an exact Fraction.
    '''
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError('%r is not a rational number' % (text,)) from exc


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    # sympy QQ elements (gmpy2 mpq or PythonMPQ)
    return Fraction(int(value.numerator), int(value.denominator))


def to_qq(value):
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


def integer_kernel(value):
    '''
    The signed squarefree integer k with value = k·r² for a rational r.
    '''
    value = to_fraction(value)
    if not value:
        raise ZeroPolynomial('The zero rational has no square class')
    kernel = 1
    for prime, multiplicity in factorint(abs(value.numerator * value.denominator)).items():
        if multiplicity % 2:
            kernel *= prime
    return kernel if value > 0 else -kernel


def rational_root(value, exponent):
    '''
    The exact real root of a rational if it is rational, else None.
    '''
    value = to_fraction(value)
    if value < 0:
        if exponent % 2 == 0:
            return None
        root = rational_root(-value, exponent)
        return -root if root is not None else None
    num, num_exact = integer_nthroot(value.numerator, exponent)
    den, den_exact = integer_nthroot(value.denominator, exponent)
    if num_exact and den_exact:
        return Fraction(int(num), int(den))
    return None



class FunctionField(object):
    '''
    The field ℚ(p₁, ..., p_m) of rational functions in the given symbols.
    Instances are interned through :func:`function_field`.
    '''

    def __init__(self, symbols):
        if not symbols:
            raise ValueError('A function field needs at least one parameter symbol')
        self.symbols = tuple(symbols)
        self.ring = PolyRing(self.symbols, QQ)
        self.zero = RatFunc(self, self.ring.zero, self.ring.one)
        self.one = RatFunc(self, self.ring.one, self.ring.one)


    def index(self, symbol):
        try:
            return self.symbols.index(str(symbol))
        except ValueError:
            raise FieldMismatch('No parameter %r in %r' % (symbol, self))


    def gen(self, symbol):
        return RatFunc(self, self.ring.gens[self.index(symbol)], self.ring.one)


    def poly(self, value):
        '''
        A ring element for an int, Fraction or ring element of this field's ring.
        '''
        if isinstance(value, PolyElement):
            if value.ring != self.ring:
                value = value.set_ring(self.ring)
            return value
        return self.ring.ground_new(to_qq(value))


    def from_polys(self, numer, denom=None):
        numer = self.poly(numer)
        denom = self.ring.one if denom is None else self.poly(denom)
        return canonical(self, numer, denom)


    def __call__(self, value):
        if isinstance(value, RatFunc):
            if value.field != self:
                raise FieldMismatch('%r is not an element of %r' % (value, self))
            return value
        return RatFunc(self, self.poly(value), self.ring.one)


    def __eq__(self, other):
        return isinstance(other, FunctionField) and self.symbols == other.symbols


    def __hash__(self):
        return hash(self.symbols)


    def __repr__(self):
        return 'QQ(%s)' % ', '.join(self.symbols)


@lru_cache(maxsize=None)
def function_field(*symbols):
    return FunctionField(symbols)



def canonical(field, numer, denom):
    '''
    Reduce numer/denom to lowest terms with a monic denominator.
    '''
    if not denom:
        raise DivisionByZero('Rational function with zero denominator')
    if not numer:
        return field.zero
    if denom.is_ground:
        lc = denom.LC
        return RatFunc(field, numer.quo_ground(lc) if lc != 1 else numer, field.ring.one)
    _, numer, denom = numer.cofactors(denom)
    lc = denom.LC
    if lc != 1:
        numer = numer.quo_ground(lc)
        denom = denom.quo_ground(lc)
    return RatFunc(field, numer, denom)



class RatFunc(object):
    '''
    An element of a :class:`FunctionField`. Construct through the field (or
    :func:`canonical`), the constructor assumes canonical input.
    '''

    __slots__ = ('field', 'numer', 'denom', '_hash')

    def __init__(self, field, numer, denom):
        self.field = field
        self.numer = numer
        self.denom = denom
        self._hash = None


    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatch('Can\'t combine elements of %r and %r' % (self.field, other.field))
            return other
        if isinstance(other, (numbers.Rational, PolyElement)):
            return self.field(other)
        return NotImplemented


    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.numer:
            return self
        if not self.numer:
            return other
        if self.denom == other.denom:
            return canonical(self.field, self.numer + other.numer, self.denom)
        return canonical(self.field,
                         self.numer * other.denom + other.numer * self.denom,
                         self.denom * other.denom)

    __radd__ = __add__


    def __neg__(self):
        return RatFunc(self.field, -self.numer, self.denom)


    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)


    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)


    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.numer or not other.numer:
            return self.field.zero
        if self.denom.is_ground and other.denom.is_ground:
            return RatFunc(self.field, self.numer * other.numer, self.denom)
        return canonical(self.field, self.numer * other.numer, self.denom * other.denom)

    __rmul__ = __mul__


    def inverse(self):
        if not self.numer:
            raise DivisionByZero('Division by the zero rational function')
        return canonical(self.field, self.denom, self.numer)


    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()


    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()


    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        # powers of a reduced fraction stay reduced
        return RatFunc(self.field, self.numer ** exponent, self.denom ** exponent)


    def __bool__(self):
        return bool(self.numer)


    @property
    def is_zero(self):
        return not self.numer


    @property
    def is_ground(self):
        return self.numer.is_ground and self.denom.is_ground


    def to_fraction(self):
        if not self.is_ground:
            raise ValueError('%s is not a constant' % self)
        return to_fraction(self.numer.LC if self.numer else 0) / to_fraction(self.denom.LC)


    def evaluate(self, bindings):
        '''
        Substitute rationals for some or all parameters.
        '''
        pairs = [(self.field.index(symbol), to_qq(value)) for symbol, value in bindings.items()]
        if not pairs:
            return self
        numer = self.numer.subs(pairs)
        denom = self.denom.subs(pairs)
        if not denom:
            raise PoleAt(bindings)
        return canonical(self.field, numer, denom)


    def value_at(self, **bindings):
        return self.evaluate(bindings).to_fraction()


    def diff(self, symbol):
        index = self.field.index(symbol)
        numer, denom = self.numer, self.denom
        derivative = numer.diff(index) * denom - numer * denom.diff(index)
        return canonical(self.field, derivative, denom * denom)


    def subs(self, symbol, value):
        '''
        Compose with a rational function substituted for one parameter.
        '''
        value = self.field(value)
        return (compose_poly(self.field, self.numer, symbol, value) /
                compose_poly(self.field, self.denom, symbol, value))


    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.field == other.field and self.numer == other.numer and self.denom == other.denom
        if isinstance(other, numbers.Rational):
            return self.is_ground and self.to_fraction() == other
        return NotImplemented


    def __hash__(self):
        if self._hash is None:
            if self.is_ground:
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.field, self.numer, self.denom))
        return self._hash


    def __str__(self):
        if self.denom == 1:
            return render_poly(self.numer)
        return '(%s)/(%s)' % (render_poly(self.numer), render_poly(self.denom))


    def __repr__(self):
        return '<RatFunc %s>' % self



def compose_poly(field, poly, symbol, value):
    index = field.index(symbol)
    total = field.zero
    powers = {0: field.one}
    for monom, coeff in poly.iterterms():
        exponent = monom[index]
        if exponent not in powers:
            powers[exponent] = value ** exponent
        rest = monom[:index] + (0,) + monom[index + 1:]
        term = field.ring.from_dict({rest: coeff})
        total = total + powers[exponent] * field(term)
    return total



def render_monomial(symbols, monom):
    factors = []
    for symbol, exponent in zip(symbols, monom):
        if exponent == 1:
            factors.append(symbol)
        elif exponent > 1:
            factors.append('%s^%d' % (symbol, exponent))
    return '*'.join(factors)


def render_terms(terms):
    '''
    Render (coefficient text, sign, monomial text) triples as a signed sum.
    '''
    out = []
    for coeff, negative, monom in terms:
        if coeff and monom:
            body = '%s*%s' % (coeff, monom)
        else:
            body = coeff or monom or '1'
        if not out:
            out.append('-' + body if negative else body)
        else:
            out.append(('- ' if negative else '+ ') + body)
    return ' '.join(out) if out else '0'


def render_poly(poly):
    '''
    Render a ring element with ^ exponents in graded lexicographic order.
    '''
    symbols = [str(s) for s in poly.ring.symbols]
    terms = []
    for monom, coeff in sorted(poly.iterterms(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0]))):
        coeff = to_fraction(coeff)
        text = '' if abs(coeff) == 1 and any(monom) else str(abs(coeff))
        terms.append((text, coeff < 0, render_monomial(symbols, monom)))
    return render_terms(terms)



def square_class(poly):
    '''
    The canonical representative of poly modulo squares of ℚ(params)*: the
    signed squarefree integer kernel of the content times the monic factors of
    odd multiplicity.
    '''
    if not poly:
        raise ZeroPolynomial('The zero polynomial has no squarefree part')
    ring = poly.ring
    coeff, factors = poly.sqf_list()
    content = to_fraction(coeff)
    odd = ring.one
    for factor, multiplicity in factors:
        if multiplicity % 2:
            lc = factor.LC
            content *= to_fraction(lc)
            odd *= factor.monic()
    return odd.mul_ground(QQ(integer_kernel(content)))


def squarefree_part(poly):
    '''
    s with poly = s·m² for a polynomial m and a rational square, s having no
    repeated factors; s is normalised to its square class representative.
    '''
    return square_class(poly)


def ratfunc_square_class(value):
    '''
    The square class of a nonzero rational function, read off numerator·denominator.
    '''
    if not value:
        raise ZeroPolynomial('The zero function has no square class')
    return square_class(value.numer * value.denom)


def is_cube(value):
    '''
    Whether a nonzero rational function is the cube of another one.
    '''
    if not value:
        return True
    for poly in (value.numer, value.denom):
        coeff, factors = poly.sqf_list()
        content = to_fraction(coeff)
        for factor, multiplicity in factors:
            if multiplicity % 3:
                return False
            content *= to_fraction(factor.LC) ** multiplicity
        if rational_root(content, 3) is None:
            return False
    return True


def ratfunc_arith(a, b, op):
    '''
    Binary field operation by name: add, sub, mul or div.
    '''
    ops = dict(add=operator.add, sub=operator.sub, mul=operator.mul, div=operator.truediv)
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError('Unsupported operation %r, use one of %s' % (op, ', '.join(sorted(ops))))
