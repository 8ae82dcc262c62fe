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
Exact dense linear algebra over any field whose elements support + - * /
and truth testing (Fraction, RatFunc, TowerElement). Matrices are lists of
rows.
'''

import logging

from tubular.util.exceptions import TubularError


logger = logging.getLogger(__name__)


class SingularMatrix(TubularError, ArithmeticError):
    pass


class DimensionMismatch(TubularError, ValueError):
    pass


def zero_like(entry):
    return entry * 0


def one_like(entry):
    return entry * 0 + 1


def identity(n, like):
    zero, one = zero_like(like), one_like(like)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(matrix):
    return [list(row) for row in zip(*matrix)]


def mat_mul(a, b):
    if len(a[0]) != len(b):
        raise DimensionMismatch('Can\'t multiply %dx%d by %dx%d' % (len(a), len(a[0]), len(b), len(b[0])))
    columns = transpose(b)
    return [[dot(row, column) for column in columns] for row in a]


def mat_vec(matrix, vector):
    if len(matrix[0]) != len(vector):
        raise DimensionMismatch('Can\'t apply a %d column matrix to a vector of length %d'
                                % (len(matrix[0]), len(vector)))
    return [dot(row, vector) for row in matrix]


def dot(u, v):
    total = None
    for a, b in zip(u, v):
        if not a or not b:
            continue
        total = a * b if total is None else total + a * b
    return total if total is not None else zero_like(u[0])


def _check_square(matrix):
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatch('Matrix is not square')
    return n


def _eliminate(matrix, augmented):
    '''
    Gauss-Jordan elimination of matrix carrying the augmented columns along,
    returns the determinant, or raises SingularMatrix.
    '''
    n = _check_square(matrix)
    rows = [list(row) + list(extra) for row, extra in zip(matrix, augmented)]
    det = one_like(matrix[0][0])
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrix('Matrix is singular (no pivot in column %d)' % col)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pivot_value = rows[col][col]
        det = det * pivot_value
        inv = 1 / pivot_value
        rows[col] = [entry * inv if entry else entry for entry in rows[col]]
        for r in range(n):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [entry - factor * p if p else entry for entry, p in zip(rows[r], rows[col])]
    return det, [row[n:] for row in rows]


def _fraction_free(matrix, augmented):
    '''
    Fraction-free (Bareiss) reduction of matrix to upper triangular form,
    carrying the augmented columns along. Every division is exact by the
    previous pivot, so entries stay polynomial in the input entries.

    :return: (sign of the row permutation, reduced rows)
    '''
    n = _check_square(matrix)
    rows = [list(row) + list(extra) for row, extra in zip(matrix, augmented)]
    width = len(rows[0]) if rows else 0
    sign = 1
    previous = one_like(matrix[0][0])
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot is None:
            raise SingularMatrix('Matrix is singular (no pivot in column %d)' % k)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        p, top = rows[k][k], rows[k]
        for i in range(k + 1, n):
            row, factor = rows[i], rows[i][k]
            rows[i] = row[:k + 1] + [(p * row[j] - factor * top[j]) / previous for j in range(k + 1, width)]
            rows[i][k] = zero_like(p)
        previous = p
    return sign, rows


def solve(matrix, rhs):
    '''
    The solution x of matrix·x = rhs by fraction-free elimination and back
    substitution.
    '''
    n = _check_square(matrix)
    if len(rhs) != n:
        raise DimensionMismatch('Can\'t solve a %dx%d system with %d right hand sides' % (n, n, len(rhs)))
    _, rows = _fraction_free(matrix, [[value] for value in rhs])
    solution = [None] * n
    for i in reversed(range(n)):
        total = rows[i][n]
        for j in range(i + 1, n):
            if rows[i][j]:
                total = total - rows[i][j] * solution[j]
        solution[i] = total / rows[i][i]
    return solution


def inverse(matrix):
    n = _check_square(matrix)
    _, inv = _eliminate(matrix, identity(n, matrix[0][0]))
    return inv


def determinant(matrix):
    '''
    The determinant, the last pivot of fraction-free elimination.
    '''
    try:
        sign, rows = _fraction_free(matrix, [[] for _ in matrix])
    except SingularMatrix:
        return zero_like(matrix[0][0])
    det = rows[-1][-1]
    return det if sign > 0 else -det


def is_symmetric(matrix):
    n = _check_square(matrix)
    return all(matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n))
