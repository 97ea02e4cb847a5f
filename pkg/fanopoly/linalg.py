# Copyright (c) 2026 Fanopoly Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact rational vector helpers.

Vectors are tuples of ``sympy.Rational``. Small dense systems (the ones met
while intersecting facet hyperplanes) are reduced here by Gauss-Jordan
elimination; ``sympy.Matrix`` is used for the one-off root system algebra.
"""

import fractions
import math
import numbers

import sympy

from fanopoly import exceptions

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)


def rational(value):
    """Coerces `value` to an exact ``sympy.Rational``.

    Accepts integers, ``fractions.Fraction``, sympy rationals and strings
    such as "3", "-2/7" or "0.25". Floats are taken at their exact binary
    value.
    """
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, bool):
        raise exceptions.InvalidRational(value)
    if isinstance(value, numbers.Integral):
        return sympy.Integer(int(value))
    if isinstance(value, float) and not math.isfinite(value):
        raise exceptions.InvalidRational(value)
    try:
        frac = fractions.Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise exceptions.InvalidRational(value)
    return sympy.Rational(frac.numerator, frac.denominator)


def vector(values, rank=None):
    result = tuple(rational(v) for v in values)
    if rank is not None and len(result) != rank:
        raise exceptions.DimensionMismatch(result, rank)
    return result


def zero(rank):
    return (ZERO,) * rank


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), ZERO)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(t, a):
    return tuple(t * x for x in a)


def matvec(rows, v):
    return tuple(dot(row, v) for row in rows)


def is_zero(v):
    return all(x == 0 for x in v)


def is_integral(v):
    return all(rational(x).q == 1 for x in v)


def is_primitive(u):
    """True when `u` is a nonzero integer vector with coprime entries."""
    if not is_integral(u) or is_zero(u):
        return False
    g = 0
    for x in u:
        g = math.gcd(g, int(x))
    return g == 1


def _reduce(rows):
    """Returns the reduced row echelon form of `rows` and its pivots."""
    m = [list(row) for row in rows]
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    rows = list(rows)
    if not rows:
        return 0
    return len(_reduce(rows)[1])


def affine_rank(points):
    """Dimension of the affine hull of `points` (-1 for no points)."""
    points = list(points)
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def solve(rows, rhs):
    """Solves the square system rows * x = rhs.

    Returns None when the system is singular.
    """
    n = len(rows)
    augmented = [tuple(row) + (b,) for row, b in zip(rows, rhs)]
    reduced, pivots = _reduce(augmented)
    if pivots != list(range(n)):
        return None
    return tuple(reduced[i][n] for i in range(n))


def determinant(rows):
    return sympy.Matrix(rows).det()


def nullspace(rows, ncols):
    """Returns a basis of {x : rows * x = 0} in ``ncols`` unknowns."""
    rows = list(rows)
    reduced, pivots = _reduce(rows) if rows else ([], [])
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for i, c in enumerate(pivots):
            v[c] = -reduced[i][free]
        basis.append(tuple(v))
    return basis
