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

"""The average bound behind the finiteness cutoff omega(n).

For a polytope of label I in complex dimension n, t = 1 + 1/I and

    bracket(I, n) = [n / (n + 1) + t (t^n - 1)] / t^n.

No KE metric exists once the bracket drops below 1; omega(n) is the label
where that happens.
"""

import logging
import numbers

import sympy

from fanopoly import conf
from fanopoly import exceptions
from fanopoly import linalg

LOG = logging.getLogger(__name__)

CONF = conf.CONF

GRID_RATIO = sympy.Rational(5, 4)
GRID_MIN = sympy.Integer(1)
GRID_MAX = sympy.Integer(1000)


class BracketEvaluation(object):
    def __init__(self, label, n, t, value):
        self.label = label
        self.n = n
        self.t = t
        self.value = value

    def __repr__(self):
        return "<BracketEvaluation I=%s n=%d value~%.6f>" % (
            self.label, self.n, float(self.value))


class OmegaInterval(object):
    """Enclosing interval [lo, hi] of the bracket root, in label units.

    Labels are I = 2 rho(u); :attr:`rho_units` gives the same interval for
    rho(u) = I / 2.
    """

    def __init__(self, n, lo, hi):
        self.n = n
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return "<OmegaInterval n=%d [%.10f, %.10f]>" % (
            self.n, float(self.lo), float(self.hi))

    @property
    def rho_units(self):
        return (self.lo / 2, self.hi / 2)

    @property
    def rounded_rho_units(self):
        """The rho-unit threshold rounded up to two decimals."""
        return sympy.ceiling(self.hi * 50) / 100

    def to_dict(self):
        lo, hi = self.rho_units
        return {
            'n': self.n,
            'label_interval': [str(self.lo), str(self.hi)],
            'rho_interval': [str(lo), str(hi)],
            'omega_rounded': str(self.rounded_rho_units),
            'approx': {
                'label': float((self.lo + self.hi) / 2),
                'rho': float((lo + hi) / 2),
            },
        }


def _check_dimension(n):
    if (not isinstance(n, numbers.Integral) or isinstance(n, bool) or
            n < 1):
        raise exceptions.InvalidParameter('n', n)
    return int(n)


def evaluate_bracket(label, n):
    n = _check_dimension(n)
    label = linalg.rational(label)
    if label <= 0:
        raise exceptions.InvalidParameter("I", label)
    t = 1 + 1 / label
    tn = t ** n
    value = (sympy.Rational(n, n + 1) + t * (tn - 1)) / tn
    return BracketEvaluation(label, n, t, value)


def label_bracket(label, n):
    """Exact bracket value; below 1 no KE metric exists."""
    return evaluate_bracket(label, n).value


def _grid():
    points = []
    point = GRID_MIN
    while point <= GRID_MAX:
        points.append(point)
        point = point * GRID_RATIO
    if points[-1] != GRID_MAX:
        points.append(GRID_MAX)
    return points


def omega_generic(n, tol=None):
    """Encloses the label above which the bracket is below 1.

    The sign of bracket - 1 must change exactly once on a geometric grid
    over [1, 1000] and the bracket must decrease strictly past the root;
    the root is then bisected at exact rational midpoints.

    :returns: :class:`OmegaInterval` of width at most `tol`
    """
    n = _check_dimension(n)
    tol = linalg.rational(CONF.omega_tolerance if tol is None else tol)
    if tol <= 0:
        raise exceptions.InvalidParameter('tol', tol)

    def f(label):
        return label_bracket(label, n) - 1

    grid = _grid()
    values = [f(label) for label in grid]
    changes = [k for k in range(len(grid) - 1)
               if values[k] > 0 and values[k + 1] <= 0]
    if not changes:
        raise exceptions.NoSignChange(n)
    if len(changes) > 1 or any(values[k] <= 0 and values[k + 1] > 0
                               for k in range(len(grid) - 1)):
        raise exceptions.NotMonotone(n, grid[changes[-1]])
    k = changes[0]
    tail = values[k:]
    if any(b >= a for a, b in zip(tail, tail[1:])):
        raise exceptions.NotMonotone(n, grid[k])

    lo, hi = grid[k], grid[k + 1]
    steps = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
        steps += 1
    LOG.debug("omega(%d) enclosed in %d bisection steps", n, steps)
    return OmegaInterval(n, lo, hi)
