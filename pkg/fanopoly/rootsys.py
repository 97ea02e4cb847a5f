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

"""Exact root system combinatorics.

Vectors of the weight space are stored in fixed coordinates together with
the Gram matrix ``G`` of the invariant inner product. Vectors of the dual
space (facet normals, one-parameter subgroups) are stored in the dual
coordinates, so that the natural pairing of a root with a normal is a plain
dot product.
"""

import collections
import logging
import re

import sympy

from fanopoly import conf
from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg

LOG = logging.getLogger(__name__)

CONF = conf.CONF

_FACTOR_RE = re.compile(r'^([A-Z])(\d+)$')

_HALF = sympy.Rational(1, 2)

# Minimal rank accepted for each factor type.
_MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 3, 'G': 2, 'T': 1}


def _type_a(r):
    b = sympy.zeros(r, r)
    for i in range(r):
        b[i, i] = 2
        if i + 1 < r:
            b[i, i + 1] = b[i + 1, i] = -1
    return b


def _type_b(r):
    b = _type_a(r)
    b[r - 1, r - 1] = 1
    return b


def _type_c(r):
    b = sympy.zeros(r, r)
    for i in range(r - 1):
        b[i, i] = 1
        if i + 1 < r - 1:
            b[i, i + 1] = b[i + 1, i] = -_HALF
    b[r - 1, r - 1] = 2
    b[r - 2, r - 1] = b[r - 1, r - 2] = -1
    return b


def _type_d(r):
    b = sympy.zeros(r, r)
    for i in range(r):
        b[i, i] = 2
    for i in range(r - 2):
        b[i, i + 1] = b[i + 1, i] = -1
    b[r - 3, r - 1] = b[r - 1, r - 3] = -1
    return b


def _type_g(r):
    return sympy.Matrix([[2, -1], [-1, sympy.Rational(2, 3)]])


_BUILDERS = {
    'A': _type_a,
    'B': _type_b,
    'C': _type_c,
    'D': _type_d,
    'G': _type_g,
}


def parse_label(label):
    """Splits a type label into (letter, rank) factors."""
    if not label or not isinstance(label, str):
        raise exceptions.UnknownRootSystemType(label)
    factors = []
    for factor in label.split('x'):
        match = _FACTOR_RE.match(factor)
        if not match or match.group(1) not in _MIN_RANK:
            raise exceptions.UnknownRootSystemType(label)
        letter, r = match.group(1), int(match.group(2))
        if r < 1:
            raise exceptions.InvalidRank(label, 'rank 0')
        if letter == 'G' and r != 2:
            raise exceptions.InvalidRank(label, 'only G2 exists')
        if r < _MIN_RANK[letter]:
            raise exceptions.InvalidRank(
                label, '%s%d needs rank >= %d' % (letter, r,
                                                  _MIN_RANK[letter]))
        factors.append((letter, r))
    return factors


class RootSystem(object):
    """Roots, weights and Weyl group of a reductive Lie algebra.

    Instances are immutable once built; the Weyl group is generated on
    first access.
    """

    def __init__(self, type_label, convention, simple_roots, gram,
                 gram_scale=1):
        self.type_label = type_label
        self.convention = convention
        self.gram_scale = linalg.rational(gram_scale)
        self.gram = sympy.ImmutableMatrix(gram)
        self.rank = self.gram.rows
        self._rows = [tuple(self.gram.row(i)) for i in range(self.rank)]
        self.simple_roots = tuple(linalg.vector(a, self.rank)
                                  for a in simple_roots)
        self.semisimple_rank = len(self.simple_roots)

        n = self.semisimple_rank
        self.root_gram = sympy.ImmutableMatrix(
            n, n, lambda i, j: self.inner(self.simple_roots[i],
                                          self.simple_roots[j]))
        self.cartan = sympy.ImmutableMatrix(
            n, n, lambda i, j: 2 * self.root_gram[i, j] /
            self.root_gram[i, i])

        self.positive_root_coefficients = self._close_positive_roots()
        self.positive_roots = tuple(
            self.combine(k) for k in self.positive_root_coefficients)
        self.two_rho = linalg.zero(self.rank)
        for alpha in self.positive_roots:
            self.two_rho = linalg.add(self.two_rho, alpha)

        if n:
            inv_cartan = self.cartan.inv()
            self.fundamental_weights = tuple(
                self.combine([inv_cartan[k, j] for k in range(n)])
                for j in range(n))
        else:
            self.fundamental_weights = ()

        # Dual images G * alpha_i: <alpha_i, y> = dual_simple_roots[i] . y
        self.dual_simple_roots = tuple(
            linalg.matvec(self._gram_rows(), a) for a in self.simple_roots)
        if n:
            null = sympy.Matrix(
                [list(a) for a in self.dual_simple_roots]).nullspace()
        else:
            null = [sympy.eye(self.rank)[:, i] for i in range(self.rank)]
        self.center_basis = tuple(linalg.vector(list(v)) for v in null)

        self._weyl_elements = None

    def __repr__(self):
        return "<RootSystem %s (%s), rank %d>" % (
            self.type_label, self.convention, self.rank)

    @property
    def is_semisimple(self):
        return not self.center_basis

    def _gram_rows(self):
        return self._rows

    def inner(self, a, b):
        """The invariant inner product of two weight-space vectors."""
        return linalg.dot(a, linalg.matvec(self._gram_rows(), b))

    def norm2(self, a):
        return self.inner(a, a)

    def combine(self, coefficients):
        """Returns sum_i coefficients[i] * alpha_i."""
        result = linalg.zero(self.rank)
        for k, alpha in zip(coefficients, self.simple_roots):
            result = linalg.add(result, linalg.scale(linalg.rational(k),
                                                     alpha))
        return result

    def to_dual(self, y):
        """Identifies a weight-space vector with a dual vector via G."""
        return linalg.matvec(self._gram_rows(), y)

    def to_weight(self, u):
        """Inverse of :meth:`to_dual`."""
        return tuple(self.gram.LUsolve(sympy.Matrix(u)))

    def _close_positive_roots(self):
        n = self.semisimple_rank
        if not n:
            return ()
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            next_layer = []
            for k in layer:
                for i in range(n):
                    p = 0
                    down = list(k)
                    while True:
                        down[i] -= 1
                        if tuple(down) not in roots:
                            break
                        p += 1
                    q = p - sum(k[j] * self.cartan[i, j] for j in range(n))
                    if q > 0:
                        up = list(k)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            next_layer.append(up)
            layer = next_layer
        return tuple(sorted(roots, key=lambda k: (sum(k), k)))

    def reflection(self, i):
        """Matrix of the simple reflection s_i acting on the weight space."""
        alpha = sympy.Matrix(self.simple_roots[i])
        dual = sympy.Matrix(self.dual_simple_roots[i])
        return sympy.ImmutableMatrix(
            sympy.eye(self.rank) -
            (2 / self.root_gram[i, i]) * alpha * dual.T)

    def reflect(self, i, v, dual=False):
        """Applies s_i to `v`; `dual` selects the contragredient action."""
        coefficient = 2 / self.root_gram[i, i]
        if dual:
            pairing = linalg.dot(self.simple_roots[i], v)
            return linalg.sub(v, linalg.scale(coefficient * pairing,
                                              self.dual_simple_roots[i]))
        pairing = linalg.dot(self.dual_simple_roots[i], v)
        return linalg.sub(v, linalg.scale(coefficient * pairing,
                                          self.simple_roots[i]))

    @property
    def weyl_elements(self):
        if self._weyl_elements is None:
            self._weyl_elements = self._generate_weyl_group()
        return self._weyl_elements

    def _generate_weyl_group(self):
        cap = CONF.weyl_group_cap
        identity = sympy.ImmutableMatrix(sympy.eye(self.rank))
        generators = [self.reflection(i)
                      for i in range(self.semisimple_rank)]
        seen = {identity}
        queue = collections.deque([identity])
        while queue:
            w = queue.popleft()
            for s in generators:
                ws = sympy.ImmutableMatrix(s * w)
                if ws not in seen:
                    seen.add(ws)
                    if len(seen) > cap:
                        raise exceptions.WeylGroupTooLarge(
                            self.type_label, cap)
                    queue.append(ws)
        LOG.debug("Weyl group of %s has %d elements",
                  self.type_label, len(seen))
        return tuple(sorted(seen, key=lambda m: tuple(m)))


def build_root_system(label, convention=None, gram_scale=1):
    """Builds the root system for a type label such as "A2" or "so4".

    :param label: product of factors A<r>, B<r>, C<r>, D<r>, G2, T<n>
        joined with 'x', or the alias "so4"
    :param convention: "root" (simple roots are the unit vectors) or "so4"
        (A1xA1 with simple roots (1, 1) and (1, -1))
    :param gram_scale: positive rational multiplying the inner product
    """
    if isinstance(label, str) and label.lower() in constants.GROUP_ALIASES:
        label, alias_convention = constants.GROUP_ALIASES[label.lower()]
        convention = convention or alias_convention
    convention = convention or constants.CONVENTION_ROOT
    if convention not in constants.CONVENTIONS:
        raise exceptions.UnknownConvention(label, convention)

    factors = parse_label(label)
    scale = linalg.rational(gram_scale)
    if scale <= 0:
        raise exceptions.InvalidParameter('gram_scale', gram_scale)

    if convention == constants.CONVENTION_SO4:
        if factors != [('A', 1), ('A', 1)]:
            raise exceptions.UnknownConvention(label, convention)
        simple_roots = [(1, 1), (1, -1)]
        gram = sympy.eye(2) * scale
        return RootSystem(label, convention, simple_roots, gram,
                          gram_scale=scale)

    blocks = []
    root_slots = []
    offset = 0
    for letter, r in factors:
        if letter == 'T':
            blocks.append(sympy.eye(r))
        else:
            blocks.append(_BUILDERS[letter](r))
            root_slots.extend(range(offset, offset + r))
        offset += r
    gram = sympy.diag(*blocks) * scale
    simple_roots = [tuple(int(i == slot) for i in range(offset))
                    for slot in root_slots]
    return RootSystem(label, convention, simple_roots, gram,
                      gram_scale=scale)


def inverse_cartan(rs):
    """Returns the inverse Cartan matrix, checking it is nonnegative."""
    if not rs.semisimple_rank:
        return sympy.ImmutableMatrix(0, 0, [])
    inverse = rs.cartan.inv()
    for entry in inverse:
        if entry < 0:
            raise exceptions.NegativeInverseCartanEntry(rs.type_label, entry)
    return sympy.ImmutableMatrix(inverse)


def fundamental_weight_gram(rs):
    """Returns the matrix of <w_i, w_j>, checking it is nonnegative."""
    n = rs.semisimple_rank
    weights = rs.fundamental_weights
    result = sympy.ImmutableMatrix(
        n, n, lambda i, j: rs.inner(weights[i], weights[j]))
    for entry in result:
        if entry < 0:
            raise exceptions.NegativeInverseCartanEntry(rs.type_label, entry)
    return result


def rho_pairing(rs, u):
    """Returns rho(u) = 1/2 sum over positive roots of |alpha(u)|."""
    u = linalg.vector(u, rs.rank)
    total = sum((abs(linalg.dot(alpha, u)) for alpha in rs.positive_roots),
                linalg.ZERO)
    return total * _HALF


def weyl_orbit(rs, v, dual=False):
    """Returns the Weyl orbit of `v`, sorted lexicographically."""
    v = linalg.vector(v, rs.rank)
    seen = {v}
    queue = collections.deque([v])
    while queue:
        w = queue.popleft()
        for i in range(rs.semisimple_rank):
            image = rs.reflect(i, w, dual=dual)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen))


def chamber_position(rs, v, dual=False):
    v = linalg.vector(v, rs.rank)
    if dual:
        pairings = [linalg.dot(a, v) for a in rs.simple_roots]
    else:
        pairings = [linalg.dot(a, v) for a in rs.dual_simple_roots]
    if any(p < 0 for p in pairings):
        return constants.CHAMBER_OUTSIDE
    if any(p == 0 for p in pairings):
        return constants.CHAMBER_WALL
    return constants.CHAMBER_INTERIOR
