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

"""Weyl-invariant Q-Fano polytopes given by their outer facet normals.

A polytope is P = {y : u(y) <= 1 + 2 rho(u)} where u runs over the Weyl
orbits of the outer normals. Normals live in the dual coordinates of
:mod:`fanopoly.rootsys`, points of P in the weight coordinates.
"""

import itertools
import logging

from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg
from fanopoly import rootsys

LOG = logging.getLogger(__name__)


class FacetSpec(object):
    """A facet normal `u` with its anticanonical support value."""

    def __init__(self, u, lam):
        self.u = tuple(u)
        self.lam = lam

    def __repr__(self):
        return "<FacetSpec u=%s lambda=%s>" % (list(self.u), self.lam)

    def __eq__(self, other):
        if not isinstance(other, FacetSpec):
            return NotImplemented
        return (self.u, self.lam) == (other.u, other.lam)

    def __hash__(self):
        return hash((self.u, self.lam))

    def contains(self, y):
        return linalg.dot(self.u, y) <= self.lam

    def is_tight(self, y):
        return linalg.dot(self.u, y) == self.lam


class PositivePart(object):
    """Vertices and facets of P+ = P intersected with the closed chamber.

    `inequalities` holds (normal, rhs) pairs, wall inequalities being
    -<alpha_i, y> <= 0; `outer_facets` are the FacetSpecs supporting a
    facet of P+ and `wall_facets` the indices i whose wall does.
    """

    def __init__(self, vertices, inequalities, outer_facets, wall_facets):
        self.vertices = vertices
        self.inequalities = inequalities
        self.outer_facets = outer_facets
        self.wall_facets = wall_facets

    def __repr__(self):
        return "<PositivePart vertices=%s walls=%s>" % (
            [list(v) for v in self.vertices], list(self.wall_facets))


class LabelResult(object):
    def __init__(self, value, witness, t0, exit_parameters):
        self.value = value
        self.witness = witness
        self.t0 = t0
        self.exit_parameters = exit_parameters

    def __repr__(self):
        return "<LabelResult I=%s t0=%s witness=%s>" % (
            self.value, self.t0, self.witness)


class GroupPolytope(object):
    """An immutable, validated group polytope."""

    def __init__(self, rs, outer_normals, full_facets, vertices,
                 positive_part):
        self.rs = rs
        self.outer_normals = outer_normals
        self.full_facets = full_facets
        self.vertices = vertices
        self.positive_part = positive_part

    def __repr__(self):
        return "<GroupPolytope %s normals=%s>" % (
            self.rs.type_label, [list(f.u) for f in self.outer_normals])

    @property
    def canonical_key(self):
        return tuple(f.u for f in self.outer_normals)

    def contains(self, y):
        return all(f.contains(y) for f in self.full_facets)


def support_value(rs, u):
    """Anticanonical support value 1 + 2 rho(u)."""
    return 1 + 2 * rootsys.rho_pairing(rs, u)


def enumerate_vertices(inequalities, rank):
    """Vertices of {y : a . y <= b} by intersecting rank-subsets.

    :param inequalities: sequence of (a, b) pairs
    """
    vertices = set()
    for subset in itertools.combinations(inequalities, rank):
        point = linalg.solve([a for a, _ in subset], [b for _, b in subset])
        if point is None:
            continue
        if point in vertices:
            continue
        if all(linalg.dot(a, point) <= b for a, b in inequalities):
            vertices.add(point)
    return tuple(sorted(vertices))


def is_bounded(normals, rank):
    """True when the positive hull of `normals` is the whole space.

    A pointed recession cone {d : u . d <= 0 for all u} is trivial exactly
    when none of its candidate extreme rays, cut out by rank - 1 linearly
    independent normals, satisfies every inequality.
    """
    normals = list(normals)
    if linalg.rank(normals) < rank:
        return False
    for subset in itertools.combinations(normals, rank - 1):
        basis = linalg.nullspace(subset, rank)
        if len(basis) != 1:
            continue
        d = basis[0]
        for ray in (d, linalg.scale(-1, d)):
            if all(linalg.dot(u, ray) <= 0 for u in normals):
                return False
    return True


def _tight(points, normal, rhs):
    return [p for p in points if linalg.dot(normal, p) == rhs]


def _is_facet(points, normal, rhs, rank):
    return linalg.affine_rank(_tight(points, normal, rhs)) == rank - 1


def _check_normal(rs, u):
    u = linalg.vector(u, rs.rank)
    if not linalg.is_primitive(u):
        raise exceptions.NonPrimitiveNormal(u)
    position = rootsys.chamber_position(rs, u, dual=True)
    if position == constants.CHAMBER_OUTSIDE:
        raise exceptions.NormalOutsideChamber(u)
    return u


def positive_part_of(rs, full_facets):
    inequalities = [(f.u, f.lam) for f in full_facets]
    walls = [(linalg.scale(-1, a), linalg.ZERO)
             for a in rs.dual_simple_roots]
    vertices = enumerate_vertices(inequalities + walls, rs.rank)
    dimension = linalg.affine_rank(vertices)
    if dimension != rs.rank:
        raise exceptions.DegeneratePositivePart(dimension, rs.rank)
    outer = tuple(f for f in full_facets
                  if _is_facet(vertices, f.u, f.lam, rs.rank))
    wall_facets = tuple(i for i, (a, b) in enumerate(walls)
                        if _is_facet(vertices, a, b, rs.rank))
    return PositivePart(vertices, tuple(inequalities + walls), outer,
                        wall_facets)


def build_polytope(rs, normals):
    """Builds and validates the polytope with the given outer normals.

    :param rs: a :class:`fanopoly.rootsys.RootSystem`
    :param normals: primitive integer vectors in the closed dual chamber
    :raises: EmptyNormalList, NonPrimitiveNormal, NormalOutsideChamber,
        UnboundedPolytope, RedundantNormal
    """
    normals = [_check_normal(rs, u) for u in normals]
    if not normals:
        raise exceptions.EmptyNormalList()
    seen = set()
    for u in normals:
        if u in seen:
            raise exceptions.RedundantNormal(u)
        seen.add(u)
    normals.sort()

    outer = tuple(FacetSpec(u, support_value(rs, u)) for u in normals)
    full = []
    for facet in outer:
        for image in rootsys.weyl_orbit(rs, facet.u, dual=True):
            full.append(FacetSpec(image, facet.lam))
    full.sort(key=lambda f: f.u)
    full = tuple(full)

    if not is_bounded([f.u for f in full], rs.rank):
        raise exceptions.UnboundedPolytope(normals)

    vertices = enumerate_vertices([(f.u, f.lam) for f in full], rs.rank)
    for facet in outer:
        if not _is_facet(vertices, facet.u, facet.lam, rs.rank):
            raise exceptions.RedundantNormal(facet.u)

    vertex_set = set(vertices)
    for i in range(rs.semisimple_rank):
        if {rs.reflect(i, v) for v in vertices} != vertex_set:
            raise exceptions.PostconditionFailed(
                'build_polytope', 'vertex set is not Weyl invariant')

    polytope = GroupPolytope(rs, outer, full, vertices,
                             positive_part_of(rs, full))
    LOG.debug("Built %r with %d vertices", polytope, len(vertices))
    return polytope


def positive_part(p):
    return p.positive_part


def is_fine(p):
    """True when each vertex of P lies on exactly rank facet hyperplanes."""
    for v in p.vertices:
        incident = sum(1 for f in p.full_facets if f.is_tight(v))
        if incident != p.rs.rank:
            return False
    return True


def label_I(p):
    """Returns the label I(P) = max 2 rho(u) over the outer facets.

    The ray t * rho leaves P+ at t0 = 2 (1 + 1 / I(P)) through the witness
    facet; every outer facet A is crossed at t_A >= t0.
    """
    rs = p.rs
    rho = linalg.scale(linalg.rational('1/2'), rs.two_rho)
    twice_rho = [2 * rootsys.rho_pairing(rs, f.u) for f in p.outer_normals]
    value = max(twice_rho)
    witness = p.outer_normals[twice_rho.index(value)]
    if value == 0:
        return LabelResult(value, witness, None, None)

    t0 = 2 * (1 + 1 / value)
    exits = tuple(f.lam / linalg.dot(f.u, rho) if linalg.dot(f.u, rho)
                  else None for f in p.outer_normals)
    point = linalg.scale(t0, rho)
    if not witness.is_tight(point):
        raise exceptions.PostconditionFailed(
            'label_I', 't0 * rho is not on the witness facet')
    if not all(f.contains(point) for f in p.outer_normals):
        raise exceptions.PostconditionFailed(
            'label_I', 't0 * rho violates an outer facet')
    if any(t is not None and t < t0 for t in exits):
        raise exceptions.PostconditionFailed(
            'label_I', 'an outer facet is crossed before t0')
    return LabelResult(value, witness, t0, exits)


def group_label(rs):
    """Label that rebuilds `rs` through build_root_system."""
    if rs.convention == constants.CONVENTION_SO4:
        return "so4"
    return rs.type_label


def polytope_to_dict(p):
    return {
        'group': group_label(p.rs),
        'outer_normals': [[int(x) for x in f.u] for f in p.outer_normals],
    }


def parse_polytope_dict(data):
    """Validates the polytope JSON layout.

    Keys other than group and outer_normals, as in a full record, are
    ignored.

    :returns: (group label, list of normals)
    """
    if not isinstance(data, dict):
        raise exceptions.MalformedPolytopeFile('expected a JSON object')
    group = data.get('group')
    normals = data.get('outer_normals')
    if not isinstance(group, str):
        raise exceptions.MalformedPolytopeFile("missing string 'group'")
    if not isinstance(normals, list) or not all(
            isinstance(u, list) and
            all(isinstance(x, int) and not isinstance(x, bool) for x in u)
            for u in normals):
        raise exceptions.MalformedPolytopeFile(
            "'outer_normals' must be a list of integer lists")
    return group, normals


def torus_polytope(p, q):
    """The toric polytope {p|x| + q|y| <= 1} for primitive (p, q).

    When pq = 0 that set is a strip; the swapped orbit closes it into a
    square.
    """
    rs = rootsys.build_root_system('T2')
    p, q = linalg.rational(p), linalg.rational(q)
    normals = {(sx * p, sy * q) for sx in (1, -1) for sy in (1, -1)}
    if p * q == 0:
        normals |= {(b, a) for a, b in normals}
    return build_polytope(rs, sorted(normals))
