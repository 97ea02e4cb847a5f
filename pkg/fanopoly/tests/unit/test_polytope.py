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

from fanopoly import exceptions
from fanopoly import polytope
from fanopoly.tests import base


class BuildPolytopeTestCase(base.FanopolyTestCase):

    def test_case_51(self):
        p = base.so4_polytope(base.CASE_51)
        self.assertEqual(((1, 0),), p.canonical_key)
        self.assertEqual(3, p.outer_normals[0].lam)
        self.assertEqual(4, len(p.full_facets))
        self.assertEqual(((-3, -3), (-3, 3), (3, -3), (3, 3)), p.vertices)
        self.assertEqual(((0, 0), (3, -3), (3, 3)),
                         p.positive_part.vertices)
        self.assertTrue(polytope.is_fine(p))

    def test_case_52(self):
        p = base.so4_polytope(base.CASE_52)
        self.assertEqual(((1, -1), (1, 1)), p.canonical_key)
        self.assertEqual(((-3, 0), (0, -3), (0, 3), (3, 0)), p.vertices)
        self.assertVectorEqual(('3/2', '-3/2'), p.positive_part.vertices[1])
        self.assertEqual(4, len(p.positive_part.vertices))
        self.assertEqual(2, len(p.positive_part.outer_facets))
        self.assertEqual((0, 1), p.positive_part.wall_facets)

    def test_normals_are_sorted(self):
        p = base.so4_polytope([(2, 1), (1, 0)])
        self.assertEqual(((1, 0), (2, 1)), p.canonical_key)
        self.assertEqual(p.canonical_key,
                         base.so4_polytope([(1, 0), (2, 1)]).canonical_key)

    def test_contains(self):
        p = base.so4_polytope(base.CASE_51)
        self.assertTrue(p.contains((3, -3)))
        self.assertFalse(p.contains((0, 4)))

    def test_support_value(self):
        rs = base.root_system('so4')
        self.assertEqual(7, polytope.support_value(rs, (3, 1)))

    def test_vertex_set_is_weyl_invariant(self):
        p = base.so4_polytope([(1, 0), (3, 1)])
        vertices = set(p.vertices)
        for i in range(p.rs.semisimple_rank):
            self.assertEqual(vertices,
                             {p.rs.reflect(i, v) for v in p.vertices})

    def test_empty(self):
        self.assertRaises(exceptions.EmptyNormalList,
                          base.so4_polytope, [])

    def test_not_primitive(self):
        self.assertRaises(exceptions.NonPrimitiveNormal,
                          base.so4_polytope, [(2, 0)])

    def test_outside_chamber(self):
        self.assertRaises(exceptions.NormalOutsideChamber,
                          base.so4_polytope, [(0, 1)])

    def test_unbounded(self):
        self.assertRaises(exceptions.UnboundedPolytope,
                          base.so4_polytope, [(1, 1)])

    def test_redundant(self):
        self.assertRaises(exceptions.RedundantNormal,
                          base.so4_polytope, [(1, 0), (1, 1), (1, -1)])

    def test_duplicate_is_redundant(self):
        self.assertRaises(exceptions.RedundantNormal,
                          base.so4_polytope, [(1, 0), (1, 0)])

    def test_dimension_mismatch(self):
        self.assertRaises(exceptions.DimensionMismatch,
                          base.so4_polytope, [(1, 0, 0)])

    def test_is_bounded(self):
        self.assertTrue(polytope.is_bounded(
            [(1, 0), (0, 1), (-1, -1)], 2))
        self.assertFalse(polytope.is_bounded([(1, 0), (-1, 0)], 2))
        self.assertFalse(polytope.is_bounded([(1, 0), (0, 1)], 2))

    def test_enumerate_vertices(self):
        inequalities = [((1, 0), 1), ((0, 1), 1), ((-1, -1), 0)]
        self.assertEqual(((-1, 1), (1, -1), (1, 1)),
                         polytope.enumerate_vertices(inequalities, 2))


class FineTestCase(base.FanopolyTestCase):

    def test_cross_polytope_is_not_fine(self):
        rs = base.root_system('T3')
        normals = [(a, b, c) for a in (1, -1) for b in (1, -1)
                   for c in (1, -1)]
        p = polytope.build_polytope(rs, normals)
        self.assertEqual(6, len(p.vertices))
        self.assertFalse(polytope.is_fine(p))

    def test_rank_two_polytopes_are_fine(self):
        for normals in (base.CASE_51, base.CASE_52, [(1, 0), (3, 1)]):
            self.assertTrue(polytope.is_fine(base.so4_polytope(normals)))


class LabelTestCase(base.FanopolyTestCase):

    def test_case_51(self):
        label = polytope.label_I(base.so4_polytope(base.CASE_51))
        self.assertEqual(2, label.value)
        self.assertEqual(3, label.t0)
        self.assertEqual((1, 0), label.witness.u)

    def test_dominant_facet(self):
        label = polytope.label_I(base.so4_polytope([(1, 0), (3, 1)]))
        self.assertEqual(6, label.value)
        self.assertEqual((3, 1), label.witness.u)
        self.assertEqual(base.q('7/3'), label.t0)
        self.assertTrue(all(t >= label.t0 for t in label.exit_parameters))

    def test_torus(self):
        label = polytope.label_I(polytope.torus_polytope(1, 1))
        self.assertEqual(0, label.value)
        self.assertIsNone(label.t0)


class TorusPolytopeTestCase(base.FanopolyTestCase):

    def test_diamond(self):
        p = polytope.torus_polytope(1, 1)
        self.assertEqual(4, len(p.outer_normals))
        self.assertEqual(((-1, 0), (0, -1), (0, 1), (1, 0)), p.vertices)

    def test_strip_is_closed(self):
        p = polytope.torus_polytope(1, 0)
        self.assertEqual(4, len(p.outer_normals))
        self.assertEqual(((-1, -1), (-1, 1), (1, -1), (1, 1)), p.vertices)


class PolytopeDictTestCase(base.FanopolyTestCase):

    def test_to_dict(self):
        p = base.so4_polytope(base.CASE_52)
        self.assertEqual({'group': 'so4',
                          'outer_normals': [[1, -1], [1, 1]]},
                         polytope.polytope_to_dict(p))

    def test_parse_ignores_extra_keys(self):
        group, normals = polytope.parse_polytope_dict(
            {'group': 'so4', 'outer_normals': [[1, 0]], 'status': 'KE'})
        self.assertEqual('so4', group)
        self.assertEqual([[1, 0]], normals)

    def test_parse_errors(self):
        for data in ([], {'outer_normals': [[1, 0]]},
                     {'group': 'so4'},
                     {'group': 'so4', 'outer_normals': [[1, '0']]},
                     {'group': 'so4', 'outer_normals': [[True, 0]]},
                     {'group': 'so4', 'outer_normals': [1, 0]}):
            self.assertRaises(exceptions.MalformedPolytopeFile,
                              polytope.parse_polytope_dict, data)

    def test_group_label(self):
        self.assertEqual('so4',
                         polytope.group_label(base.root_system('so4')))
        self.assertEqual('A1xA1',
                         polytope.group_label(base.root_system('A1xA1')))
