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

import itertools

import sympy

from fanopoly import constants
from fanopoly import exceptions
from fanopoly import rootsys
from fanopoly.tests import base


class BuildRootSystemTestCase(base.FanopolyTestCase):

    def test_so4_convention(self):
        rs = base.root_system('so4')
        self.assertEqual('A1xA1', rs.type_label)
        self.assertEqual(constants.CONVENTION_SO4, rs.convention)
        self.assertEqual(((1, 1), (1, -1)), rs.simple_roots)
        self.assertEqual(set(rs.simple_roots), set(rs.positive_roots))
        self.assertVectorEqual((2, 0), rs.two_rho)
        self.assertTrue(rs.is_semisimple)

    def test_alias_is_case_insensitive(self):
        rs = rootsys.build_root_system('SO4')
        self.assertEqual(constants.CONVENTION_SO4, rs.convention)

    def test_positive_root_counts(self):
        for label, count in (('A1', 1), ('A2', 3), ('A3', 6), ('B2', 4),
                             ('C3', 9), ('D4', 12), ('G2', 6),
                             ('A1xA1', 2)):
            rs = base.root_system(label)
            self.assertEqual(count, len(rs.positive_roots), label)

    def test_g2_cartan(self):
        rs = base.root_system('G2')
        self.assertEqual(sympy.Matrix([[2, -1], [-3, 2]]), rs.cartan)

    def test_a2_fundamental_weights(self):
        rs = base.root_system('A2')
        self.assertVectorEqual(('2/3', '1/3'), rs.fundamental_weights[0])
        self.assertVectorEqual(('1/3', '2/3'), rs.fundamental_weights[1])
        self.assertEqual(
            sympy.Matrix([[2, 1], [1, 2]]) / 3, rootsys.inverse_cartan(rs))

    def test_fundamental_weights_are_dual_to_coroots(self):
        rs = base.root_system('B2')
        for i, alpha in enumerate(rs.simple_roots):
            for j, weight in enumerate(rs.fundamental_weights):
                pairing = 2 * rs.inner(weight, alpha) / rs.norm2(alpha)
                self.assertEqual(int(i == j), pairing)

    def test_weyl_group_orders(self):
        for label, order in (('A1', 2), ('so4', 4), ('A2', 6), ('B2', 8),
                             ('G2', 12)):
            rs = base.root_system(label)
            self.assertEqual(order, len(rs.weyl_elements), label)

    def test_weyl_group_cap(self):
        self.conf.set_override('weyl_group_cap', 3)
        rs = rootsys.build_root_system('A2')
        self.assertRaises(exceptions.WeylGroupTooLarge,
                          lambda: rs.weyl_elements)

    def test_reductive_center(self):
        rs = base.root_system('A1xT1')
        self.assertFalse(rs.is_semisimple)
        self.assertEqual(((0, 1),), rs.center_basis)
        self.assertEqual(1, rs.semisimple_rank)

    def test_torus(self):
        rs = base.root_system('T2')
        self.assertEqual((), rs.positive_roots)
        self.assertEqual(2, len(rs.center_basis))
        self.assertEqual(1, len(rs.weyl_elements))

    def test_gram_scale(self):
        rs = rootsys.build_root_system('so4', gram_scale='7/3')
        self.assertEqual(sympy.eye(2) * sympy.Rational(7, 3), rs.gram)
        self.assertEqual(sympy.Matrix([[2, 0], [0, 2]]), rs.cartan)

    def test_invalid_labels(self):
        self.assertRaises(exceptions.UnknownRootSystemType,
                          rootsys.build_root_system, 'E8')
        self.assertRaises(exceptions.UnknownRootSystemType,
                          rootsys.build_root_system, 'sl3')
        self.assertRaises(exceptions.InvalidRank,
                          rootsys.build_root_system, 'G3')
        self.assertRaises(exceptions.InvalidRank,
                          rootsys.build_root_system, 'D2')
        self.assertRaises(exceptions.InvalidRank,
                          rootsys.build_root_system, 'A0')

    def test_invalid_convention(self):
        self.assertRaises(exceptions.UnknownConvention,
                          rootsys.build_root_system, 'A2', 'so4')
        self.assertRaises(exceptions.UnknownConvention,
                          rootsys.build_root_system, 'A2', 'weird')

    def test_invalid_gram_scale(self):
        self.assertRaises(exceptions.InvalidParameter,
                          rootsys.build_root_system, 'A2', None, 0)


class PairingTestCase(base.FanopolyTestCase):

    def test_rho_pairing_so4(self):
        rs = base.root_system('so4')
        self.assertEqual(3, rootsys.rho_pairing(rs, (3, 1)))
        self.assertEqual(3, rootsys.rho_pairing(rs, (3, -2)))
        self.assertEqual(1, rootsys.rho_pairing(rs, (1, -1)))

    def test_rho_pairing_is_weyl_invariant(self):
        rs = base.root_system('G2')
        u = (2, 1)
        for image in rootsys.weyl_orbit(rs, u, dual=True):
            self.assertEqual(rootsys.rho_pairing(rs, u),
                             rootsys.rho_pairing(rs, image))

    def test_dual_orbit_so4(self):
        rs = base.root_system('so4')
        orbit = rootsys.weyl_orbit(rs, (3, 1), dual=True)
        self.assertEqual(((-3, -1), (-1, -3), (1, 3), (3, 1)), orbit)

    def test_reflection_matrix_matches_reflect(self):
        rs = base.root_system('B2')
        v = (sympy.Rational(1, 2), sympy.Integer(3))
        for i in range(rs.semisimple_rank):
            image = rs.reflection(i) * sympy.Matrix(v)
            self.assertEqual(tuple(image), rs.reflect(i, v))

    def test_chamber_position(self):
        rs = base.root_system('so4')
        self.assertEqual(constants.CHAMBER_INTERIOR,
                         rootsys.chamber_position(rs, (2, 1)))
        self.assertEqual(constants.CHAMBER_WALL,
                         rootsys.chamber_position(rs, (1, 1)))
        self.assertEqual(constants.CHAMBER_OUTSIDE,
                         rootsys.chamber_position(rs, (0, 1)))
        self.assertEqual(constants.CHAMBER_WALL,
                         rootsys.chamber_position(rs, (1, -1), dual=True))

    def test_fundamental_weight_gram_nonnegative(self):
        for label in ('A2', 'B2', 'G2'):
            gram = rootsys.fundamental_weight_gram(base.root_system(label))
            self.assertTrue(all(x >= 0 for x in gram))


_TYPES = ('A1', 'A2', 'A3', 'A4', 'A5', 'B2', 'B3', 'B4', 'C3', 'D4', 'G2',
          'A1xA1')


class InvariantsTestCase(base.FanopolyTestCase):

    def test_inverse_cartan_is_nonnegative(self):
        for label in _TYPES:
            inverse = rootsys.inverse_cartan(base.root_system(label))
            self.assertTrue(all(x >= 0 for x in inverse), label)
            self.assertEqual(sympy.eye(inverse.rows),
                             inverse * base.root_system(label).cartan)

    def test_inverse_cartan_examples(self):
        self.assertEqual(sympy.Matrix([[2, 1], [3, 2]]),
                         rootsys.inverse_cartan(base.root_system('G2')))
        self.assertEqual(sympy.eye(2) / 2,
                         rootsys.inverse_cartan(base.root_system('A1xA1')))

    def test_weyl_group_preserves_gram(self):
        for label in ('so4', 'A2', 'A3', 'B2', 'B3', 'G2'):
            rs = base.root_system(label)
            for w in rs.weyl_elements:
                self.assertEqual(rs.gram, w.T * rs.gram * w, label)

    def test_orbit_sizes_divide_group_order(self):
        for label in ('so4', 'A2', 'B2', 'G2', 'A3'):
            rs = base.root_system(label)
            order = len(rs.weyl_elements)
            for weight in rs.fundamental_weights:
                self.assertEqual(
                    0, order % len(rootsys.weyl_orbit(rs, weight)), label)
            self.assertEqual(
                constants.CHAMBER_INTERIOR,
                rootsys.chamber_position(rs, rs.two_rho))
            self.assertEqual(order,
                             len(rootsys.weyl_orbit(rs, rs.two_rho)), label)

    def test_weight_orbits_so4(self):
        rs = base.root_system('so4')
        self.assertEqual(((-1, 0), (0, -1), (0, 1), (1, 0)),
                         rootsys.weyl_orbit(rs, (1, 0)))
        self.assertEqual(((-1, -1), (1, 1)), rootsys.weyl_orbit(rs, (1, 1)))
        self.assertEqual(((0, 0),), rootsys.weyl_orbit(rs, (0, 0)))

    def test_rho_pairing_positive_on_chamber(self):
        for label in ('so4', 'A2', 'B2', 'G2', 'A3', 'A1xA1'):
            rs = base.root_system(label)
            for u in itertools.product(range(-2, 3), repeat=rs.rank):
                if not any(u):
                    continue
                position = rootsys.chamber_position(rs, u, dual=True)
                if position == constants.CHAMBER_OUTSIDE:
                    continue
                self.assertGreater(rootsys.rho_pairing(rs, u), 0,
                                   (label, u))
