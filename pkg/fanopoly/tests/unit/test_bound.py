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

from fanopoly import bound
from fanopoly import exceptions
from fanopoly.tests import base


class BracketTestCase(base.FanopolyTestCase):

    def test_exact_value(self):
        self.assertEqual(base.q('14733/10206'), bound.label_bracket(2, 6))

    def test_evaluation(self):
        evaluation = bound.evaluate_bracket('2', 6)
        self.assertEqual(base.q('3/2'), evaluation.t)
        self.assertEqual(6, evaluation.n)
        self.assertEqual(bound.label_bracket(2, 6), evaluation.value)

    def test_crosses_one_between_seven_and_eight(self):
        self.assertGreater(bound.label_bracket(7, 6), 1)
        self.assertLess(bound.label_bracket(8, 6), 1)

    def test_tends_to_n_over_n_plus_one(self):
        self.assertLess(bound.label_bracket(10, 6), 1)
        self.assertGreater(bound.label_bracket(10 ** 6, 6), base.q('6/7'))

    def test_invalid_parameters(self):
        self.assertRaises(exceptions.InvalidParameter,
                          bound.label_bracket, 0, 6)
        self.assertRaises(exceptions.InvalidParameter,
                          bound.label_bracket, 2, 0)
        self.assertRaises(exceptions.InvalidParameter,
                          bound.label_bracket, 2, True)
        self.assertRaises(exceptions.InvalidParameter,
                          bound.label_bracket, 2, 2.5)


class OmegaTestCase(base.FanopolyTestCase):

    def test_dimension_six(self):
        interval = bound.omega_generic(6, '1/10000')
        self.assertLess(base.q('7.64'), interval.lo)
        self.assertLess(interval.hi, base.q('7.65'))
        self.assertLessEqual(interval.hi - interval.lo, base.q('1/10000'))
        self.assertEqual(base.q('383/100'), interval.rounded_rho_units)
        lo, hi = interval.rho_units
        self.assertEqual(interval.lo / 2, lo)
        self.assertEqual(interval.hi / 2, hi)

    def test_brackets_the_root(self):
        interval = bound.omega_generic(6, '1/10000')
        self.assertGreater(bound.label_bracket(interval.lo, 6), 1)
        self.assertLessEqual(bound.label_bracket(interval.hi, 6), 1)

    def test_dimension_one_is_sqrt_two(self):
        interval = bound.omega_generic(1, '1/100000')
        self.assertLess(interval.lo ** 2, 2)
        self.assertGreater(interval.hi ** 2, 2)

    def test_default_tolerance(self):
        self.conf.set_override('omega_tolerance', '1/100')
        interval = bound.omega_generic(6)
        self.assertLessEqual(interval.hi - interval.lo, base.q('1/100'))

    def test_invalid_tolerance(self):
        self.assertRaises(exceptions.InvalidParameter,
                          bound.omega_generic, 6, 0)
        self.assertRaises(exceptions.InvalidRational,
                          bound.omega_generic, 6, 'tight')

    def test_to_dict(self):
        info = bound.omega_generic(6, '1/10000').to_dict()
        self.assertEqual(6, info['n'])
        self.assertEqual('383/100', info['omega_rounded'])
        self.assertEqual(2, len(info['label_interval']))
        self.assertAlmostEqual(7.6411, info['approx']['label'], places=2)
        self.assertAlmostEqual(3.8206, info['approx']['rho'], places=2)

    def test_grid(self):
        grid = bound._grid()
        self.assertEqual(1, grid[0])
        self.assertEqual(1000, grid[-1])
        self.assertTrue(all(a < b for a, b in zip(grid, grid[1:])))
