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

from fanopoly import constants
from fanopoly import exceptions
from fanopoly import measure
from fanopoly import polytope
from fanopoly.tests import base

# Polytopes whose exact moments must not depend on the triangulation.
_TRIANGULATION_CASES = (
    base.CASE_51,
    base.CASE_52,
    [(2, 1)],
    [(1, 0), (2, 1)],
    [(1, 1), (1, -1), (2, 1)],
)


class PiPolynomialTestCase(base.FanopolyTestCase):

    def test_so4(self):
        pi = measure.pi_polynomial(base.root_system('so4'))
        self.assertEqual({(4, 0): 1, (2, 2): -2, (0, 4): 1}, pi.terms)
        self.assertEqual(4, pi.degree)
        self.assertTrue(pi.is_homogeneous())
        self.assertEqual(9, pi((2, 1)))

    def test_degree_is_twice_the_positive_roots(self):
        for label in ('A2', 'B2', 'G2'):
            rs = base.root_system(label)
            pi = measure.pi_polynomial(rs)
            self.assertEqual(2 * len(rs.positive_roots), pi.degree)

    def test_torus_weight_is_constant(self):
        pi = measure.pi_polynomial(base.root_system('T2'))
        self.assertEqual({(0, 0): 1}, pi.terms)

    def test_from_terms(self):
        poly = measure.PiPolynomial.from_terms(2, {(2, 2): '1/2'})
        self.assertEqual(base.q('9/2'), poly((1, 3)))
        self.assertEqual({(3, 2): base.q('1/2')},
                         poly.times_coordinate(0).terms)


class SimplexIntegralTestCase(base.FanopolyTestCase):

    def test_unit_triangle(self):
        simplex = [(0, 0), (1, 0), (0, 1)]
        one = measure.PiPolynomial.from_terms(2, {(0, 0): 1})
        y0 = measure.PiPolynomial.from_terms(2, {(1, 0): 1})
        y0y1 = measure.PiPolynomial.from_terms(2, {(1, 1): 1})
        self.assertEqual(base.q('1/2'),
                         measure.integrate_over_simplex(one, simplex))
        self.assertEqual(base.q('1/6'),
                         measure.integrate_over_simplex(y0, simplex))
        self.assertEqual(base.q('1/24'),
                         measure.integrate_over_simplex(y0y1, simplex))

    def test_orientation_does_not_matter(self):
        y0 = measure.PiPolynomial.from_terms(2, {(1, 0): 1})
        self.assertEqual(
            measure.integrate_over_simplex(y0, [(0, 0), (2, 0), (0, 3)]),
            measure.integrate_over_simplex(y0, [(0, 0), (0, 3), (2, 0)]))

    def test_degenerate(self):
        one = measure.PiPolynomial.from_terms(2, {(0, 0): 1})
        self.assertRaises(exceptions.DegenerateSimplex,
                          measure.integrate_over_simplex, one,
                          [(0, 0), (1, 1), (2, 2)])


class TriangulationTestCase(base.FanopolyTestCase):

    def test_square(self):
        p = polytope.torus_polytope(1, 0)
        simplices = measure.triangulate(
            p.vertices, [(f.u, f.lam) for f in p.full_facets])
        self.assertEqual(2, len(simplices))
        self.assertTrue(all(len(s) == 3 for s in simplices))

    def test_simplex_is_its_own_triangulation(self):
        p = base.so4_polytope(base.CASE_51)
        part = p.positive_part
        self.assertEqual([part.vertices],
                         measure.triangulate(part.vertices,
                                             part.inequalities))


class WeightedMomentsTestCase(base.FanopolyTestCase):

    def test_case_51(self):
        moments = measure.weighted_moments(base.so4_polytope(base.CASE_51))
        self.assertEqual(base.q('648/5'), moments.vol_pi)
        self.assertVectorEqual(('18/7', 0), moments.barycenter)

    def test_case_52(self):
        moments = measure.weighted_moments(base.so4_polytope(base.CASE_52))
        self.assertEqual(base.q('81/2'), moments.vol_pi)
        self.assertVectorEqual(('9/4', 0), moments.barycenter)

    def test_custom_weight(self):
        weight = measure.PiPolynomial.from_terms(2, {(2, 2): 1})
        moments = measure.weighted_moments(base.so4_polytope(base.CASE_52),
                                           weight=weight)
        self.assertVectorEqual(('27/16', 0), moments.barycenter)

    def test_sympy_poly_weight(self):
        weight = measure.PiPolynomial.from_terms(2, {(2, 2): 1}).poly
        moments = measure.weighted_moments(base.so4_polytope(base.CASE_52),
                                           weight=weight)
        self.assertVectorEqual(('27/16', 0), moments.barycenter)

    def test_torus_square(self):
        moments = measure.weighted_moments(polytope.torus_polytope(1, 0))
        self.assertEqual(4, moments.vol_pi)
        self.assertVectorEqual((0, 0), moments.barycenter)

    def test_triangulation_independence(self):
        for normals in _TRIANGULATION_CASES:
            p = base.so4_polytope(normals)
            low = measure.weighted_moments(
                p, anchor=constants.TRIANGULATION_ANCHOR_MIN)
            high = measure.weighted_moments(
                p, anchor=constants.TRIANGULATION_ANCHOR_MAX)
            self.assertEqual(low.vol_pi, high.vol_pi, normals)
            self.assertEqual(low.barycenter, high.barycenter, normals)

    def test_integrate_over_positive_part(self):
        p = base.so4_polytope(base.CASE_52)
        pi = measure.pi_polynomial(p.rs)
        self.assertEqual(base.q('81/2'),
                         measure.integrate_over_positive_part(p, pi))

    def test_gram_rescaling(self):
        rs = base.root_system('so4', None, '7/3')
        p = polytope.build_polytope(rs, base.CASE_51)
        moments = measure.weighted_moments(p)
        self.assertEqual(base.q('648/5') * base.q('7/3') ** 4,
                         moments.vol_pi)
        self.assertVectorEqual(('18/7', 0), moments.barycenter)

    def test_to_dict(self):
        moments = measure.weighted_moments(base.so4_polytope(base.CASE_52))
        info = moments.to_dict()
        self.assertEqual('81/2', info['vol_pi'])
        self.assertEqual(['9/4', '0'], info['barycenter'])


class MonteCarloTestCase(base.FanopolyTestCase):

    def setUp(self):
        super(MonteCarloTestCase, self).setUp()
        self.p = base.so4_polytope(base.CASE_52)
        self.exact = measure.weighted_moments(self.p)

    def test_agrees_with_exact(self):
        estimate = measure.mc_moments(self.p, 40000, seed=7,
                                      chunk_size=10000)
        self.assertEqual(40000, estimate.samples)
        self.assertEqual(7, estimate.seed)
        self.assertGreater(estimate.accepted, 0)
        self.assertEqual([], measure.mc_agreement(self.exact, estimate,
                                                  sigmas=6))

    def test_deterministic(self):
        first = measure.mc_moments(self.p, 5000, seed=3, chunk_size=1000)
        second = measure.mc_moments(self.p, 5000, seed=3, chunk_size=1000)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_seed_changes_estimate(self):
        first = measure.mc_moments(self.p, 5000, seed=3)
        second = measure.mc_moments(self.p, 5000, seed=4)
        self.assertNotEqual(first.vol_pi, second.vol_pi)

    def test_disagreement_is_reported(self):
        estimate = measure.MonteCarloMoments(
            vol_pi=100.0, vol_pi_stderr=0.1, barycenter=(2.25, 0.0),
            barycenter_stderr=(0.01, 0.01), samples=10, accepted=10, seed=0)
        problems = measure.mc_agreement(self.exact, estimate)
        self.assertEqual(1, len(problems))
        self.assertIn('vol_pi', problems[0])

    def test_invalid_sample_count(self):
        self.assertRaises(exceptions.InvalidSampleCount,
                          measure.mc_moments, self.p, 0, 1)
