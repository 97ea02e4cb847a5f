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

"""Exact pi-weighted moments of the positive part, and a Monte-Carlo oracle.

Polynomials are integrated over simplices through the barycentric formula

    int_S c * s^a ds = |det| * c * prod(a_j!) / (r + |a|)!

after pulling the integrand back to the standard simplex; polytopes are cut
into simplices by a recursive star triangulation.
"""

import logging
import math

import numpy
import sympy
from oslo_utils import timeutils

from fanopoly import conf
from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg

LOG = logging.getLogger(__name__)

CONF = conf.CONF


def _gens(rank):
    return sympy.symbols('y0:%d' % rank) if rank else ()


class PiPolynomial(object):
    """A sparse polynomial with exact rational coefficients."""

    def __init__(self, poly):
        self.poly = poly
        self.gens = poly.gens
        self.rank = len(poly.gens)

    @classmethod
    def from_terms(cls, rank, terms):
        """Builds a polynomial from {exponent tuple: coefficient}."""
        gens = _gens(rank)
        expr = sum((linalg.rational(c) *
                    sympy.Mul(*[g ** e for g, e in zip(gens, exps)])
                    for exps, c in terms.items()), sympy.Integer(0))
        return cls(sympy.Poly(expr, *gens, domain='QQ'))

    def __repr__(self):
        return "<PiPolynomial %s>" % self.poly.as_expr()

    def __call__(self, y):
        return linalg.rational(self.poly.eval(dict(zip(self.gens, y))))

    @property
    def degree(self):
        return self.poly.total_degree()

    @property
    def terms(self):
        return dict((exps, linalg.rational(c))
                    for exps, c in self.poly.terms())

    def is_homogeneous(self):
        return self.poly.is_homogeneous

    def times_coordinate(self, i):
        return PiPolynomial(self.poly * sympy.Poly(self.gens[i], *self.gens,
                                                   domain='QQ'))


class MomentResult(object):
    def __init__(self, vol_pi, barycenter, simplex_count):
        self.vol_pi = vol_pi
        self.barycenter = barycenter
        self.simplex_count = simplex_count

    def __repr__(self):
        return "<MomentResult vol_pi=%s barycenter=%s simplices=%d>" % (
            self.vol_pi, [str(x) for x in self.barycenter],
            self.simplex_count)

    def to_dict(self):
        return {
            'vol_pi': str(self.vol_pi),
            'barycenter': [str(x) for x in self.barycenter],
            'simplex_count': self.simplex_count,
        }


class MonteCarloMoments(object):
    def __init__(self, vol_pi, vol_pi_stderr, barycenter, barycenter_stderr,
                 samples, accepted, seed):
        self.vol_pi = vol_pi
        self.vol_pi_stderr = vol_pi_stderr
        self.barycenter = barycenter
        self.barycenter_stderr = barycenter_stderr
        self.samples = samples
        self.accepted = accepted
        self.seed = seed

    def __repr__(self):
        return ("<MonteCarloMoments vol_pi=%.6g+-%.2g barycenter=%s "
                "accepted=%d/%d>" % (self.vol_pi, self.vol_pi_stderr,
                                     list(self.barycenter), self.accepted,
                                     self.samples))

    def to_dict(self):
        return {
            'samples': self.samples,
            'accepted': self.accepted,
            'seed': self.seed,
            'vol_pi': self.vol_pi,
            'vol_pi_stderr': self.vol_pi_stderr,
            'barycenter': list(self.barycenter),
            'barycenter_stderr': list(self.barycenter_stderr),
        }


def pi_polynomial(rs):
    """Returns pi(y) = prod over positive roots of <alpha, y>^2."""
    gens = _gens(rs.rank)
    result = sympy.Poly(1, *gens, domain='QQ')
    for alpha in rs.positive_roots:
        form = rs.to_dual(alpha)
        linear = sympy.Poly(sum(c * g for c, g in zip(form, gens)), *gens,
                            domain='QQ')
        result = result * linear ** 2
    return PiPolynomial(result)


def _as_poly(weight):
    return weight.poly if isinstance(weight, PiPolynomial) else weight


def _simplex_integrals(polys, simplex):
    """Exact integrals of each polynomial in `polys` over `simplex`."""
    rank = len(simplex) - 1
    base = simplex[0]
    edges = [linalg.sub(v, base) for v in simplex[1:]]
    det = linalg.determinant([list(e) for e in edges]) if rank else 1
    if det == 0:
        raise exceptions.DegenerateSimplex(simplex)

    s = _gens(rank)
    # y_i = base_i + sum_j s_j * edges[j][i]
    forms = [sympy.Poly(base[i] + sum(s[j] * edges[j][i]
                                      for j in range(rank)),
                        *s, domain='QQ')
             for i in range(rank)]
    powers = [[sympy.Poly(1, *s, domain='QQ')] for _ in range(rank)]

    def power(i, e):
        while len(powers[i]) <= e:
            powers[i].append(powers[i][-1] * forms[i])
        return powers[i][e]

    results = []
    for poly in polys:
        total = sympy.Integer(0)
        for exps, coefficient in _as_poly(poly).terms():
            pulled = sympy.Poly(coefficient, *s, domain='QQ')
            for i, e in enumerate(exps):
                if e:
                    pulled = pulled * power(i, e)
            for monomial, c in pulled.terms():
                numerator = 1
                for a in monomial:
                    numerator *= math.factorial(a)
                total += linalg.rational(c) * sympy.Rational(
                    numerator, math.factorial(rank + sum(monomial)))
        results.append(abs(det) * total)
    return results


def integrate_over_simplex(poly, simplex):
    """Exact integral of `poly` over the simplex with r + 1 vertices."""
    simplex = [linalg.vector(v) for v in simplex]
    return _simplex_integrals([poly], simplex)[0]


def _face_triangulation(points, inequalities, dim, anchor):
    if len(points) == dim + 1:
        return [tuple(sorted(points))]
    apex = min(points) if anchor == constants.TRIANGULATION_ANCHOR_MIN \
        else max(points)
    simplices = []
    faces = set()
    for normal, rhs in inequalities:
        tight = tuple(sorted(p for p in points
                             if linalg.dot(normal, p) == rhs))
        if apex in tight or tight in faces:
            continue
        if linalg.affine_rank(tight) != dim - 1:
            continue
        faces.add(tight)
        for simplex in _face_triangulation(list(tight), inequalities,
                                           dim - 1, anchor):
            simplices.append((apex,) + simplex)
    return simplices


def triangulate(vertices, inequalities,
                anchor=constants.TRIANGULATION_ANCHOR_MIN):
    """Recursive star triangulation of a full-dimensional polytope.

    Each face is coned from its lexicographically least (or greatest)
    vertex over the triangulations of the facets missing that vertex.

    :param vertices: vertices of the polytope
    :param inequalities: (a, b) pairs describing it as {a . y <= b}
    :returns: list of simplices, sorted
    """
    vertices = sorted(set(vertices))
    if not vertices:
        return []
    dim = linalg.affine_rank(vertices)
    return sorted(_face_triangulation(vertices, list(inequalities), dim,
                                      anchor))


def _moments(vertices, inequalities, rank, weight, anchor):
    if not isinstance(weight, PiPolynomial):
        weight = PiPolynomial(weight)
    polys = [weight] + [weight.times_coordinate(i) for i in range(rank)]
    simplices = triangulate(vertices, inequalities, anchor)
    totals = [sympy.Integer(0)] * len(polys)
    for simplex in simplices:
        values = _simplex_integrals(polys, simplex)
        totals = [t + v for t, v in zip(totals, values)]
    vol = totals[0]
    if vol <= 0:
        raise exceptions.PostconditionFailed(
            'weighted_moments', 'weighted volume %s is not positive' % vol)
    barycenter = tuple(t / vol for t in totals[1:])
    return MomentResult(vol, barycenter, len(simplices))


def weighted_moments(p, weight=None,
                     anchor=constants.TRIANGULATION_ANCHOR_MIN):
    """Exact pi-weighted volume and barycenter of P+.

    :param weight: replaces pi when given (PiPolynomial or sympy Poly)
    :param anchor: "min" or "max", the vertex each star is coned from
    """
    if weight is None:
        weight = pi_polynomial(p.rs)
    part = p.positive_part
    result = _moments(part.vertices, part.inequalities, p.rs.rank, weight,
                      anchor)
    LOG.debug("Moments of %r: %r", p, result)
    return result


def integrate_over_positive_part(p, poly):
    """Exact integral of `poly` over P+."""
    part = p.positive_part
    total = sympy.Integer(0)
    for simplex in triangulate(part.vertices, part.inequalities):
        total += _simplex_integrals([poly], simplex)[0]
    return total


def _float_weight(weight, rank):
    weight = _as_poly(weight)
    function = sympy.lambdify(weight.gens, weight.as_expr(), 'numpy')

    def evaluate(points):
        values = function(*[points[:, i] for i in range(rank)])
        return numpy.broadcast_to(numpy.asarray(values, dtype=float),
                                  (points.shape[0],))
    return evaluate


def mc_moments(p, samples, seed, chunk_size=None, weight=None):
    """Monte-Carlo estimate of the weighted moments of P+.

    Points are drawn uniformly in the bounding box of P+ and rejected
    outside it. Chunk k uses the Philox stream ``Philox(seed).jumped(k)``,
    so the estimate only depends on (samples, seed, chunk_size).
    """
    if samples is None or samples < 1:
        raise exceptions.InvalidSampleCount(samples)
    chunk_size = chunk_size or CONF.mc_chunk_size
    rank = p.rs.rank
    part = p.positive_part
    vertices = numpy.array([[float(x) for x in v] for v in part.vertices])
    low, high = vertices.min(axis=0), vertices.max(axis=0)
    box = float(numpy.prod(high - low))
    normals = numpy.array([[float(x) for x in a]
                           for a, _ in part.inequalities])
    bounds = numpy.array([float(b) for _, b in part.inequalities])
    evaluate = _float_weight(weight or pi_polynomial(p.rs), rank)

    sum_w = sum_ww = 0.0
    sum_yw = numpy.zeros(rank)
    sum_yyww = numpy.zeros(rank)
    sum_yww = numpy.zeros(rank)
    accepted = 0
    with timeutils.StopWatch() as watch:
        chunk = 0
        remaining = samples
        while remaining > 0:
            n = min(chunk_size, remaining)
            generator = numpy.random.Generator(
                numpy.random.Philox(seed).jumped(chunk))
            points = low + (high - low) * generator.random((n, rank))
            inside = numpy.all(points @ normals.T <= bounds + 1e-12, axis=1)
            w = numpy.where(inside, evaluate(points), 0.0)
            yw = points * w[:, None]
            accepted += int(inside.sum())
            sum_w += w.sum()
            sum_ww += (w * w).sum()
            sum_yw += yw.sum(axis=0)
            sum_yyww += (yw * yw).sum(axis=0)
            sum_yww += (yw * w[:, None]).sum(axis=0)
            remaining -= n
            chunk += 1
    if not accepted or sum_w <= 0:
        raise exceptions.NoAcceptedSamples(samples)

    mean_w = sum_w / samples
    var_w = max(sum_ww / samples - mean_w ** 2, 0.0)
    barycenter = sum_yw / sum_w
    # Delta method for the ratio estimator sum(y w) / sum(w).
    residual = (sum_yyww - 2 * barycenter * sum_yww +
                barycenter ** 2 * sum_ww) / samples
    barycenter_stderr = numpy.sqrt(numpy.maximum(residual, 0.0) /
                                   samples) / mean_w
    result = MonteCarloMoments(
        vol_pi=box * mean_w,
        vol_pi_stderr=box * math.sqrt(var_w / samples),
        barycenter=tuple(float(x) for x in barycenter),
        barycenter_stderr=tuple(float(x) for x in barycenter_stderr),
        samples=samples, accepted=accepted, seed=seed)
    LOG.info("Monte-Carlo moments of %r from %d samples in %.2fs",
             p, samples, watch.elapsed())
    return result


def mc_agreement(exact, estimate, sigmas=None):
    """Compares exact moments with a Monte-Carlo estimate.

    :returns: list of human readable disagreements, empty when every
        quantity is within `sigmas` standard errors
    """
    sigmas = CONF.mc_sigmas if sigmas is None else sigmas
    checks = [('vol_pi', float(exact.vol_pi), estimate.vol_pi,
               estimate.vol_pi_stderr)]
    for i, (b, e, se) in enumerate(zip(exact.barycenter,
                                       estimate.barycenter,
                                       estimate.barycenter_stderr)):
        checks.append(('barycenter[%d]' % i, float(b), e, se))
    problems = []
    for name, value, approx, stderr in checks:
        if abs(value - approx) > sigmas * stderr + 1e-12:
            problems.append('%s: exact %.6g, estimate %.6g +- %.2g' % (
                name, value, approx, stderr))
    return problems
