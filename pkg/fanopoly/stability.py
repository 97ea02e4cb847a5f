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

"""Kahler-Einstein criterion and K-instability certificates.

The polytope admits a KE metric iff b(P+) - 2 rho lies in the relative
interior of the cone spanned by the positive roots.
"""

import logging

import sympy

from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg
from fanopoly import measure
from fanopoly import polytope
from fanopoly import rootsys

LOG = logging.getLogger(__name__)

_HALF = sympy.Rational(1, 2)


class Certificate(object):
    """A destabilizing direction together with its Futaki invariant."""

    def __init__(self, kind, futaki, index=None, xi=None):
        self.kind = kind
        self.futaki = futaki
        self.index = index
        self.xi = xi

    def __repr__(self):
        return "<Certificate %s index=%s xi=%s futaki=%s>" % (
            self.kind, self.index, self.xi, self.futaki)

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self):
        info = {'kind': self.kind}
        if self.kind == constants.CERTIFICATE_KIND_FUNDAMENTAL_WEIGHT:
            info['index'] = self.index
        else:
            info['xi'] = [str(x) for x in self.xi]
        info['futaki'] = str(self.futaki)
        return info


class Verdict(object):
    def __init__(self, status, c, center_component, barycenter, vol_pi,
                 certificate=None, reason=None):
        self.status = status
        self.c = c
        self.center_component = center_component
        self.barycenter = barycenter
        self.vol_pi = vol_pi
        self.certificate = certificate
        self.reason = reason

    def __repr__(self):
        return "<Verdict %s c=%s certificate=%r>" % (
            self.status, [str(x) for x in self.c], self.certificate)

    def to_dict(self):
        return {
            'status': self.status,
            'c': [str(x) for x in self.c],
            'center_component': [str(x) for x in self.center_component],
            'barycenter': [str(x) for x in self.barycenter],
            'vol_pi': str(self.vol_pi),
            'certificate': (self.certificate.to_dict()
                            if self.certificate else None),
            'reason': self.reason,
        }


def decompose_relative_barycenter(rs, b):
    """Writes b - 2 rho = sum_i c_i alpha_i + z with z central.

    :returns: (center component z, tuple c)
    """
    b = linalg.vector(b, rs.rank)
    if rootsys.chamber_position(rs, b) == constants.CHAMBER_OUTSIDE:
        LOG.warning("Barycenter %s lies outside the positive chamber",
                    [str(x) for x in b])
    target = linalg.sub(b, rs.two_rho)
    basis = list(rs.simple_roots) + list(rs.center_basis)
    columns = [tuple(v[i] for v in basis) for i in range(rs.rank)]
    x = linalg.solve(columns, target)
    if x is None:
        raise exceptions.PostconditionFailed(
            'decompose_relative_barycenter', 'singular root basis')
    n = rs.semisimple_rank
    c = tuple(x[:n])
    center = linalg.zero(rs.rank)
    for k, z in zip(x[n:], rs.center_basis):
        center = linalg.add(center, linalg.scale(k, z))
    residual = linalg.sub(linalg.add(rs.combine(c), center), target)
    if not linalg.is_zero(residual):
        raise exceptions.PostconditionFailed(
            'decompose_relative_barycenter', 'nonzero residual')
    return center, c


def futaki(rs, moments, xi=None, index=None):
    """Futaki invariant of a linear or fundamental-weight test direction.

    The linear kind returns vol_pi * <xi, b - 2 rho> for a central xi;
    the fundamental-weight kind, whose function restricts to <w_i, y> on
    P+, returns 1/2 c_i |alpha_i|^2 vol_pi.
    """
    if (xi is None) == (index is None):
        raise exceptions.InvalidParameter('xi/index', 'exactly one required')
    if index is not None:
        if not 0 <= index < rs.semisimple_rank:
            raise exceptions.IndexOutOfRange(index, rs.semisimple_rank)
        _, c = decompose_relative_barycenter(rs, moments.barycenter)
        alpha = rs.simple_roots[index]
        return _HALF * c[index] * rs.norm2(alpha) * moments.vol_pi

    xi = linalg.vector(xi, rs.rank)
    if any(rs.inner(alpha, xi) != 0 for alpha in rs.simple_roots):
        raise exceptions.NonCentralDirection(xi)
    relative = linalg.sub(moments.barycenter, rs.two_rho)
    return moments.vol_pi * rs.inner(xi, relative)


def ke_verdict(rs, p, moments=None):
    """Decides the KE criterion for `p`, certifying instability."""
    if moments is None:
        moments = measure.weighted_moments(p)
    center, c = decompose_relative_barycenter(rs, moments.barycenter)
    args = (c, center, moments.barycenter, moments.vol_pi)

    if not linalg.is_zero(center):
        certificate = Certificate(constants.CERTIFICATE_KIND_LINEAR,
                                  futaki(rs, moments, xi=center), xi=center)
        return Verdict(constants.VERDICT_STATUS_UNSTABLE, *args,
                       certificate=certificate,
                       reason='nonzero center component')
    if all(x > 0 for x in c):
        return Verdict(constants.VERDICT_STATUS_KE, *args)
    if any(x < 0 for x in c):
        index = c.index(min(c))
        certificate = Certificate(
            constants.CERTIFICATE_KIND_FUNDAMENTAL_WEIGHT,
            futaki(rs, moments, index=index), index=index)
        return Verdict(constants.VERDICT_STATUS_UNSTABLE, *args,
                       certificate=certificate,
                       reason='negative root coefficient')
    return Verdict(constants.VERDICT_STATUS_BOUNDARY, *args,
                   reason='boundary of criterion')


def witness_gap(rs, p, moments):
    """Returns phi(2 rho) - phi(b) for phi = u_A0, the witness normal.

    A positive gap already rules out a KE metric: inside 2 rho + Xi the
    dominant normal u_A0 can only increase.
    """
    witness = polytope.label_I(p).witness
    return linalg.dot(witness.u, linalg.sub(rs.two_rho, moments.barycenter))
