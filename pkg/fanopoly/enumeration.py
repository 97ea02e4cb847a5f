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

"""Enumeration of Q-Fano polytopes below a label cutoff.

Candidate outer normals are the primitive chamber vectors with
0 < rho(u) <= p_max. Every subset of candidates is a potential polytope;
the search walks subsets depth first in candidate order and cuts a branch
as soon as one of its normals is redundant, since adding normals can never
turn a non-facet into a facet.
"""

import itertools
import logging
import math

from concurrent import futures
from oslo_utils import timeutils

from fanopoly import base
from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg
from fanopoly import measure
from fanopoly import polytope
from fanopoly import rootsys
from fanopoly import stability

LOG = logging.getLogger(__name__)


class PolytopeRecord(base.Resource):
    FIELDS = ('group', 'outer_normals', 'status', 'label_I', 't0', 'fine',
              'vertices', 'positive_vertices', 'vol_pi', 'barycenter',
              'verdict', 'witness_gap', 'approx')

    @property
    def canonical_key(self):
        return tuple(tuple(u) for u in self.outer_normals)


class ClassificationReport(base.Resource):
    FIELDS = ('group', 'rho_max', 'label_max', 'candidates',
              'candidates_considered', 'valid_count', 'ke_count',
              'ke_list', 'valid_polytopes')

    def summary(self):
        info = self.to_dict()
        info.pop('valid_polytopes')
        return info


def evaluate_polytope(rs, p, moments=None):
    """Computes the label, fineness, moments and verdict of `p`."""
    label = polytope.label_I(p)
    if moments is None:
        moments = measure.weighted_moments(p)
    verdict = stability.ke_verdict(rs, p, moments)
    gap = stability.witness_gap(rs, p, moments)
    info = {
        'group': polytope.group_label(rs),
        'outer_normals': [tuple(int(x) for x in f.u)
                          for f in p.outer_normals],
        'status': verdict.status,
        'label_I': label.value,
        't0': label.t0,
        'fine': polytope.is_fine(p),
        'vertices': list(p.vertices),
        'positive_vertices': list(p.positive_part.vertices),
        'vol_pi': moments.vol_pi,
        'barycenter': moments.barycenter,
        'verdict': verdict,
        'witness_gap': gap,
        'approx': {
            'label_I': float(label.value),
            'vol_pi': float(moments.vol_pi),
            'barycenter': [float(x) for x in moments.barycenter],
            'c': [float(x) for x in verdict.c],
        },
    }
    return PolytopeRecord(None, info)


def candidate_normals(rs, p_max):
    """Primitive chamber normals u with 0 < rho(u) <= p_max.

    Each simple root satisfies 0 <= alpha_j(u) <= 2 rho(u) on the chamber,
    so the search box is the preimage of [0, 2 p_max]^2.
    """
    if rs.rank != 2:
        raise exceptions.UnsupportedRank(rs.rank)
    if not rs.is_semisimple:
        raise exceptions.NotSemisimple(rs.type_label)
    p_max = linalg.rational(p_max)
    if p_max < 0:
        raise exceptions.InvalidCutoff(p_max, 0)
    if p_max == 0:
        return []

    rows = [list(a) for a in rs.simple_roots]
    corners = [linalg.solve(rows, (a, b))
               for a in (0, 2 * p_max) for b in (0, 2 * p_max)]
    bounds = [(math.floor(min(c[i] for c in corners)),
               math.ceil(max(c[i] for c in corners))) for i in range(2)]

    candidates = []
    for u in itertools.product(*[range(lo, hi + 1) for lo, hi in bounds]):
        u = linalg.vector(u)
        if not linalg.is_primitive(u):
            continue
        if any(linalg.dot(a, u) < 0 for a in rs.simple_roots):
            continue
        rho = rootsys.rho_pairing(rs, u)
        if 0 < rho <= p_max:
            candidates.append((rho, u))
    candidates.sort()
    result = [u for _, u in candidates]
    for u in result:
        _check_coefficient_box(rs, u)
    return result


def _check_coefficient_box(rs, u):
    """Asserts c_j <= 4 rho(u) / |alpha_j|^2 for iota(u) = sum c_j alpha_j."""
    weight = rs.to_weight(u)
    columns = [tuple(a[i] for a in rs.simple_roots) for i in range(rs.rank)]
    c = linalg.solve(columns, weight)
    rho = rootsys.rho_pairing(rs, u)
    for c_j, alpha in zip(c, rs.simple_roots):
        if not 0 <= c_j <= 4 * rho / rs.norm2(alpha):
            raise exceptions.PostconditionFailed(
                'candidate_normals',
                'normal %s escapes the coefficient box' % (list(u),))


def _explore(rs, candidates, first):
    """Walks the subsets whose least candidate index is `first`.

    :returns: (list of PolytopeRecord, number of subsets visited)
    """
    records = []
    visited = 0
    stack = [((first,), first + 1)]
    while stack:
        chosen, start = stack.pop()
        visited += 1
        try:
            p = polytope.build_polytope(rs, [candidates[i] for i in chosen])
        except exceptions.RedundantNormal:
            continue
        except exceptions.UnboundedPolytope:
            pass
        else:
            record = evaluate_polytope(rs, p)
            if not record.fine:
                raise exceptions.PostconditionFailed(
                    'classify', '%r is not fine' % p)
            records.append(record)
        for j in reversed(range(start, len(candidates))):
            stack.append((chosen + (j,), j + 1))
    return records, visited


def _explore_branch(args):
    label, convention, gram_scale, candidates, first = args
    rs = rootsys.build_root_system(label, convention, gram_scale)
    return _explore(rs, [linalg.vector(u) for u in candidates], first)


def classify(rs, p_max, parallel=1):
    """Classifies all polytopes whose outer normals have rho(u) <= p_max.

    Branches of the subset search run on `parallel` worker processes; the
    report does not depend on the schedule.
    """
    if not rs.is_semisimple:
        raise exceptions.NotSemisimple(rs.type_label)
    if rs.rank != 2:
        raise exceptions.UnsupportedRank(rs.rank)
    p_max = linalg.rational(p_max)
    if p_max < 1:
        raise exceptions.InvalidCutoff(p_max, 1)

    candidates = candidate_normals(rs, p_max)
    records = []
    visited = 0
    with timeutils.StopWatch() as watch:
        if parallel > 1 and len(candidates) > 1:
            jobs = [(rs.type_label, rs.convention, rs.gram_scale,
                     [tuple(int(x) for x in u) for u in candidates], first)
                    for first in range(len(candidates))]
            with futures.ProcessPoolExecutor(max_workers=parallel) as pool:
                results = list(pool.map(_explore_branch, jobs))
        else:
            results = [_explore(rs, candidates, first)
                       for first in range(len(candidates))]
        for branch_records, branch_visited in results:
            records.extend(branch_records)
            visited += branch_visited
    records.sort(key=lambda r: r.canonical_key)

    ke_list = [r for r in records
               if r.status == constants.VERDICT_STATUS_KE]
    LOG.info("Classified %s up to rho %s: %d subsets, %d polytopes, %d KE "
             "in %.2fs", rs.type_label, p_max, visited, len(records),
             len(ke_list), watch.elapsed())
    return ClassificationReport(None, {
        'group': polytope.group_label(rs),
        'rho_max': p_max,
        'label_max': 2 * p_max,
        'candidates': [tuple(int(x) for x in u) for u in candidates],
        'candidates_considered': visited,
        'valid_count': len(records),
        'ke_count': len(ke_list),
        'ke_list': [list(r.outer_normals) for r in ke_list],
        'valid_polytopes': records,
    })
