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

from fanopoly import base
from fanopoly import conf
from fanopoly import enumeration
from fanopoly import exceptions
from fanopoly import measure
from fanopoly import polytope
from fanopoly import stability

CONF = conf.CONF


class PolytopeManager(base.BaseManager):
    resource_class = enumeration.PolytopeRecord

    def build(self, normals):
        return polytope.build_polytope(self.root_system, normals)

    def load(self, data):
        """Builds the polytope described by a polytope JSON document."""
        group, normals = polytope.parse_polytope_dict(data)
        expected = polytope.group_label(self.root_system)
        if group != expected:
            raise exceptions.MalformedPolytopeFile(
                "group '%s' does not match '%s'" % (group, expected))
        return self.build(normals)

    def moments(self, p, weight=None, anchor=None):
        kwargs = {'anchor': anchor} if anchor else {}
        return measure.weighted_moments(p, weight=weight, **kwargs)

    def monte_carlo(self, p, samples=None, seed=None, weight=None):
        samples = CONF.mc_samples if samples is None else samples
        seed = CONF.seed if seed is None else seed
        return measure.mc_moments(p, samples, seed, weight=weight)

    def verify(self, p, moments, samples=None, seed=None, weight=None):
        """Checks exact moments against the Monte-Carlo oracle.

        :raises: VerificationFailed on disagreement
        """
        estimate = self.monte_carlo(p, samples, seed, weight=weight)
        problems = measure.mc_agreement(moments, estimate)
        if problems:
            raise exceptions.VerificationFailed('; '.join(problems))
        return estimate

    def verdict(self, p, moments=None):
        return stability.ke_verdict(self.root_system, p, moments)

    def evaluate(self, p, moments=None):
        record = enumeration.evaluate_polytope(self.root_system, p, moments)
        return self._make(record.to_info())
