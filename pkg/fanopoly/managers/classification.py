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

CONF = conf.CONF


class ClassificationManager(base.BaseManager):
    resource_class = enumeration.ClassificationReport

    def candidates(self, rho_max=None):
        rho_max = CONF.rho_max if rho_max is None else rho_max
        return enumeration.candidate_normals(self.root_system, rho_max)

    def classify(self, rho_max=None, parallel=None):
        rho_max = CONF.rho_max if rho_max is None else rho_max
        parallel = CONF.parallel if parallel is None else parallel
        report = enumeration.classify(self.root_system, rho_max, parallel)
        return self._make(report.to_info())
