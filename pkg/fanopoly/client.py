# Copyright (c) 2018 Cloudbase Solutions Srl
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
import logging

from fanopoly import rootsys
from fanopoly.managers import classification
from fanopoly.managers import polytopes

LOG = logging.getLogger(__name__)

_DEFAULT_GROUP = 'so4'


class Client(object):
    def __init__(self, group=_DEFAULT_GROUP, convention=None, gram_scale=1):
        self.root_system = rootsys.build_root_system(
            group, convention=convention, gram_scale=gram_scale)
        LOG.debug("Created client for %r", self.root_system)

        self.polytopes = polytopes.PolytopeManager(self)
        self.classification = classification.ClassificationManager(self)
