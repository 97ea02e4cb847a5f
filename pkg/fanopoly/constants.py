# Copyright (c) 2016 Cloudbase Solutions Srl
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

VERDICT_STATUS_KE = "KE"
VERDICT_STATUS_UNSTABLE = "unstable"
VERDICT_STATUS_BOUNDARY = "boundary"

VERDICT_STATUSES = [
    VERDICT_STATUS_KE,
    VERDICT_STATUS_UNSTABLE,
    VERDICT_STATUS_BOUNDARY,
]

CERTIFICATE_KIND_LINEAR = "linear"
CERTIFICATE_KIND_FUNDAMENTAL_WEIGHT = "fundamental_weight"

CHAMBER_INTERIOR = "interior"
CHAMBER_WALL = "wall"
CHAMBER_OUTSIDE = "outside"

CONVENTION_ROOT = "root"
CONVENTION_SO4 = "so4"

CONVENTIONS = [
    CONVENTION_ROOT,
    CONVENTION_SO4,
]

GROUP_ALIASES = {
    "so4": ("A1xA1", CONVENTION_SO4),
}

TRIANGULATION_ANCHOR_MIN = "min"
TRIANGULATION_ANCHOR_MAX = "max"

COMMAND_CLASSIFY = "classify"
COMMAND_CHECK = "check"
COMMAND_BARYCENTER = "barycenter"
COMMAND_OMEGA = "omega"
COMMAND_ROOTSYS_SHOW = "rootsys-show"

COMMANDS = [
    COMMAND_CLASSIFY,
    COMMAND_CHECK,
    COMMAND_BARYCENTER,
    COMMAND_OMEGA,
    COMMAND_ROOTSYS_SHOW,
]

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INTERNAL_ERROR = 2

SEED_ENV_VAR = "FANOPOLY_SEED"
