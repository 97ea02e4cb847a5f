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

from oslo_config import cfg

from fanopoly.i18n import _

CONF = cfg.CONF

classification_opts = [
    cfg.StrOpt('group',
               default='so4',
               help=_('Root system type label, e.g. so4, A2, B2, G2.')),
    cfg.StrOpt('rho_max',
               default='3',
               help=_('Label cutoff in rho-units; the I-unit cutoff is '
                      'twice this value.')),
    cfg.IntOpt('parallel',
               default=1,
               min=1,
               help=_('Number of worker processes used to explore '
                      'candidate normal subsets.')),
]

sampling_opts = [
    cfg.IntOpt('mc_samples',
               default=1000000,
               min=0,
               help=_('Monte-Carlo samples drawn by --verify.')),
    cfg.IntOpt('mc_chunk_size',
               default=100000,
               min=1,
               help=_('Samples per counter-based random stream.')),
    cfg.FloatOpt('mc_sigmas',
                 default=3.0,
                 min=0.0,
                 help=_('Allowed distance, in standard errors, between the '
                        'exact moments and the Monte-Carlo estimate.')),
    cfg.IntOpt('seed',
               default=0,
               min=0,
               help=_('Default Monte-Carlo seed, overridden by '
                      'FANOPOLY_SEED.')),
]

computation_opts = [
    cfg.StrOpt('omega_tolerance',
               default='1/1000000000',
               help=_('Width of the enclosing interval returned for the '
                      'cutoff omega(n).')),
    cfg.IntOpt('weyl_group_cap',
               default=1000000,
               min=1,
               help=_('Abort Weyl group generation beyond this many '
                      'elements.')),
]

CONF.register_opts(classification_opts)
CONF.register_opts(sampling_opts)
CONF.register_opts(computation_opts)


def parse_config(config_files=None):
    CONF(args=[], project='fanopoly',
         default_config_files=list(config_files or []))


def list_opts():
    return [(None, classification_opts + sampling_opts + computation_opts)]
