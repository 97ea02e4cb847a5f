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
"""
Command-line interface sub-commands related to root systems.
"""

from cliff import show

from fanopoly import conf
from fanopoly import rootsys
from fanopoly.cli import formatter
from fanopoly.cli import utils

CONF = conf.CONF


class RootSystemFormatter(formatter.EntityFormatter):

    columns = ("Type",
               "Convention",
               "Rank",
               "Semisimple rank",
               "Gram matrix",
               "Cartan matrix",
               "Inverse Cartan matrix",
               "Simple roots",
               "Positive roots",
               "Fundamental weights",
               "2 rho",
               "Center basis",
               "Weyl group order",
               )

    def _get_formatted_data(self, obj):
        fmt = utils.format_json_for_object_property
        return (obj.type_label,
                obj.convention,
                obj.rank,
                obj.semisimple_rank,
                self._format_json(obj.gram),
                self._format_json(obj.cartan),
                self._format_json(rootsys.inverse_cartan(obj)),
                fmt(obj, 'simple_roots'),
                fmt(obj, 'positive_roots'),
                fmt(obj, 'fundamental_weights'),
                fmt(obj, 'two_rho'),
                fmt(obj, 'center_basis'),
                len(obj.weyl_elements),
                )


class ShowRootSystem(utils.InternalErrorMixin, show.ShowOne):
    """Shows the roots, weights and Cartan data of a root system"""

    def get_parser(self, prog_name):
        parser = super(ShowRootSystem, self).get_parser(prog_name)
        parser.add_argument('--group', metavar='<group>',
                            default=CONF.group,
                            help='Root system type label, e.g. so4, A2, B2, '
                                 'G2 or A1xT1. Defaults to %s.' % CONF.group)
        return parser

    def take_action(self, args):
        rs = self.app.client_manager.get_client(args.group).root_system
        return RootSystemFormatter().get_formatted_entity(rs)
