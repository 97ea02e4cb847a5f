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
Command-line interface sub-commands related to classification.
"""

from cliff import command

from fanopoly import conf
from fanopoly import constants
from fanopoly.cli import utils

CONF = conf.CONF


class Classify(utils.InternalErrorMixin, command.Command):
    """Classifies the Q-Fano polytopes of a group up to a rho cutoff"""

    def get_parser(self, prog_name):
        parser = super(Classify, self).get_parser(prog_name)
        parser.add_argument('--group', metavar='<group>',
                            default=CONF.group,
                            help='Root system type label. '
                                 'Defaults to %s.' % CONF.group)
        parser.add_argument('--rho-max', metavar='<rho-max>',
                            type=utils.rational_arg,
                            default=CONF.rho_max,
                            help='Cutoff on rho(u) for the outer normals. '
                                 'Defaults to %s.' % CONF.rho_max)
        parser.add_argument('--parallel', metavar='<workers>',
                            type=utils.positive_int_arg,
                            default=CONF.parallel,
                            help='Number of worker processes.')
        parser.add_argument('--output', metavar='<path>',
                            help='Write JSON lines to this file instead of '
                                 'stdout.')
        return parser

    def take_action(self, args):
        config = utils.CliConfig.from_args(constants.COMMAND_CLASSIFY, args)
        client = self.app.client_manager.get_client(config.group)
        report = client.classification.classify(config.rho_max,
                                                config.parallel)
        records = list(report.valid_polytopes) + [report.summary()]
        with utils.open_output(config.output, self.app.stdout) as stream:
            utils.write_json_lines(stream, records)
