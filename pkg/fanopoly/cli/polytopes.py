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
Command-line interface sub-commands related to single polytopes.
"""

import collections

from cliff import command

from fanopoly import constants
from fanopoly import polytope
from fanopoly.cli import utils


def _add_sampling_args(parser):
    parser.add_argument('--verify', action='store_true',
                        help='Cross-check the exact moments against the '
                             'Monte-Carlo oracle; exits with status 2 on '
                             'disagreement.')
    parser.add_argument('--mc-samples', metavar='<samples>',
                        type=utils.non_negative_int_arg,
                        help='Number of Monte-Carlo samples.')
    parser.add_argument('--seed', metavar='<seed>',
                        type=utils.non_negative_int_arg,
                        help='Monte-Carlo seed. Defaults to '
                             'env[%s].' % constants.SEED_ENV_VAR)
    parser.add_argument('--output', metavar='<path>',
                        help='Write JSON lines to this file instead of '
                             'stdout.')
    return parser


class _PolytopeCommand(utils.InternalErrorMixin, command.Command):
    command_name = None

    def get_parser(self, prog_name):
        parser = super(_PolytopeCommand, self).get_parser(prog_name)
        utils.add_polytope_args_to_parser(parser)
        _add_sampling_args(parser)
        return parser

    def _load(self, args):
        data = utils.get_polytope_from_args(args)
        group, normals = polytope.parse_polytope_dict(data)
        client = self.app.client_manager.get_client(group)
        return client, client.polytopes.build(normals)

    def _emit(self, config, records):
        with utils.open_output(config.output, self.app.stdout) as stream:
            utils.write_json_lines(stream, records)


class CheckPolytope(_PolytopeCommand):
    """Evaluates a polytope: label, fineness, moments and KE verdict"""

    def take_action(self, args):
        config = utils.CliConfig.from_args(constants.COMMAND_CHECK, args)
        client, p = self._load(args)
        moments = client.polytopes.moments(p)
        if args.verify:
            client.polytopes.verify(p, moments, config.mc_samples,
                                    config.seed)
        record = client.polytopes.evaluate(p, moments)
        self._emit(config, [record])


class PolytopeBarycenter(_PolytopeCommand):
    """Computes the exact pi-weighted volume and barycenter of P+"""

    def get_parser(self, prog_name):
        parser = super(PolytopeBarycenter, self).get_parser(prog_name)
        parser.add_argument('--anchor',
                            choices=[constants.TRIANGULATION_ANCHOR_MIN,
                                     constants.TRIANGULATION_ANCHOR_MAX],
                            default=constants.TRIANGULATION_ANCHOR_MIN,
                            help='Vertex each triangulation star is coned '
                                 'from.')
        return parser

    def take_action(self, args):
        config = utils.CliConfig.from_args(
            constants.COMMAND_BARYCENTER, args)
        client, p = self._load(args)
        moments = client.polytopes.moments(p, anchor=args.anchor)

        info = collections.OrderedDict()
        info['group'] = polytope.group_label(client.root_system)
        info['outer_normals'] = polytope.polytope_to_dict(p)['outer_normals']
        info['vol_pi'] = moments.vol_pi
        info['barycenter'] = moments.barycenter
        info['simplex_count'] = moments.simplex_count
        info['approx'] = collections.OrderedDict([
            ('vol_pi', float(moments.vol_pi)),
            ('barycenter', [float(x) for x in moments.barycenter]),
        ])
        if args.verify:
            info['monte_carlo'] = client.polytopes.verify(
                p, moments, config.mc_samples, config.seed)
        elif args.mc_samples:
            info['monte_carlo'] = client.polytopes.monte_carlo(
                p, config.mc_samples, config.seed)
        self._emit(config, [info])
