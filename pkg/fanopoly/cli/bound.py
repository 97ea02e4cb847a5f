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
Command-line interface sub-commands related to the cutoff omega(n).
"""

from cliff import show

from fanopoly import bound
from fanopoly.cli import formatter
from fanopoly.cli import utils


class OmegaFormatter(formatter.EntityFormatter):

    columns = ("Dimension",
               "Label lower",
               "Label upper",
               "Label approx",
               "Rho lower",
               "Rho upper",
               "Rho approx",
               "Omega (rho units)",
               )

    def _get_formatted_data(self, obj):
        info = obj.to_dict()
        rho_lo, rho_hi = info['rho_interval']
        return (obj.n,
                info['label_interval'][0],
                info['label_interval'][1],
                "%.4f" % info['approx']['label'],
                rho_lo,
                rho_hi,
                "%.4f" % info['approx']['rho'],
                "%.2f" % float(obj.rounded_rho_units),
                )


class ShowOmega(utils.InternalErrorMixin, show.ShowOne):
    """Encloses the label cutoff omega(n) above which no KE metric exists"""

    def get_parser(self, prog_name):
        parser = super(ShowOmega, self).get_parser(prog_name)
        parser.add_argument('--dim', metavar='<n>', required=True,
                            type=utils.positive_int_arg,
                            help='Complex dimension of the compactification.')
        parser.add_argument('--tol', metavar='<tolerance>',
                            type=utils.rational_arg,
                            help='Width of the enclosing interval.')
        return parser

    def take_action(self, args):
        interval = bound.omega_generic(args.dim, args.tol)
        return OmegaFormatter().get_formatted_entity(interval)
