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

"""
Command-line interface to the Q-Fano group compactification classifier.
"""

import logging
import sys

from cliff import app
from cliff import commandmanager

from fanopoly import client
from fanopoly import conf
from fanopoly import constants
from fanopoly import version
from fanopoly.cli import bound
from fanopoly.cli import classification
from fanopoly.cli import polytopes
from fanopoly.cli import rootsys
from fanopoly.cli import utils

LOG = logging.getLogger(__name__)

# NOTE: registered explicitly as well so that the commands are available
# from a source checkout without installed entry points.
_COMMANDS = {
    constants.COMMAND_CLASSIFY: classification.Classify,
    constants.COMMAND_CHECK: polytopes.CheckPolytope,
    constants.COMMAND_BARYCENTER: polytopes.PolytopeBarycenter,
    constants.COMMAND_OMEGA: bound.ShowOmega,
    constants.COMMAND_ROOTSYS_SHOW: rootsys.ShowRootSystem,
}


class ClientManager(object):
    """Creates one client per root system label on demand."""

    def __init__(self):
        self._clients = {}

    def get_client(self, group):
        if group not in self._clients:
            self._clients[group] = client.Client(group)
        return self._clients[group]


class Fanopoly(app.App):
    """Fanopoly command line interface."""

    def __init__(self, **kwargs):
        self.client_manager = None

        command_manager = commandmanager.CommandManager('fanopoly.cli')
        for name, command_class in sorted(_COMMANDS.items()):
            command_manager.add_command(name, command_class)

        super(Fanopoly, self).__init__(
            description=__doc__.strip(),
            version=version.__version__ or 'unknown',
            command_manager=command_manager,
            deferred_help=True,
            **kwargs
        )

    def build_option_parser(self, description, version, argparse_kwargs=None):
        """Introduces global arguments for the application.
        This is inherited from the framework.
        """
        parser = super(Fanopoly, self).build_option_parser(
            description, version, argparse_kwargs)
        parser.add_argument('--config-file',
                            metavar='<config-file>',
                            action='append',
                            default=self._env_list('FANOPOLY_CONFIG_FILE'),
                            help='Ini file with [DEFAULT] options, may be '
                                 'repeated. Defaults to '
                                 'env[FANOPOLY_CONFIG_FILE].')
        parser.epilog = ('See "fanopoly help COMMAND" for help '
                         'on a specific command.')
        return parser

    def _env(self, var_name, default=None):
        return utils.env(var_name, default)

    def _env_list(self, var_name):
        value = self._env(var_name)
        return [value] if value else []

    def initialize_app(self, argv):
        """Loads the configuration before any command parser is built.
        This is inherited from the framework.
        """
        conf.parse_config(self.options.config_file)

    def prepare_to_run_command(self, cmd):
        """Prepares to run the command by creating the client manager.
        This is inherited from the framework.
        """
        self.client_manager = ClientManager()

    def run_subcommand(self, argv):
        try:
            self.command_manager.find_command(argv)
        except ValueError as ex:
            LOG.error(ex)
            return constants.EXIT_INVALID_INPUT
        return super(Fanopoly, self).run_subcommand(argv)

    def run(self, argv):
        # If no arguments are provided, usage is displayed
        if not argv:
            self.stderr.write(self.parser.format_usage())
            return constants.EXIT_INVALID_INPUT
        return super(Fanopoly, self).run(argv)


def _setup_logging():
    logging.getLogger("stevedore").setLevel(logging.WARNING)


def main(argv=sys.argv[1:]):
    _setup_logging()
    fanopoly_app = Fanopoly()
    try:
        return fanopoly_app.run(argv)
    except SystemExit as ex:
        # argparse exits with status 2 on bad flags; that is invalid input
        if ex.code == 2:
            return constants.EXIT_INVALID_INPUT
        return ex.code or constants.EXIT_OK


if __name__ == '__main__':   # pragma: no cover
    sys.exit(main(sys.argv[1:]))
