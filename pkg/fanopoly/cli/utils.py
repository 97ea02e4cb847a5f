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


import argparse
import contextlib
import json
import logging
import os
import sys

from fanopoly import base
from fanopoly import conf
from fanopoly import constants
from fanopoly import exceptions
from fanopoly import linalg

CONF = conf.CONF

LOG = logging.getLogger(__name__)


def format_json_for_object_property(obj, prop_name):
    """ Returns the property given by `prop_name` of the given
    object as a compact JSON string with exact rationals as strings """
    prop = getattr(obj, prop_name, None)
    if prop is None:
        # NOTE: return an empty JSON list string to
        # clearly-indicate it's a JSON
        return "[]"
    return format_json(prop)


def format_json(value):
    """ Compact JSON with exact rationals as "p/q" strings """
    if hasattr(value, 'tolist'):
        value = value.tolist()
    return json.dumps(base.serialize(value))


def rational_arg(value):
    """ argparse type for exact rationals such as '3', '7/2' or '0.25' """
    try:
        return linalg.rational(value)
    except exceptions.InvalidRational as ex:
        raise argparse.ArgumentTypeError(str(ex))


def non_negative_int_arg(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not an integer" % value)
    if number < 0:
        raise argparse.ArgumentTypeError("'%s' is negative" % value)
    return number


def positive_int_arg(value):
    number = non_negative_int_arg(value)
    if number == 0:
        raise argparse.ArgumentTypeError("'%s' must be at least 1" % value)
    return number


def env(var_name, default=None):
    return os.environ.get(var_name, default)


def default_seed():
    """ The Monte-Carlo seed from env[FANOPOLY_SEED], else the config """
    raw_value = env(constants.SEED_ENV_VAR)
    if raw_value is None:
        return CONF.seed
    try:
        return non_negative_int_arg(raw_value)
    except argparse.ArgumentTypeError as ex:
        raise exceptions.InvalidParameter(constants.SEED_ENV_VAR, str(ex))


def add_polytope_args_to_parser(parser):
    """ Given an `argparse.ArgumentParser` instance, add a group of
    mutually-exclusive polytope inputs: '--polytope' (path to a polytope
    JSON file, classify records accepted) and '--normals' (inline JSON
    list of outer normals for the group given by '--group').
    """
    arg_group = parser.add_mutually_exclusive_group(required=True)
    arg_group.add_argument('--polytope',
                           metavar='<polytope-file>',
                           help='Relative/full path to a file containing '
                                'the polytope in JSON format')
    arg_group.add_argument('--normals',
                           metavar='<normals-json>',
                           help='JSON encoded list of outer normals, '
                                'e.g. "[[1, 1], [1, -1]]"')
    parser.add_argument('--group',
                        metavar='<group>',
                        default=CONF.group,
                        help='Root system type label used with --normals. '
                             'Defaults to %s.' % CONF.group)
    return parser


def get_polytope_from_args(args):
    """ Returns the polytope JSON document given by the arguments set up
    by calling `add_polytope_args_to_parser` """
    if args.polytope:
        try:
            with open(args.polytope) as fin:
                raw_value = fin.read()
        except (IOError, OSError) as ex:
            raise exceptions.MalformedPolytopeFile(str(ex))
        label = "polytope file"
    else:
        raw_value = args.normals
        label = "normals"

    try:
        value = json.loads(raw_value)
    except ValueError as ex:
        raise exceptions.MalformedPolytopeFile(
            "Error while parsing %s JSON: %s" % (label, str(ex)))

    if args.normals:
        value = {'group': args.group, 'outer_normals': value}
    return value


@contextlib.contextmanager
def open_output(path=None, stream=None):
    """ Yields the output stream: the file at `path`, else `stream` """
    if path and path != '-':
        with open(path, 'w') as fout:
            yield fout
    else:
        yield stream or sys.stdout


def write_json_lines(stream, records):
    """ Writes each record as one JSON line, preserving field order """
    for record in records:
        stream.write(json.dumps(base.serialize(record)))
        stream.write("\n")


class CliConfig(object):
    """ The validated settings of one command invocation """

    def __init__(self, command, group=None, rho_max=None, polytope_path=None,
                 mc_samples=None, seed=None, output=None, parallel=None):
        if command not in constants.COMMANDS:
            raise exceptions.InvalidParameter('command', command)
        self.command = command
        self.group = CONF.group if group is None else group
        self.rho_max = linalg.rational(
            CONF.rho_max if rho_max is None else rho_max)
        if self.rho_max < 0:
            raise exceptions.InvalidCutoff(self.rho_max, 0)
        self.polytope_path = polytope_path
        self.mc_samples = CONF.mc_samples if mc_samples is None else (
            mc_samples)
        if self.mc_samples < 0:
            raise exceptions.InvalidSampleCount(self.mc_samples)
        self.seed = default_seed() if seed is None else seed
        self.output = output
        self.parallel = CONF.parallel if parallel is None else parallel
        if self.parallel < 1:
            raise exceptions.InvalidParameter('parallel', self.parallel)

    def __repr__(self):
        return "<CliConfig %s group=%s>" % (self.command, self.group)

    @classmethod
    def from_args(cls, command, args):
        return cls(command,
                   group=getattr(args, 'group', None),
                   rho_max=getattr(args, 'rho_max', None),
                   polytope_path=getattr(args, 'polytope', None),
                   mc_samples=getattr(args, 'mc_samples', None),
                   seed=getattr(args, 'seed', None),
                   output=getattr(args, 'output', None),
                   parallel=getattr(args, 'parallel', None))


class InternalErrorMixin(object):
    """ Maps internal inconsistencies to their own exit status.

    Must precede the cliff command class in the bases.
    """

    def run(self, parsed_args):
        try:
            return super(InternalErrorMixin, self).run(parsed_args)
        except exceptions.InternalInconsistency as ex:
            LOG.error("Internal inconsistency: %s", ex)
            return constants.EXIT_INTERNAL_ERROR
