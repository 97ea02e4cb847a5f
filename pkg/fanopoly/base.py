# Copyright 2010 Jacob Kaplan-Moss
# Copyright 2011 OpenStack Foundation
# Copyright 2012 Grid Dynamics
# Copyright 2013 OpenStack Foundation
# Copyright 2016 Cloudbase Solutions Srl
# Copyright (c) 2026 Fanopoly Developers
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import collections

import sympy


def serialize(value):
    """Converts computed values into JSON compatible data.

    Exact rationals become canonical "p/q" strings, never floats.
    """
    if isinstance(value, sympy.Rational):
        return str(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, dict):
        return collections.OrderedDict(
            (k, serialize(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    return value


class Resource(object):
    """Base class for computed records (polytopes, reports).

    This is pretty much just a bag for attributes. ``FIELDS`` fixes the
    serialisation order of :meth:`to_dict`.
    """

    FIELDS = ()

    def __init__(self, manager, info):
        """Populate and bind to a manager.

        :param manager: BaseManager object, or None
        :param info: dictionary representing resource attributes
        """
        self.manager = manager
        self._info = dict(info)
        self._add_details(info)

    def __repr__(self):
        reprkeys = sorted(k
                          for k in self.__dict__.keys()
                          if k[0] != '_' and k != 'manager')
        info = ", ".join("%s=%s" % (k, getattr(self, k)) for k in reprkeys)
        return "<%s %s>" % (self.__class__.__name__, info)

    def _add_details(self, info):
        for (k, v) in info.items():
            try:
                setattr(self, k, v)
            except AttributeError:
                # In this case we already defined the attribute on the class
                pass

    def __eq__(self, other):
        if not isinstance(other, Resource):
            return NotImplemented
        # two resources of different types are not equal
        if not isinstance(other, self.__class__):
            return False
        return self.to_dict() == other.to_dict()

    def __getstate__(self):
        # NOTE: managers hold a client and are not shipped to workers.
        state = self.__dict__.copy()
        state['manager'] = None
        return state

    def to_info(self):
        return dict(self._info)

    def to_dict(self):
        keys = [k for k in self.FIELDS if k in self._info]
        keys += sorted(k for k in self._info if k not in self.FIELDS)
        return collections.OrderedDict(
            (k, serialize(self._info[k])) for k in keys)


class BaseManager(object):
    """Basic manager type providing common operations.
    Managers expose the computations for one kind of record (polytopes,
    classifications) on behalf of a :class:`fanopoly.client.Client`.
    """
    resource_class = None

    def __init__(self, client):
        """Initializes BaseManager with `client`.
        :param client: the Client whose root system is used
        """
        super(BaseManager, self).__init__()
        self.client = client

    @property
    def root_system(self):
        return self.client.root_system

    def _make(self, info, obj_class=None):
        """Wraps computed data in a record.
        :param info: dictionary of record attributes
        :param obj_class: class for constructing the returned object
            (self.resource_class will be used by default)
        """
        if obj_class is None:
            obj_class = self.resource_class
        return obj_class(self, info)
