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

from fanopoly.cli import utils


class EntityFormatter(object):
    """Base Mixin class formatting one computed entity for `ShowOne`.

    Subclasses declare ``columns`` and provide _get_formatted_data().
    """

    columns = ()

    def _format_json(self, value):
        return utils.format_json(value)

    def _get_formatted_data(self, obj):
        raise NotImplementedError()

    def get_formatted_entity(self, obj):
        data = tuple(self._get_formatted_data(obj))
        if len(data) != len(self.columns):
            raise ValueError("%s formats %d values for %d columns" % (
                self.__class__.__name__, len(data), len(self.columns)))
        return self.columns, data
