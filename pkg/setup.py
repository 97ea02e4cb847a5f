# Copyright (c) 2013 Hewlett-Packard Development Company, L.P.
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

import os

import setuptools

# pbr reads the version from git; source tarballs without history fall
# back to this one.
if not os.path.isdir(os.path.join(os.path.dirname(
        os.path.abspath(__file__)), '.git')):
    os.environ.setdefault('PBR_VERSION', '0.1.0')

setuptools.setup(
    setup_requires=['pbr>=2.0'],
    pbr=True)
