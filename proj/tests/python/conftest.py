# Copyright 2026 The optbch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("OPTBCH_CLI", str(ROOT / "build" / "optbch"))

    def run(*args, env=None):
        merged = dict(os.environ)
        merged.update(env or {})
        return subprocess.run([exe, *map(str, args)], capture_output=True, text=True, env=merged, timeout=600)

    return run


@pytest.fixture(scope="session")
def schema():
    with open(ROOT / "docs" / "certificate.schema.json") as f:
        return json.load(f)
