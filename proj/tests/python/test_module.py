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

import jsonschema
import pytest

import optbch


def test_hamming_code():
    c = optbch.bch_code(7, 3, 1)
    assert (c.length, c.dimension) == (7, 4)
    assert c.generator_hex == "0xb"
    d = optbch.min_distance(c)
    assert d["exact"] and d["lower"] == 3
    assert optbch.weight_distribution(c) == {0: 1, 3: 7, 4: 7, 7: 1}
    assert c.encode([1, 0, 0, 0]) == [1, 1, 0, 1, 0, 0, 0]
    assert c.is_codeword([1, 1, 0, 1, 0, 0, 0])
    assert not c.is_codeword([1, 0, 0, 0, 0, 0, 0])


def test_family_dual_enumerator():
    c = optbch.family_code("type1", 2)
    assert (c.length, c.dimension, c.field_degree) == (51, 43, 8)
    assert optbch.weight_distribution(c.dual()) == {0: 1, 24: 204, 32: 51}
    primary = optbch.macwilliams({0: 1, 24: 204, 32: 51}, 51, 8)
    assert primary[3] == 17
    assert sum(primary.values()) == 2**43


def test_big_counts_are_python_ints():
    primary = optbch.macwilliams({0: 1, 224: 3640, 256: 455}, 455, 12)
    assert sum(primary.values()) == 2**443


def test_cosets_and_order():
    assert optbch.ord_mod(51) == 8
    assert optbch.cyclotomic_cosets(7) == [[0], [1, 2, 4], [3, 6, 5]]


def test_sphere_packing():
    assert optbch.sphere_packing_admits(7, 4, 3)
    assert not optbch.sphere_packing_admits(52, 43, 5)
    assert optbch.sphere_packing_max_d(52, 43) == 4


def test_certificate_validates_and_round_trips(schema):
    c = optbch.family_code("type1", 2)
    cert = optbch.certificate(c, extended=True)
    jsonschema.validate(cert, schema)
    assert cert["parameters"]["n"] == 52
    assert cert["verdicts"]["optimal"] is True
    assert int(cert["bounds"]["redundancy_space"]) == 2**9
    import json

    back = optbch.parse_certificate(json.dumps(cert))
    assert back == cert


def test_enumeration_cap():
    with pytest.raises(optbch.CapExceeded):
        optbch.weight_distribution(optbch.bch_code(51, 3), max_dim=20)


def test_verify_and_threshold():
    r = optbch.verify("type2", 3)
    assert r["n"] == 73 and r["k"] == 64 and r["ok"]
    assert optbch.empirical_threshold(4)["s_empirical"] == 6


def test_modulus_choice_does_not_change_weights():
    a = optbch.min_distance(optbch.bch_code(21, 5, 1))["distribution"]
    b = optbch.min_distance(optbch.bch_code(21, 5, 1, modulus=0x67))["distribution"]
    assert a == b
