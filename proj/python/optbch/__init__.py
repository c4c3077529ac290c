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

"""Binary BCH code families: exact parameters and optimality certificates."""

from ._core import (
    CapExceeded,
    CyclicCode,
    __version__,
    bch_code,
    certificate,
    cyclic_code,
    cyclotomic_cosets,
    empirical_threshold,
    family_code,
    macwilliams,
    min_distance,
    ord_mod,
    parse_certificate,
    sphere_packing_admits,
    sphere_packing_max_d,
    verify,
    weight_distribution,
)

__all__ = [
    "CapExceeded",
    "CyclicCode",
    "__version__",
    "bch_code",
    "certificate",
    "cyclic_code",
    "cyclotomic_cosets",
    "empirical_threshold",
    "family_code",
    "macwilliams",
    "min_distance",
    "ord_mod",
    "parse_certificate",
    "sphere_packing_admits",
    "sphere_packing_max_d",
    "verify",
    "weight_distribution",
]
