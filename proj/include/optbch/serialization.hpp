// Copyright 2026 The optbch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPTBCH_SERIALIZATION_HPP
#define OPTBCH_SERIALIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "optbch/bounds.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/cyclotomy.hpp"
#include "optbch/families.hpp"

namespace optbch {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "optbch";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCertificateSchemaVersion = 1;

/// {n, m, modulus_hex, beta_exp, defining_set_leaders, generator_hex, dimension}.
Json code_descriptor(const CyclicCode& code);

/// [[weight, "count"], ...] in ascending weight.
Json to_json(const WeightDistribution& wd);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
WeightDistribution weight_distribution_from_json(const Json& j, std::uint64_t n);

Json to_json(const DistanceBound& b);
DistanceBound distance_bound_from_json(const Json& j);
BoundSource parse_bound_source(const std::string& text);

Json to_json(const OptimalityCertificate& c);
Json to_json(const ThresholdReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const ConjectureStatus& s);
Json to_json(const CosetTable& t);
Json to_json(const FamilySpec& spec);

/// Certificate document written by `certify`. Integers that can grow
/// without bound are stored as decimal strings.
struct CertificateFile {
    Json code;               ///< code descriptor
    bool extended = false;   ///< parameters refer to the code with a parity bit appended
    std::uint64_t n = 0;     ///< length of the certified code
    std::uint64_t k = 0;
    DistanceBound d_lower;
    DistanceBound d_upper;
    std::uint64_t sphere_packing_max_d = 0;
    std::uint64_t sphere_packing_plain_max_d = 0;
    bool punctured = false;
    BigInt redundancy_space;
    BigInt ball_admitted;
    BigInt ball_next;
    BigInt punctured_space;
    BigInt punctured_ball;
    GriesmerResult griesmer;
    bool optimal = false;
    std::optional<WeightDistribution> weight_distribution;
    std::optional<WeightDistribution> dual_weight_distribution;
    std::string tool_version = kToolVersion;
    double wall_seconds = 0.0;
};

CertificateFile make_certificate_file(const CyclicCode& code, const OptimalityCertificate& cert,
                                      const DistanceResult& distance, bool extended, double wall_seconds);
Json to_json(const CertificateFile& f);
/// Throws std::invalid_argument on schema violations.
CertificateFile certificate_from_json(const Json& j);

}  // namespace optbch

#endif  // OPTBCH_SERIALIZATION_HPP
