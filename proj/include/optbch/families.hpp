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

#ifndef OPTBCH_FAMILIES_HPP
#define OPTBCH_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optbch/bounds.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"

namespace optbch {

/// Type1: n = (2^2s + 1)(2^s - 1) in GF(2^4s).
/// Type2: n = 2^2s + 2^s + 1 in GF(2^3s).
/// Type3: n = (4^s - 1)/3 in GF(2^2s).
/// GeneralLambda: n = (2^s - 1)/lambda in GF(2^s).
enum class FamilyKind { Type1, Type2, Type3, GeneralLambda };

std::string to_string(FamilyKind k);
/// Accepts "type1", "type2", "type3", "lambda". Throws std::invalid_argument.
FamilyKind parse_family(std::string_view text);

/// BCH parameters (delta, b) selecting one code of a family.
struct Variant {
    std::uint64_t delta = 3;
    std::int64_t b = 1;
    friend bool operator==(const Variant&, const Variant&) = default;
};

/// "d3b1" style. Throws std::invalid_argument.
Variant parse_variant(std::string_view text);
std::string to_string(const Variant& v);

struct FamilySpec {
    FamilyKind kind = FamilyKind::Type1;
    std::uint64_t s = 2;
    std::uint64_t lambda = 1;
    Variant variant;
};

std::string to_string(const FamilySpec& spec);

/// Throws std::invalid_argument when the length is undefined (lambda does
/// not divide 2^s - 1) or the field degree would exceed 32.
std::uint64_t family_length(FamilyKind kind, std::uint64_t s, std::uint64_t lambda = 1);
/// 4s, 3s, 2s or s.
unsigned family_field_degree(FamilyKind kind, std::uint64_t s);
/// Largest odd i the family's coset lemma covers.
std::uint64_t family_lemma_bound(FamilyKind kind, std::uint64_t s, std::uint64_t lambda = 1);
/// Smallest s for which the family's coset lemma is stated.
std::uint64_t family_lemma_min_s(FamilyKind kind);

/// The BCH code C_(2, n, delta, b) of the family, over GF(2^m) with m the
/// family's field degree.
CyclicCode build_family_code(const FamilySpec& spec);

struct PredictedParameters {
    FamilySpec spec;
    std::string source;  ///< which result the prediction comes from
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d_lo = 0;
    std::uint64_t d_hi = 0;
    bool optimal = false;  ///< claimed distance-optimal by sphere packing
    std::optional<WeightDistribution> dual_enumerator;
    std::optional<BigInt> a3;

    bool has_extended = false;
    std::uint64_t ext_d_lo = 0;
    std::uint64_t ext_d_hi = 0;
    bool extended_optimal = false;
    std::optional<WeightDistribution> extended_dual_enumerator;
};

/// Closed-form prediction, or nothing outside the stated s-range of the
/// matching result.
std::optional<PredictedParameters> predict(const FamilySpec& spec);

/// Worked-example values, including the ones outside the theorem ranges.
std::optional<PredictedParameters> example_fixture(const FamilySpec& spec);

/// All (spec) pairs that have worked-example fixtures, in catalog order.
std::vector<FamilySpec> example_catalog();

enum class ItemStatus { Match, Mismatch, Unverified };
std::string to_string(ItemStatus s);

struct ReportItem {
    std::string name;
    std::string predicted;
    std::string measured;
    ItemStatus status = ItemStatus::Unverified;
    std::string note;
};

struct VerificationReport {
    FamilySpec spec;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    bool in_theorem_range = false;
    bool has_example = false;
    DistanceResult distance;
    std::optional<WeightDistribution> dual_distribution;
    ExtendedCode extended;
    OptimalityCertificate certificate;
    std::optional<OptimalityCertificate> extended_certificate;
    std::vector<ReportItem> items;

    bool ok() const;
};

struct VerifyOptions {
    DistanceOptions distance;
    /// Cap on the dual dimension for enumerator checks.
    unsigned max_enum_dim = 26;
};

/// Builds the code and checks every predicted item (theorem and worked
/// example) against computed values. Items that cannot be computed within
/// the caps are reported as Unverified.
VerificationReport verify_instance(const FamilySpec& spec, const VerifyOptions& opts = {});

enum class ConjectureVerdict { Proven, ConfirmedComputationally, Refuted, Open };
std::string to_string(ConjectureVerdict v);

struct ConjectureStatus {
    FamilySpec spec;
    std::uint64_t n = 0;
    /// gcd(n, b - 1), with gcd(n, 0) = n.
    std::uint64_t gcd_value = 0;
    /// delta | gcd(n, b - 1), which forces d = delta.
    bool hypothesis_holds = false;
    std::optional<std::uint64_t> measured_d;
    ConjectureVerdict verdict = ConjectureVerdict::Open;
};

ConjectureStatus conjecture_status(const FamilySpec& spec, const DistanceOptions& opts = {});

}  // namespace optbch

#endif  // OPTBCH_FAMILIES_HPP
