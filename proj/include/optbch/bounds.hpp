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

#ifndef OPTBCH_BOUNDS_HPP
#define OPTBCH_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "optbch/bigint.hpp"
#include "optbch/code_analysis.hpp"

namespace optbch {

/// sum_{i <= floor((d-1)/2)} C(n, i) <= 2^(n-k).
bool sphere_packing_admits(std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// Largest d <= n admitted by sphere_packing_admits. Requires 1 <= k <= n.
std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k);

/// Upper bound on d for any [n, k] code. Starts from sphere_packing_max_d
/// and, when that value d is even, also tries the punctured parameters
/// [n-1, k, d-1]; if those are rejected, so is [n, k, d].
struct SpherePackingBound {
    std::uint64_t value = 0;
    std::uint64_t plain = 0;
    bool punctured = false;
};
SpherePackingBound sphere_packing_upper_bound(std::uint64_t n, std::uint64_t k);

struct GriesmerResult {
    std::uint64_t sum = 0;
    bool satisfied = false;
    bool meets_with_equality = false;
};
/// n >= sum_{i<k} ceil(d / 2^i).
GriesmerResult griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d);

struct OptimalityCertificate {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    DistanceBound d_lower;
    DistanceBound d_upper;
    SpherePackingBound sphere_packing;
    bool optimal = false;

    // Recorded bound arithmetic.
    BigInt redundancy_space;  ///< 2^(n-k)
    BigInt ball_admitted;     ///< sum_{i <= floor((d_lower-1)/2)} C(n, i)
    BigInt ball_next;         ///< sum_{i <= floor(d_lower/2)} C(n, i)
    BigInt punctured_space;   ///< 2^(n-1-k) when the punctured test ran
    BigInt punctured_ball;    ///< sum_{i <= floor((d_lower-1)/2)} C(n-1, i) when it ran
    GriesmerResult griesmer;
};

/// Optimal iff the distance is exact and the sphere-packing bound (with the
/// punctured refinement) leaves no room above it. Throws
/// std::invalid_argument when lower > upper or k is 0 or exceeds n.
OptimalityCertificate certify(std::uint64_t n, std::uint64_t k, const DistanceResult& d);
OptimalityCertificate certify(const CyclicCode& code, const DistanceResult& d);
OptimalityCertificate certify(const ExtendedCode& code);

/// Smallest s >= 1 with (2 ell - 1) lambda <= 2^ceil(s/2).
std::uint64_t threshold_s2(std::uint64_t ell, std::uint64_t lambda);

struct Expansion {
    /// coeffs[i] multiplies n^i; coeffs[ell] = 1.
    std::vector<BigInt> coeffs;
    BigInt a;  ///< max |coeffs[i]| for i < ell
    std::uint64_t s1 = 0;
};

/// ell! (sum_{i<=ell} C(n, i) - 2 (lambda n + 1)^(ell-1)) as a polynomial
/// in n, with a and the smallest s1 satisfying 1 + ell lambda a < 2^ceil(s1/2).
Expansion expansion_and_s1(std::uint64_t ell, std::uint64_t lambda);

BigInt evaluate_expansion(const Expansion& e, const BigInt& n);

struct ThresholdRow {
    std::uint64_t s = 0;
    bool applicable = false;  ///< lambda | 2^s - 1
    std::uint64_t n = 0;
    bool cosets_ok = false;
    bool sphere_ok = false;
    bool pass() const noexcept { return !applicable || (cosets_ok && sphere_ok); }
};

struct ThresholdReport {
    std::uint64_t ell = 0;
    std::uint64_t lambda = 0;
    std::uint64_t horizon = 0;
    std::uint64_t s2 = 0;
    Expansion expansion;
    std::uint64_t s_theorem = 0;
    /// Empty when even s = horizon fails.
    std::optional<std::uint64_t> s_empirical;
    std::vector<ThresholdRow> rows;  ///< s = 1..horizon
};

/// Smallest s such that every s' in [s, horizon] with lambda | 2^s' - 1
/// passes both checks: the odd i in [1, 2 ell - 3] are coset leaders mod
/// n = (2^s' - 1)/lambda with |C_i| = s', and
/// sum_{i<=ell} C(n, i) > 2^((ell-1) s' + 1). Throws std::invalid_argument
/// when ell < 2, lambda is even, or horizon < s2 or horizon > 62.
ThresholdReport empirical_threshold(std::uint64_t ell, std::uint64_t lambda, std::uint64_t horizon = 30);

}  // namespace optbch

#endif  // OPTBCH_BOUNDS_HPP
