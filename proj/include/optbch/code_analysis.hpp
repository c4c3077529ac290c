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

#ifndef OPTBCH_CODE_ANALYSIS_HPP
#define OPTBCH_CODE_ANALYSIS_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optbch/bigint.hpp"
#include "optbch/bitvec.hpp"
#include "optbch/cyclic_code.hpp"

namespace optbch {

/// Raised when a request would enumerate more codewords than allowed.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weight enumerator sum_w A_w z^w of a length-n code, stored sparsely.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::uint64_t n) : n_(n) {}
    WeightDistribution(std::uint64_t n, std::initializer_list<std::pair<std::uint64_t, long long>> terms);

    std::uint64_t length() const noexcept { return n_; }
    const std::map<std::uint64_t, BigInt>& terms() const noexcept { return counts_; }
    BigInt count(std::uint64_t w) const;
    /// Adds to A_w; zero sums are dropped. Throws for w > n.
    void add(std::uint64_t w, const BigInt& c);

    BigInt total() const;
    /// Smallest w > 0 with A_w != 0.
    std::optional<std::uint64_t> min_nonzero_weight() const;
    bool all_even() const;
    /// log2 of total(); throws std::logic_error if total() is not a power of two.
    std::uint64_t dimension() const;

    /// Human-readable form, e.g. "1+204z^24+51z^32".
    std::string to_string() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::uint64_t n_ = 0;
    std::map<std::uint64_t, BigInt> counts_;
};

struct EnumerationOptions {
    unsigned max_dim = 26;
    unsigned workers = 1;
};

/// Weight distribution of the span of `basis` (rows of length n, assumed
/// linearly independent) by Gray-code enumeration. The result does not depend
/// on the worker count. Throws CapExceeded when the row count exceeds max_dim.
WeightDistribution enumerate_span(std::size_t n, std::span<const BitVec> basis, const EnumerationOptions& opts = {});

WeightDistribution weight_distribution_exhaustive(const CyclicCode& code, const EnumerationOptions& opts = {});

/// Exact binary MacWilliams transform: the distribution of the dual of a
/// dimension-k code with distribution wd. Throws std::invalid_argument when
/// wd does not sum to 2^k and std::logic_error on a non-integral result.
WeightDistribution macwilliams_transform(const WeightDistribution& wd, std::uint64_t k);

/// Krawtchouk polynomial K_j(i) for length n, by its defining sum.
BigInt krawtchouk(std::uint64_t n, std::uint64_t j, std::uint64_t i);

enum class BoundSource { BchBound, SpherePacking, Enumeration, MacWilliams, SupportSearch, Extension };

std::string to_string(BoundSource s);

struct DistanceBound {
    std::uint64_t value = 0;
    BoundSource source = BoundSource::BchBound;
};

/// Exact minimum distance (lower == upper) or a certified interval.
struct DistanceResult {
    DistanceBound lower;
    DistanceBound upper;
    /// Distribution of the code itself when the exact route produced one.
    std::optional<WeightDistribution> distribution;
    /// Distribution of the dual when it was enumerated.
    std::optional<WeightDistribution> dual_distribution;

    bool exact() const noexcept { return lower.value == upper.value; }
};

struct DistanceOptions {
    unsigned max_dim = 26;
    /// Largest C(n-1, w-1) the weight-w support search may visit.
    std::uint64_t budget = 50'000'000;
    unsigned workers = 1;
};

/// Strategy ladder: BCH lower bound, sphere-packing upper bound, exact
/// enumeration through the smaller of the code and its dual, then support
/// search for weights up to 4. Whatever is left is reported as an interval.
/// A zero-dimensional code reports n + 1.
DistanceResult min_distance(const CyclicCode& code, const DistanceOptions& opts = {});

/// Whether the code has a codeword of weight exactly w (1 <= w <= 4), found
/// by syndrome matching with coordinate 0 in the support. Only meaningful
/// when no nonzero codeword is lighter than w. Throws CapExceeded when
/// C(n-1, w-1) exceeds the budget.
bool has_codeword_of_weight(const CyclicCode& code, std::uint64_t w, std::uint64_t budget);

/// Parameters [n+1, k, d'] of the code extended by an overall parity bit.
struct ExtendedCode {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    DistanceResult distance;
};

/// An odd distance grows by one and an even one is kept, applied to both
/// ends of the interval.
ExtendedCode extend_code(std::uint64_t n, std::uint64_t k, const DistanceResult& d);
ExtendedCode extend_code(const CyclicCode& code, const DistanceResult& d);

/// Distribution of the extended code: odd weights move up by one.
WeightDistribution extended_distribution(const WeightDistribution& wd);

/// Distribution of the dual of the extended code, given the dual of the
/// base code: every weight w contributes at w and at n+1-w. Throws
/// std::invalid_argument if the base dual has an odd weight.
WeightDistribution extended_dual(const WeightDistribution& dual_wd);

/// A_3 of a code with A_1 = A_2 = 0, solved from the fourth Pless power
/// moment 8 sum j^3 B_j = 2^(n-k) (n^2 (n+3) - 6 A_3) where B is the dual
/// distribution. Throws std::logic_error on a non-integral or negative
/// solution and std::invalid_argument when B does not sum to 2^(n-k).
BigInt pless_fourth_moment_a3(const WeightDistribution& dual_wd, std::uint64_t n, std::uint64_t k);

/// Root used to build trace vectors (Tr(a gamma^i))_{i<n}.
enum class TraceRoot {
    InverseBeta,  ///< gamma = beta^-1
    Beta,         ///< gamma = beta
};

/// The trace vector (Tr(a gamma^i))_{i<n}.
BitVec trace_vector(const CyclicCode& code, FieldValue a, TraceRoot root = TraceRoot::InverseBeta);

struct TraceCheck {
    std::uint64_t vectors = 0;   ///< 2^m field elements a
    std::uint64_t distinct = 0;  ///< distinct trace vectors
    std::uint64_t in_dual = 0;   ///< trace vectors lying in the dual (all or none when the basis images decide it)
    bool equals_dual = false;
    /// Same comparison after the coordinate map i -> -i mod n.
    bool equals_reversed_dual = false;
};

/// Compares {(Tr(a gamma^i))_{i<n} : a in GF(2^m)} with the dual of `code`
/// as sets. The map a -> trace vector is linear, so the comparison runs on
/// the images of a basis plus a rank count. Requires the defining set of
/// `code` to be the single coset C_1.
TraceCheck check_trace_representation(const CyclicCode& code, TraceRoot root = TraceRoot::InverseBeta);

bool trace_code_equals_dual(const CyclicCode& code, TraceRoot root = TraceRoot::InverseBeta);

}  // namespace optbch

#endif  // OPTBCH_CODE_ANALYSIS_HPP
