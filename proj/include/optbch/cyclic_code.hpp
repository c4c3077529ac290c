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

#ifndef OPTBCH_CYCLIC_CODE_HPP
#define OPTBCH_CYCLIC_CODE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "optbch/binary_poly.hpp"
#include "optbch/bitvec.hpp"
#include "optbch/finite_field.hpp"

namespace optbch {

/// Defining sets are kept as explicit sorted residue lists up to this length;
/// longer codes keep only coset leaders and answer membership through
/// coset_leader().
inline constexpr std::uint64_t kExplicitDefiningSetLimit = std::uint64_t{1} << 22;

/// Narrow-sense parameters of a binary BCH code C_(2, n, delta, b).
struct BchDesign {
    std::uint64_t n = 0;
    std::uint64_t delta = 0;  ///< designed distance, 2 <= delta <= n
    std::int64_t b = 1;       ///< first exponent of the consecutive run

    friend bool operator==(const BchDesign&, const BchDesign&) = default;
};

/// Binary cyclic code of odd length n, described by its defining set T with
/// respect to beta = alpha^((2^m-1)/n). Immutable once built.
class CyclicCode {
public:
    std::uint64_t length() const noexcept { return n_; }
    const FieldPtr& field() const noexcept { return field_; }
    /// beta = alpha^beta_exp().
    std::uint64_t beta_exp() const noexcept { return beta_exp_; }
    FieldValue beta() const { return field_->exp(beta_exp_); }

    /// Sorted coset leaders making up T.
    const std::vector<std::uint64_t>& defining_set_leaders() const noexcept { return leaders_; }
    bool has_explicit_defining_set() const noexcept { return explicit_set_; }
    /// Sorted residues of T. Throws std::logic_error when n is too long for
    /// the set to be materialized.
    const std::vector<std::uint64_t>& defining_set() const;
    bool in_defining_set(std::uint64_t i) const;
    /// |T| = deg g.
    std::uint64_t redundancy() const noexcept { return redundancy_; }
    std::uint64_t dimension() const noexcept { return n_ - redundancy_; }

    const BinaryPolynomial& generator() const noexcept { return generator_; }
    /// h(x) = (x^n - 1) / g(x).
    BinaryPolynomial parity_check() const;

    /// Bound from the longest run of cyclically consecutive residues in T:
    /// d >= run + 1. Returns n + 1 for the zero code (T = Z_n).
    std::uint64_t bch_bound() const;

    /// Set when the code came from bch_code().
    const std::optional<BchDesign>& design() const noexcept { return design_; }

    /// Rows x^i g(x), 0 <= i < k, of length n.
    std::vector<BitVec> generator_rows() const;

private:
    friend CyclicCode make_cyclic_code(std::uint64_t, FieldPtr, std::vector<std::uint64_t>, std::optional<BchDesign>,
                                       std::optional<BinaryPolynomial>);

    CyclicCode() = default;

    std::uint64_t n_ = 0;
    FieldPtr field_;
    std::uint64_t beta_exp_ = 0;
    std::vector<std::uint64_t> leaders_;
    std::vector<std::uint64_t> members_;
    std::vector<bool> member_mask_;
    bool explicit_set_ = true;
    std::uint64_t redundancy_ = 0;
    BinaryPolynomial generator_;
    std::optional<BchDesign> design_;
};

/// Internal constructor shared by the builders below. Leaders must be
/// sorted, distinct coset leaders. When `generator` is supplied it is used
/// as is, otherwise g(x) is the product of the leaders' minimal polynomials.
CyclicCode make_cyclic_code(std::uint64_t n, FieldPtr field, std::vector<std::uint64_t> leaders,
                            std::optional<BchDesign> design, std::optional<BinaryPolynomial> generator);

/// GF(2^m) with m = ord_n(2) over the built-in modulus. Throws when
/// m falls outside [2, 32].
FieldPtr default_field_for_length(std::uint64_t n);

/// BCH code with generator lcm(M_{beta^b}, ..., M_{beta^(b+delta-2)}).
/// Throws std::invalid_argument when n is even, delta is out of range or
/// n does not divide 2^m - 1.
CyclicCode bch_code(const BchDesign& design, FieldPtr field);
CyclicCode bch_code(const BchDesign& design);

/// Cyclic code with generator prod_{i in T}(x - beta^i). T must be closed
/// under doubling mod n, otherwise std::invalid_argument.
CyclicCode cyclic_from_defining_set(std::uint64_t n, std::span<const std::uint64_t> defining_set, FieldPtr field);
/// Same, with T given as a union of cosets by their representatives.
CyclicCode cyclic_from_coset_representatives(std::uint64_t n, std::span<const std::uint64_t> reps, FieldPtr field);

/// Dual code, generated by the reciprocal of h(x); its defining set is
/// {-i mod n : i not in T}. Requires n <= kExplicitDefiningSetLimit.
CyclicCode dual_code(const CyclicCode& code);

/// message(x) * g(x). Throws std::invalid_argument unless the message has
/// length k.
BitVec encode(const CyclicCode& code, const BitVec& message);

/// g(x) divides v(x).
bool is_codeword(const CyclicCode& code, const BitVec& v);

/// v(beta^i) = 0 for every leader i of T. Conjugate roots follow because
/// v has binary coefficients, so this is equivalent to vanishing on all of T.
bool is_codeword_by_roots(const CyclicCode& code, const BitVec& v);

}  // namespace optbch

#endif  // OPTBCH_CYCLIC_CODE_HPP
