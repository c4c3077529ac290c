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

#ifndef OPTBCH_FINITE_FIELD_HPP
#define OPTBCH_FINITE_FIELD_HPP

/**
 * @file finite_field.hpp
 * @brief Arithmetic in GF(2^m), 2 <= m <= 32.
 *
 * A field is fixed by a primitive modulus polynomial f(x) of degree m; the
 * class x mod f(x) is the primitive element alpha. Elements are m-bit
 * vectors (bit i = coefficient of alpha^i). Nonzero elements also have an
 * exponent view alpha^e, 0 <= e <= 2^m - 2.
 *
 * For m <= 20 multiplication goes through log/antilog tables; above that
 * it is a carry-less multiply followed by reduction modulo f(x).
 *
 * Fields are immutable and shared through FieldPtr.
 */

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace optbch {

using FieldValue = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr unsigned kMinFieldDegree = 2;
inline constexpr unsigned kMaxFieldDegree = 32;
inline constexpr unsigned kMaxTabulatedDegree = 20;

/// Lexicographically smallest primitive polynomial of degree m (bit i =
/// coefficient of x^i, bit m set). Throws std::out_of_range outside [2, 32].
std::uint64_t builtin_primitive_modulus(unsigned m);

/// True iff mask has degree exactly m and x has multiplicative order
/// 2^m - 1 modulo it.
bool is_primitive_polynomial(unsigned m, std::uint64_t mask);

/// The `count` smallest primitive polynomials of degree m, ascending.
std::vector<std::uint64_t> primitive_polynomials(unsigned m, std::size_t count);

/// Distinct prime factors of v, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

class Field {
public:
    /// Field over the built-in modulus for degree m.
    static FieldPtr build(unsigned m);
    /// Field over a caller-chosen primitive modulus. Throws
    /// std::invalid_argument when the modulus is not primitive of degree m.
    static FieldPtr with_modulus(unsigned m, std::uint64_t modulus);

    unsigned degree() const noexcept { return m_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    /// Size of the multiplicative group, 2^m - 1.
    std::uint64_t group_order() const noexcept { return order_; }
    bool tabulated() const noexcept { return !exp_.empty(); }
    bool contains(FieldValue v) const noexcept {
        return m_ == 32 || v < (FieldValue{1} << m_);
    }

    FieldValue add(FieldValue a, FieldValue b) const noexcept { return a ^ b; }
    FieldValue mul(FieldValue a, FieldValue b) const noexcept;
    FieldValue square(FieldValue a) const noexcept { return mul(a, a); }
    /// Throws std::domain_error for a = 0.
    FieldValue inv(FieldValue a) const;
    /// a^e with 0^0 = 1.
    FieldValue pow(FieldValue a, std::uint64_t e) const noexcept;

    /// alpha^e for any e (reduced modulo the group order).
    FieldValue exp(std::uint64_t e) const noexcept;
    /// Discrete logarithm to base alpha; empty for zero.
    std::optional<std::uint64_t> log(FieldValue a) const;

    /// Absolute trace a + a^2 + ... + a^(2^(m-1)); always 0 or 1.
    unsigned trace(FieldValue a) const;

    /// Multiplicative order of a nonzero element. Throws for zero.
    std::uint64_t element_order(FieldValue a) const;

    /// beta = alpha^((2^m - 1) / n). Throws std::invalid_argument unless n
    /// divides 2^m - 1.
    FieldValue nth_root_of_unity(std::uint64_t n) const;

    /// (2^m - 1) / n. Throws std::invalid_argument unless n divides 2^m - 1.
    std::uint64_t root_exponent(std::uint64_t n) const;

    const std::vector<std::uint64_t>& group_order_factors() const noexcept { return factors_; }

    bool same_as(const Field& other) const noexcept {
        return m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Field(unsigned m, std::uint64_t modulus);

    FieldValue clmul_reduce(FieldValue a, FieldValue b) const noexcept;
    std::uint64_t bsgs_log(FieldValue a) const;

    unsigned m_;
    std::uint64_t modulus_;
    std::uint64_t order_;
    std::vector<std::uint64_t> factors_;
    // exp_ has 2*order_ entries so products of two logs need no reduction.
    std::vector<FieldValue> exp_;
    std::vector<std::uint32_t> log_;

    mutable std::once_flag bsgs_once_;
    mutable std::unordered_map<FieldValue, std::uint32_t> baby_steps_;
    mutable std::uint64_t bsgs_stride_ = 0;
};

inline FieldPtr build_field(unsigned m) { return Field::build(m); }

/// Element bound to its field, with checked mixed-field arithmetic.
class FieldElement {
public:
    FieldElement(FieldPtr field, FieldValue value);
    static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
    static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }
    static FieldElement alpha_power(FieldPtr field, std::uint64_t e);

    const FieldPtr& field() const noexcept { return field_; }
    FieldValue value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    std::optional<std::uint64_t> exponent() const { return field_->log(value_); }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    unsigned trace() const { return field_->trace(value_); }
    std::uint64_t order() const { return field_->element_order(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_->same_as(*b.field_) && a.value_ == b.value_;
    }

private:
    FieldPtr field_;
    FieldValue value_;
};

/// Convenience wrapper matching nth_root_of_unity on a FieldPtr.
FieldElement nth_root_of_unity(const FieldPtr& field, std::uint64_t n);

}  // namespace optbch

#endif  // OPTBCH_FINITE_FIELD_HPP
