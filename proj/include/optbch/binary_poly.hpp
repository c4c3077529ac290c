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

#ifndef OPTBCH_BINARY_POLY_HPP
#define OPTBCH_BINARY_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optbch/bitvec.hpp"
#include "optbch/finite_field.hpp"

namespace optbch {

/// Polynomial over GF(2). Bit i of the packed words is the coefficient of
/// x^i; the word vector never carries zero words above the leading term.
class BinaryPolynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = -1;

    BinaryPolynomial() = default;

    static BinaryPolynomial from_mask(std::uint64_t mask);
    static BinaryPolynomial from_exponents(std::initializer_list<std::uint64_t> exps);
    static BinaryPolynomial from_exponents(std::span<const std::uint64_t> exps);
    static BinaryPolynomial monomial(std::uint64_t degree);
    static BinaryPolynomial one() { return from_mask(1); }
    /// x^n + 1 (= x^n - 1 over GF(2)).
    static BinaryPolynomial x_n_minus_1(std::uint64_t n);
    /// Hex mask, least significant bit = constant term; "0x" prefix optional.
    static BinaryPolynomial from_hex(std::string_view hex);
    /// Coordinate i of v becomes the coefficient of x^i.
    static BinaryPolynomial from_bits(const BitVec& v);

    long degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool coefficient(std::uint64_t i) const noexcept {
        const std::size_t w = i >> 6;
        return w < words_.size() && ((words_[w] >> (i & 63)) & 1u);
    }
    void set_coefficient(std::uint64_t i, bool v);
    std::uint64_t weight() const noexcept;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Coefficient vector of the given length. Throws if the degree does
    /// not fit.
    BitVec to_bits(std::size_t length) const;
    std::string to_hex() const;
    /// Human-readable form such as "x^3+x+1".
    std::string to_string() const;

    BinaryPolynomial& operator+=(const BinaryPolynomial& other);
    friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
    friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
    friend BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b);
    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    /// this * x^shift.
    BinaryPolynomial shifted(std::uint64_t shift) const;

private:
    void normalize() noexcept;
    void xor_shifted(const BinaryPolynomial& src, std::uint64_t shift);

    std::vector<std::uint64_t> words_;

    friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
};

/// (quotient, remainder) with a = q*b + r and deg r < deg b. Throws
/// std::domain_error when b is zero.
std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);
BinaryPolynomial lcm(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// h*(x) = x^deg(h) h(1/x). Requires h(0) = 1, otherwise throws
/// std::invalid_argument.
BinaryPolynomial reciprocal_parity_check(const BinaryPolynomial& h);

/// p(x) evaluated at a point of GF(2^m).
FieldValue evaluate(const BinaryPolynomial& p, const Field& field, FieldValue x);

/// Minimal polynomial over GF(2) of a nonzero element: the product of
/// (x - e^(2^j)) over the distinct conjugates of e, expanded in GF(2^m).
/// Throws std::invalid_argument for e = 0 and std::logic_error if the
/// expansion leaves GF(2).
BinaryPolynomial minimal_polynomial(const Field& field, FieldValue e);
BinaryPolynomial minimal_polynomial(const FieldElement& e);

/// Minimal polynomials M_{beta^s}(x), one per coset leader s mod n (in
/// ascending leader order), with beta = alpha^((2^m-1)/n). The product is
/// checked against x^n - 1 and the factors are checked pairwise coprime;
/// a failed check throws std::logic_error. Throws std::invalid_argument for
/// even n or n not dividing 2^m - 1.
std::vector<BinaryPolynomial> verify_factorization(std::uint64_t n, const Field& field);

/// Same check for any odd n. Uses GF(2^m), m = ord_n(2), from the built-in
/// table when m <= 32 and otherwise a polynomial-basis field over the
/// smallest irreducible polynomial of degree m.
std::vector<BinaryPolynomial> verify_factorization(std::uint64_t n);

}  // namespace optbch

#endif  // OPTBCH_BINARY_POLY_HPP
