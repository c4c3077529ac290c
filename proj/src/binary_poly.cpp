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

#include "optbch/binary_poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "optbch/bigint.hpp"
#include "optbch/cyclotomy.hpp"

namespace optbch {

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
    BinaryPolynomial p;
    if (mask) p.words_.push_back(mask);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::uint64_t> exps) {
    return from_exponents(std::span<const std::uint64_t>(exps.begin(), exps.size()));
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::span<const std::uint64_t> exps) {
    BinaryPolynomial p;
    for (auto e : exps) p.set_coefficient(e, !p.coefficient(e));
    return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::uint64_t degree) {
    BinaryPolynomial p;
    p.set_coefficient(degree, true);
    return p;
}

BinaryPolynomial BinaryPolynomial::x_n_minus_1(std::uint64_t n) {
    if (n == 0) return {};
    BinaryPolynomial p = monomial(n);
    p.set_coefficient(0, true);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex polynomial");
    BinaryPolynomial p;
    std::uint64_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        unsigned nibble = 0;
        if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
        else throw std::invalid_argument("invalid hex digit in polynomial: " + std::string(hex));
        for (unsigned j = 0; j < 4; ++j) {
            if ((nibble >> j) & 1u) p.set_coefficient(bit + j, true);
        }
    }
    return p;
}

BinaryPolynomial BinaryPolynomial::from_bits(const BitVec& v) {
    BinaryPolynomial p;
    p.words_.assign(v.words().begin(), v.words().end());
    p.normalize();
    return p;
}

long BinaryPolynomial::degree() const noexcept {
    if (words_.empty()) return kZeroDegree;
    return static_cast<long>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

void BinaryPolynomial::set_coefficient(std::uint64_t i, bool v) {
    const std::size_t w = i >> 6;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) words_[w] |= mask;
    else words_[w] &= ~mask;
    normalize();
}

std::uint64_t BinaryPolynomial::weight() const noexcept {
    std::uint64_t w = 0;
    for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

BitVec BinaryPolynomial::to_bits(std::size_t length) const {
    if (degree() >= static_cast<long>(length)) throw std::invalid_argument("polynomial degree exceeds vector length");
    BitVec v(length);
    auto dst = v.words();
    std::copy(words_.begin(), words_.end(), dst.begin());
    return v;
}

std::string BinaryPolynomial::to_hex() const {
    if (words_.empty()) return "0x0";
    char buf[20];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(words_.back()));
    std::string out = "0x";
    out += buf;
    for (std::size_t i = words_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(words_[i]));
        out += buf;
    }
    return out;
}

std::string BinaryPolynomial::to_string() const {
    if (words_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (!coefficient(static_cast<std::uint64_t>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0) out += '1';
        else if (i == 1) out += 'x';
        else out += "x^" + std::to_string(i);
    }
    return out;
}

void BinaryPolynomial::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void BinaryPolynomial::xor_shifted(const BinaryPolynomial& src, std::uint64_t shift) {
    if (src.words_.empty()) return;
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t need = src.words_.size() + ws + (bs ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.words_.size(); ++i) words_[i + ws] ^= src.words_[i];
        return;
    }
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        words_[i + ws] ^= src.words_[i] << bs;
        words_[i + ws + 1] ^= src.words_[i] >> (64 - bs);
    }
}

BinaryPolynomial BinaryPolynomial::shifted(std::uint64_t shift) const {
    BinaryPolynomial out;
    out.xor_shifted(*this, shift);
    out.normalize();
    return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    normalize();
    return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // shift-XOR over the sparser operand
    const bool a_sparse = a.weight() <= b.weight();
    const BinaryPolynomial& sparse = a_sparse ? a : b;
    const BinaryPolynomial& dense = a_sparse ? b : a;
    BinaryPolynomial out;
    out.words_.reserve(a.words_.size() + b.words_.size() + 1);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        std::uint64_t word = sparse.words_[w];
        while (word) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
            out.xor_shifted(dense, 64 * w + bit);
            word &= word - 1;
        }
    }
    out.normalize();
    return out;
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const long db = b.degree();
    BinaryPolynomial rem = a;
    BinaryPolynomial quo;
    const long da = a.degree();
    if (da < db) return {quo, rem};
    quo.words_.assign(static_cast<std::size_t>((da - db) / 64 + 1), 0);
    for (long i = da; i >= db; --i) {
        const std::uint64_t idx = static_cast<std::uint64_t>(i);
        if (!((rem.words_[idx >> 6] >> (idx & 63)) & 1u)) continue;
        const std::uint64_t shift = static_cast<std::uint64_t>(i - db);
        rem.xor_shifted(b, shift);
        quo.words_[shift >> 6] |= std::uint64_t{1} << (shift & 63);
    }
    rem.normalize();
    quo.normalize();
    return {quo, rem};
}

BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).second; }

BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).first; }

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        BinaryPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinaryPolynomial lcm(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a / gcd(a, b)) * b;
}

BinaryPolynomial reciprocal_parity_check(const BinaryPolynomial& h) {
    if (h.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    if (!h.coefficient(0)) throw std::invalid_argument("reciprocal requires a nonzero constant term");
    const auto d = static_cast<std::uint64_t>(h.degree());
    BinaryPolynomial out;
    for (std::uint64_t i = 0; i <= d; ++i) {
        if (h.coefficient(i)) out.set_coefficient(d - i, true);
    }
    return out;
}

FieldValue evaluate(const BinaryPolynomial& p, const Field& field, FieldValue x) {
    FieldValue acc = 0;
    for (long i = p.degree(); i >= 0; --i) {
        acc = field.mul(acc, x);
        if (p.coefficient(static_cast<std::uint64_t>(i))) acc ^= 1;
    }
    return acc;
}

namespace {

// Arithmetic adapters for the coset-driven factorization below.
struct TableFieldOps {
    using Elem = FieldValue;
    const Field& field;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem mul(Elem a, Elem b) const { return field.mul(a, b); }
    Elem pow(Elem a, std::uint64_t e) const { return field.pow(a, e); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
};

// GF(2)[x]/(f) for an irreducible f of any degree.
struct PolyFieldOps {
    using Elem = BinaryPolynomial;
    BinaryPolynomial modulus;

    Elem zero() const { return {}; }
    Elem one() const { return BinaryPolynomial::one(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus; }
    Elem pow(Elem a, const BigInt& e) const {
        Elem r = one();
        if (e == 0) return r;
        const auto top = boost::multiprecision::msb(e);
        for (std::size_t i = 0; i <= top; ++i) {
            if (boost::multiprecision::bit_test(e, i)) r = mul(r, a);
            if (i < top) a = mul(a, a);
        }
        return r;
    }
    Elem pow(const Elem& a, std::uint64_t e) const { return pow(a, BigInt(e)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a == one(); }
};

// Ben-Or: f of degree m is irreducible iff gcd(x^(2^i) - x, f) = 1 for
// 1 <= i <= m/2.
bool is_irreducible(const BinaryPolynomial& f) {
    const long m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    if (!f.coefficient(0)) return false;
    const BinaryPolynomial x = BinaryPolynomial::monomial(1);
    BinaryPolynomial xp = x;
    for (long i = 1; i <= m / 2; ++i) {
        xp = (xp * xp) % f;
        if (gcd(xp + x, f) != BinaryPolynomial::one()) return false;
    }
    return true;
}

BinaryPolynomial smallest_irreducible(std::uint64_t m) {
    const BinaryPolynomial top = BinaryPolynomial::monomial(m);
    for (std::uint64_t low = 1;; low += 2) {
        BinaryPolynomial f = top + BinaryPolynomial::from_mask(low);
        if (is_irreducible(f)) return f;
    }
}

template <class Ops>
std::vector<BinaryPolynomial> factor_by_cosets(std::uint64_t n, const Ops& ops, const typename Ops::Elem& beta) {
    using Elem = typename Ops::Elem;
    const CosetTable table(n);
    std::vector<BinaryPolynomial> factors;
    factors.reserve(table.count());
    for (const Coset& c : table.cosets()) {
        // expand prod_{i in C}(x - beta^i); coefficients ascending
        std::vector<Elem> coeffs{ops.one()};
        Elem root = ops.pow(beta, c.leader);
        for (std::size_t j = 0; j < c.size(); ++j) {
            coeffs.push_back(ops.zero());
            for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
                coeffs[k] = ops.add(coeffs[k - 1], ops.mul(root, coeffs[k]));
            }
            coeffs[0] = ops.mul(root, coeffs[0]);
            root = ops.mul(root, root);
        }
        BinaryPolynomial m;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (ops.is_one(coeffs[k])) m.set_coefficient(k, true);
            else if (!ops.is_zero(coeffs[k])) throw std::logic_error("minimal polynomial coefficient outside GF(2)");
        }
        factors.push_back(std::move(m));
    }
    BinaryPolynomial product = BinaryPolynomial::one();
    for (const auto& f : factors) product = product * f;
    if (product != BinaryPolynomial::x_n_minus_1(n)) throw std::logic_error("product of minimal polynomials is not x^n - 1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (gcd(factors[i], factors[j]) != BinaryPolynomial::one()) {
                throw std::logic_error("minimal polynomials of distinct cosets share a factor");
            }
        }
    }
    return factors;
}

}  // namespace

BinaryPolynomial minimal_polynomial(const Field& field, FieldValue e) {
    if (e == 0) throw std::invalid_argument("zero has no minimal polynomial of this form");
    if (!field.contains(e)) throw std::invalid_argument("value does not belong to the field");
    std::vector<FieldValue> conjugates{e};
    for (FieldValue c = field.square(e); c != e; c = field.square(c)) conjugates.push_back(c);
    std::vector<FieldValue> coeffs{1};
    for (FieldValue root : conjugates) {
        coeffs.push_back(0);
        for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = coeffs[k - 1] ^ field.mul(root, coeffs[k]);
        coeffs[0] = field.mul(root, coeffs[0]);
    }
    BinaryPolynomial m;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] > 1) throw std::logic_error("minimal polynomial coefficient outside GF(2)");
        if (coeffs[k]) m.set_coefficient(k, true);
    }
    return m;
}

BinaryPolynomial minimal_polynomial(const FieldElement& e) { return minimal_polynomial(*e.field(), e.value()); }

std::vector<BinaryPolynomial> verify_factorization(std::uint64_t n, const Field& field) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("factorization of x^n - 1 requires odd n");
    const FieldValue beta = field.nth_root_of_unity(n);
    return factor_by_cosets(n, TableFieldOps{field}, beta);
}

std::vector<BinaryPolynomial> verify_factorization(std::uint64_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("factorization of x^n - 1 requires odd n");
    if (n == 1) return {BinaryPolynomial::from_mask(0b11)};
    const std::uint64_t m = ord_mod(n);
    if (m <= kMaxFieldDegree && m >= kMinFieldDegree) {
        const FieldPtr field = Field::build(static_cast<unsigned>(m));
        return verify_factorization(n, *field);
    }
    const PolyFieldOps ops{smallest_irreducible(m)};
    const BigInt cofactor = (pow2(m) - 1) / n;
    const auto primes = prime_factors(n);
    // beta = a^((2^m-1)/n) has order exactly n for a suitable a
    for (std::uint64_t mask = 2;; ++mask) {
        const BinaryPolynomial a = BinaryPolynomial::from_mask(mask) % ops.modulus;
        if (a.is_zero()) continue;
        const BinaryPolynomial beta = ops.pow(a, cofactor);
        bool primitive = true;
        for (auto p : primes) {
            if (ops.is_one(ops.pow(beta, n / p))) {
                primitive = false;
                break;
            }
        }
        if (primitive) return factor_by_cosets(n, ops, beta);
    }
}

}  // namespace optbch
