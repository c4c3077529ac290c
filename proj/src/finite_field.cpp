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

#include "optbch/finite_field.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optbch {

namespace {

// Smallest primitive polynomial per degree, index = m.
constexpr std::array<std::uint64_t, 33> kPrimitiveModuli = {
    0x0,        0x0,        0x7,        0xb,        0x13,       0x25,        0x43,
    0x83,       0x11d,      0x211,      0x409,      0x805,      0x1053,      0x201b,
    0x402b,     0x8003,     0x1002d,    0x20009,    0x40027,    0x80027,     0x100009,
    0x200005,   0x400003,   0x800021,   0x100001b,  0x2000009,  0x4000047,   0x8000027,
    0x10000009, 0x20000005, 0x40000053, 0x80000009, 0x1000000af,
};

int degree_of(std::uint64_t mask) { return mask == 0 ? -1 : 63 - std::countl_zero(mask); }

// a*b mod f for deg a, deg b < m <= 32.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned m) {
    std::uint64_t prod = 0;
    while (b) {
        if (b & 1) prod ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> m) & 1) a ^= f;
    }
    return prod;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t f, unsigned m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, f, m);
        a = mulmod(a, a, f, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::uint64_t builtin_primitive_modulus(unsigned m) {
    if (m < kMinFieldDegree || m > kMaxFieldDegree) {
        throw std::out_of_range("field degree must lie in [2, 32], got " + std::to_string(m));
    }
    return kPrimitiveModuli[m];
}

bool is_primitive_polynomial(unsigned m, std::uint64_t mask) {
    if (m < 1 || m > kMaxFieldDegree || degree_of(mask) != static_cast<int>(m)) return false;
    if ((mask & 1) == 0) return false;
    const std::uint64_t order = (std::uint64_t{1} << m) - 1;
    std::uint64_t x = 2;
    if ((x >> m) & 1) x ^= mask;
    if (powmod(x, order, mask, m) != 1) return false;
    for (auto p : prime_factors(order)) {
        if (powmod(x, order / p, mask, m) == 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> primitive_polynomials(unsigned m, std::size_t count) {
    if (m < kMinFieldDegree || m > kMaxFieldDegree) throw std::out_of_range("field degree out of range");
    std::vector<std::uint64_t> out;
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t low = 1; low < top && out.size() < count; low += 2) {
        if (is_primitive_polynomial(m, top | low)) out.push_back(top | low);
    }
    return out;
}

Field::Field(unsigned m, std::uint64_t modulus)
    : m_(m), modulus_(modulus), order_((std::uint64_t{1} << m) - 1), factors_(prime_factors(order_)) {
    if (m_ <= kMaxTabulatedDegree) {
        exp_.resize(2 * order_);
        log_.assign(std::size_t{1} << m_, 0);
        std::uint64_t v = 1;
        for (std::uint64_t e = 0; e < order_; ++e) {
            exp_[e] = static_cast<FieldValue>(v);
            exp_[e + order_] = static_cast<FieldValue>(v);
            log_[v] = static_cast<std::uint32_t>(e);
            v <<= 1;
            if ((v >> m_) & 1) v ^= modulus_;
        }
    }
}

FieldPtr Field::build(unsigned m) { return FieldPtr(new Field(m, builtin_primitive_modulus(m))); }

FieldPtr Field::with_modulus(unsigned m, std::uint64_t modulus) {
    if (m < kMinFieldDegree || m > kMaxFieldDegree) throw std::out_of_range("field degree out of range");
    if (!is_primitive_polynomial(m, modulus)) {
        throw std::invalid_argument("modulus is not a primitive polynomial of degree " + std::to_string(m));
    }
    return FieldPtr(new Field(m, modulus));
}

FieldValue Field::clmul_reduce(FieldValue a, FieldValue b) const noexcept {
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) prod ^= aa;
        b >>= 1;
        aa <<= 1;
    }
    for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit) {
        if ((prod >> bit) & 1) prod ^= modulus_ << (bit - static_cast<int>(m_));
    }
    return static_cast<FieldValue>(prod);
}

FieldValue Field::mul(FieldValue a, FieldValue b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (tabulated()) return exp_[log_[a] + log_[b]];
    return clmul_reduce(a, b);
}

FieldValue Field::inv(FieldValue a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(2^m)");
    if (tabulated()) return exp_[(order_ - log_[a]) % order_];
    return pow(a, order_ - 1);
}

FieldValue Field::pow(FieldValue a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tabulated()) return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order_)) % order_];
    FieldValue r = 1;
    e %= order_;
    if (e == 0) return 1;
    while (e) {
        if (e & 1) r = clmul_reduce(r, a);
        a = clmul_reduce(a, a);
        e >>= 1;
    }
    return r;
}

FieldValue Field::exp(std::uint64_t e) const noexcept {
    e %= order_;
    if (tabulated()) return exp_[e];
    return pow(2, e);
}

std::uint64_t Field::bsgs_log(FieldValue a) const {
    std::call_once(bsgs_once_, [this] {
        bsgs_stride_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order_))));
        baby_steps_.reserve(bsgs_stride_);
        FieldValue v = 1;
        for (std::uint64_t j = 0; j < bsgs_stride_; ++j) {
            baby_steps_.emplace(v, static_cast<std::uint32_t>(j));
            v = clmul_reduce(v, 2);
        }
    });
    const FieldValue giant = inv(pow(2, bsgs_stride_));
    FieldValue y = a;
    for (std::uint64_t i = 0; i <= bsgs_stride_; ++i) {
        if (auto it = baby_steps_.find(y); it != baby_steps_.end()) {
            return (i * bsgs_stride_ + it->second) % order_;
        }
        y = clmul_reduce(y, giant);
    }
    throw std::logic_error("discrete logarithm not found; modulus is not primitive");
}

std::optional<std::uint64_t> Field::log(FieldValue a) const {
    if (a == 0) return std::nullopt;
    if (!contains(a)) throw std::invalid_argument("value does not belong to this field");
    if (tabulated()) return log_[a];
    return bsgs_log(a);
}

unsigned Field::trace(FieldValue a) const {
    FieldValue sum = 0;
    FieldValue conj = a;
    for (unsigned i = 0; i < m_; ++i) {
        sum ^= conj;
        conj = square(conj);
    }
    if (sum > 1) throw std::logic_error("trace left GF(2); field tables are corrupt");
    return sum;
}

std::uint64_t Field::element_order(FieldValue a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = order_;
    for (auto p : factors_) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

std::uint64_t Field::root_exponent(std::uint64_t n) const {
    if (n == 0 || order_ % n != 0) {
        throw std::invalid_argument(std::to_string(n) + " does not divide 2^" + std::to_string(m_) + " - 1");
    }
    return order_ / n;
}

FieldValue Field::nth_root_of_unity(std::uint64_t n) const { return exp(root_exponent(n)); }

FieldElement::FieldElement(FieldPtr field, FieldValue value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("null field");
    if (!field_->contains(value_)) throw std::invalid_argument("value wider than the field degree");
}

FieldElement FieldElement::alpha_power(FieldPtr field, std::uint64_t e) {
    const FieldValue v = field->exp(e);
    return {std::move(field), v};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same_as(*b.field())) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.value_ ^ b.value_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement nth_root_of_unity(const FieldPtr& field, std::uint64_t n) {
    return {field, field->nth_root_of_unity(n)};
}

}  // namespace optbch
