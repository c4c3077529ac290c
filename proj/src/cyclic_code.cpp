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

#include "optbch/cyclic_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "optbch/cyclotomy.hpp"

namespace optbch {

namespace {

void require_length(std::uint64_t n, const Field& field) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("code length must be odd, got " + std::to_string(n));
    if (field.group_order() % n != 0) {
        throw std::invalid_argument("field GF(2^" + std::to_string(field.degree()) + ") too small for length " +
                                    std::to_string(n));
    }
}

std::vector<std::uint64_t> leaders_of(std::uint64_t n, std::span<const std::uint64_t> reps) {
    std::vector<std::uint64_t> leaders;
    leaders.reserve(reps.size());
    for (auto r : reps) leaders.push_back(coset_leader(n, r));
    std::sort(leaders.begin(), leaders.end());
    leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());
    return leaders;
}

}  // namespace

CyclicCode make_cyclic_code(std::uint64_t n, FieldPtr field, std::vector<std::uint64_t> leaders,
                            std::optional<BchDesign> design, std::optional<BinaryPolynomial> generator) {
    if (!field) throw std::invalid_argument("null field");
    require_length(n, *field);
    CyclicCode code;
    code.n_ = n;
    code.beta_exp_ = field->root_exponent(n);
    code.field_ = std::move(field);
    code.design_ = design;
    code.explicit_set_ = n <= kExplicitDefiningSetLimit;

    for (std::size_t i = 0; i < leaders.size(); ++i) {
        if (leaders[i] >= n || coset_leader(n, leaders[i]) != leaders[i]) {
            throw std::invalid_argument(std::to_string(leaders[i]) + " is not a coset leader mod " + std::to_string(n));
        }
        if (i > 0 && leaders[i] <= leaders[i - 1]) throw std::invalid_argument("coset leaders must be sorted and distinct");
    }
    code.leaders_ = std::move(leaders);

    if (code.explicit_set_) {
        code.member_mask_.assign(n, false);
        for (auto l : code.leaders_) {
            for (auto r : coset_of(n, l).members) {
                code.members_.push_back(r);
                code.member_mask_[r] = true;
            }
        }
        std::sort(code.members_.begin(), code.members_.end());
        code.redundancy_ = code.members_.size();
    } else {
        for (auto l : code.leaders_) code.redundancy_ += coset_size(n, l);
    }

    if (generator) {
        code.generator_ = std::move(*generator);
    } else {
        const FieldValue beta = code.beta();
        BinaryPolynomial g = BinaryPolynomial::one();
        for (auto l : code.leaders_) g = g * minimal_polynomial(*code.field_, code.field_->pow(beta, l));
        code.generator_ = std::move(g);
    }
    if (code.generator_.degree() != static_cast<long>(code.redundancy_)) {
        throw std::logic_error("generator degree does not match the defining set size");
    }
    return code;
}

const std::vector<std::uint64_t>& CyclicCode::defining_set() const {
    if (!explicit_set_) throw std::logic_error("defining set not materialized for length " + std::to_string(n_));
    return members_;
}

bool CyclicCode::in_defining_set(std::uint64_t i) const {
    i %= n_;
    if (explicit_set_) return member_mask_[i];
    return std::binary_search(leaders_.begin(), leaders_.end(), coset_leader(n_, i));
}

BinaryPolynomial CyclicCode::parity_check() const { return BinaryPolynomial::x_n_minus_1(n_) / generator_; }

std::uint64_t CyclicCode::bch_bound() const {
    if (redundancy_ == n_) return n_ + 1;
    std::vector<std::uint64_t> elements;
    if (explicit_set_) {
        elements = members_;
    } else {
        for (auto l : leaders_) {
            const auto c = coset_of(n_, l);
            elements.insert(elements.end(), c.members.begin(), c.members.end());
        }
    }
    std::uint64_t best = 0;
    for (auto t : elements) {
        if (in_defining_set(t + n_ - 1)) continue;  // not the start of a run
        std::uint64_t run = 0;
        std::uint64_t r = t;
        while (in_defining_set(r)) {
            ++run;
            r = (r + 1) % n_;
        }
        best = std::max(best, run);
    }
    return best + 1;
}

std::vector<BitVec> CyclicCode::generator_rows() const {
    std::vector<BitVec> rows;
    const std::uint64_t k = dimension();
    rows.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) rows.push_back(generator_.shifted(i).to_bits(n_));
    return rows;
}

FieldPtr default_field_for_length(std::uint64_t n) {
    const std::uint64_t m = ord_mod(n);
    if (m < kMinFieldDegree || m > kMaxFieldDegree) {
        throw std::invalid_argument("length " + std::to_string(n) + " needs GF(2^" + std::to_string(m) +
                                    "), outside the supported degrees 2..32");
    }
    return Field::build(static_cast<unsigned>(m));
}

CyclicCode bch_code(const BchDesign& design, FieldPtr field) {
    const std::uint64_t n = design.n;
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("BCH length must be odd");
    if (design.delta < 2 || design.delta > n) throw std::invalid_argument("designed distance must satisfy 2 <= delta <= n");
    if (!field) throw std::invalid_argument("null field");
    require_length(n, *field);
    const auto sn = static_cast<std::int64_t>(n);
    const auto b = static_cast<std::uint64_t>(((design.b % sn) + sn) % sn);
    std::vector<std::uint64_t> reps;
    reps.reserve(design.delta - 1);
    for (std::uint64_t j = 0; j + 1 < design.delta; ++j) reps.push_back((b + j) % n);
    return make_cyclic_code(n, std::move(field), leaders_of(n, reps), design, std::nullopt);
}

CyclicCode bch_code(const BchDesign& design) {
    if (design.n == 0 || design.n % 2 == 0) throw std::invalid_argument("BCH length must be odd");
    return bch_code(design, default_field_for_length(design.n));
}

CyclicCode cyclic_from_defining_set(std::uint64_t n, std::span<const std::uint64_t> defining_set, FieldPtr field) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("code length must be odd");
    std::vector<std::uint64_t> sorted(defining_set.begin(), defining_set.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto t : sorted) {
        if (t >= n) throw std::invalid_argument("defining set element out of range");
        if (!std::binary_search(sorted.begin(), sorted.end(), (2 * t) % n)) {
            throw std::invalid_argument("defining set is not closed under doubling mod n (" + std::to_string(t) + ")");
        }
    }
    return make_cyclic_code(n, std::move(field), leaders_of(n, sorted), std::nullopt, std::nullopt);
}

CyclicCode cyclic_from_coset_representatives(std::uint64_t n, std::span<const std::uint64_t> reps, FieldPtr field) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("code length must be odd");
    return make_cyclic_code(n, std::move(field), leaders_of(n, reps), std::nullopt, std::nullopt);
}

CyclicCode dual_code(const CyclicCode& code) {
    const std::uint64_t n = code.length();
    if (n > kExplicitDefiningSetLimit) throw std::invalid_argument("dual code not supported beyond length 2^22");
    const CosetTable table(n);
    std::vector<std::uint64_t> reps;
    for (const auto& c : table.cosets()) {
        if (!code.in_defining_set(c.leader)) reps.push_back((n - c.leader) % n);
    }
    BinaryPolynomial h_star = reciprocal_parity_check(code.parity_check());
    return make_cyclic_code(n, code.field(), leaders_of(n, reps), std::nullopt, std::move(h_star));
}

BitVec encode(const CyclicCode& code, const BitVec& message) {
    if (message.size() != code.dimension()) {
        throw std::invalid_argument("message length " + std::to_string(message.size()) + " differs from dimension " +
                                    std::to_string(code.dimension()));
    }
    return (BinaryPolynomial::from_bits(message) * code.generator()).to_bits(code.length());
}

bool is_codeword(const CyclicCode& code, const BitVec& v) {
    if (v.size() != code.length()) throw std::invalid_argument("vector length differs from code length");
    return (BinaryPolynomial::from_bits(v) % code.generator()).is_zero();
}

bool is_codeword_by_roots(const CyclicCode& code, const BitVec& v) {
    if (v.size() != code.length()) throw std::invalid_argument("vector length differs from code length");
    const Field& f = *code.field();
    const BinaryPolynomial p = BinaryPolynomial::from_bits(v);
    const FieldValue beta = code.beta();
    for (auto l : code.defining_set_leaders()) {
        if (evaluate(p, f, f.pow(beta, l)) != 0) return false;
    }
    return true;
}

}  // namespace optbch
