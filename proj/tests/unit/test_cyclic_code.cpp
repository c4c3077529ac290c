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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "common.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/families.hpp"

using namespace optbch;

TEST_CASE("Hamming code from a BCH design") {
    auto c = bch_code(BchDesign{7, 3, 1});
    CHECK(c.generator() == BinaryPolynomial::from_exponents({3, 1, 0}));
    CHECK(c.dimension() == 4);
    BitVec msg(4);
    CHECK(encode(c, msg).is_zero());
    msg.set(0);
    CHECK(encode(c, msg) == BitVec::from_string("1101000"));
    CHECK_THROWS_AS(encode(c, BitVec(3)), std::invalid_argument);
}

TEST_CASE("family BCH dimensions") {
    CHECK(bch_code(BchDesign{51, 3, 1}).dimension() == 43);
    const auto spec = FamilySpec{FamilyKind::Type1, 8, 1, Variant{6, 0}};
    const auto c = build_family_code(spec);
    CHECK(c.dimension() == c.length() - 8 * 8 - 1);
    CHECK_FALSE(c.has_explicit_defining_set());
}

TEST_CASE("codes from defining sets") {
    auto f = default_field_for_length(21);
    std::vector<std::uint64_t> none;
    auto full = cyclic_from_defining_set(21, none, f);
    CHECK(full.dimension() == 21);
    CHECK(full.generator() == BinaryPolynomial::one());
    std::vector<std::uint64_t> zero{0};
    auto parity = cyclic_from_defining_set(21, zero, f);
    CHECK(parity.dimension() == 20);
    CHECK(parity.generator() == BinaryPolynomial::from_exponents({1, 0}));
    std::vector<std::uint64_t> reps{1, 3};
    CHECK(cyclic_from_coset_representatives(21, reps, f).dimension() == 12);
    std::vector<std::uint64_t> open{1, 2};
    CHECK_THROWS_AS(cyclic_from_defining_set(21, open, f), std::invalid_argument);
}

TEST_CASE("dual codes") {
    auto c = bch_code(BchDesign{51, 3, 1});
    auto d = dual_code(c);
    CHECK(d.dimension() == 8);
    CHECK(dual_code(d).generator() == c.generator());

    auto f = default_field_for_length(15);
    std::vector<std::uint64_t> zero{0};
    auto rep = dual_code(cyclic_from_defining_set(15, zero, f));
    CHECK(rep.dimension() == 1);
    std::vector<std::uint64_t> all(15);
    for (std::uint64_t i = 0; i < 15; ++i) all[i] = i;
    CHECK(rep.generator() == BinaryPolynomial::from_exponents(std::span<const std::uint64_t>(all)));
}

TEST_CASE("construction invariants on random codes") {
    std::mt19937_64 rng(11);
    for (std::uint64_t n : {7ull, 15ull, 21ull, 31ull, 45ull, 51ull, 63ull, 73ull, 85ull}) {
        for (int t = 0; t < 4; ++t) {
            const auto c = testutil::random_cyclic_code(n, rng);
            CHECK(c.generator() * c.parity_check() == BinaryPolynomial::x_n_minus_1(n));
            CHECK(static_cast<std::uint64_t>(c.generator().degree()) == c.redundancy());
            const auto d = dual_code(c);
            CHECK(c.dimension() + d.dimension() == n);
            for (std::uint64_t i = 0; i < n; ++i) {
                CHECK((evaluate(c.generator(), *c.field(), c.field()->pow(c.beta(), i)) == 0) == c.in_defining_set(i));
                CHECK(d.in_defining_set((n - i) % n) == !c.in_defining_set(i));
            }
        }
    }
}

TEST_CASE("membership criteria agree") {
    std::mt19937_64 rng(5);
    for (std::uint64_t n : {15ull, 21ull, 51ull, 73ull}) {
        const auto c = bch_code(BchDesign{n, 3, 1});
        const auto rows = c.generator_rows();
        for (int t = 0; t < 10000; ++t) {
            BitVec v(n);
            if (t % 2) {
                for (const auto& r : rows) {
                    if (rng() & 1) v ^= r;
                }
                if (t % 4 == 1) v.flip(rng() % n);
            } else {
                for (std::uint64_t i = 0; i < n; ++i) v.set(i, rng() & 1);
            }
            REQUIRE(is_codeword(c, v) == is_codeword_by_roots(c, v));
        }
        BitVec w = rows.back();
        for (std::uint64_t i = 0; i < n; ++i) {
            CHECK(is_codeword(c, w));
            w = w.cyclic_shift();
        }
    }
}

TEST_CASE("designed distance never exceeds the true distance") {
    for (std::uint64_t n : {15ull, 21ull, 31ull, 45ull, 51ull, 63ull, 73ull, 85ull, 93ull}) {
        for (std::uint64_t delta = 2; delta <= 9; ++delta) {
            for (std::int64_t b : {0, 1, 2}) {
                const auto c = bch_code(BchDesign{n, delta, b});
                if (std::min(c.dimension(), n - c.dimension()) > 20) continue;
                const auto d = min_distance(c);
                REQUIRE(d.exact());
                CHECK(c.bch_bound() >= delta);
                CHECK(d.lower.value >= c.bch_bound());
            }
        }
    }
}

TEST_CASE("delta dividing gcd(n, b - 1) pins the distance") {
    for (std::uint64_t n : {15ull, 21ull, 45ull, 51ull, 63ull, 85ull, 455ull}) {
        for (std::uint64_t delta = 2; delta <= 9; ++delta) {
            if (n % delta) continue;
            CAPTURE(n);
            CAPTURE(delta);
            for (std::int64_t b : {std::int64_t{1}, static_cast<std::int64_t>(delta) + 1}) {
                const auto c = bch_code(BchDesign{n, delta, b});
                if (std::min(c.dimension(), n - c.dimension()) > 20) continue;
                const auto d = min_distance(c);
                REQUIRE(d.exact());
                CHECK(d.lower.value == delta);
            }
        }
    }
}
