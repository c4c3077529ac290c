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
#include <numeric>
#include <stdexcept>

#include "oracle.hpp"
#include "optbch/cyclotomy.hpp"
#include "optbch/families.hpp"

using namespace optbch;

TEST_CASE("multiplicative order of two") {
    CHECK(ord_mod(51) == 8);
    CHECK(ord_mod(1) == 1);
    CHECK(ord_mod(455) == 12);
    CHECK_THROWS_AS(ord_mod(10), std::invalid_argument);
    for (std::uint64_t n = 1; n < 3000; n += 2) REQUIRE(ord_mod(n) == oracle::order_of_two(n));
}

TEST_CASE("small coset tables") {
    CosetTable t7(7);
    REQUIRE(t7.count() == 3);
    CHECK(t7.cosets()[0].members == std::vector<std::uint64_t>{0});
    CHECK(t7.cosets()[1].members == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(t7.cosets()[2].members == std::vector<std::uint64_t>{3, 6, 5});
    CHECK(CosetTable(3).count() == 2);
    CHECK(coset_of(51, 1).members == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 13, 26});
    CHECK_THROWS_AS(all_cosets(8), std::invalid_argument);
}

TEST_CASE("cosets partition Z_n") {
    for (std::uint64_t n = 1; n <= 2001; n += 2) {
        CosetTable t(n);
        const auto ref = oracle::cosets(n);
        REQUIRE(t.count() == ref.size());
        const std::uint64_t m = ord_mod(n);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < t.count(); ++i) {
            const auto& c = t.cosets()[i];
            total += c.size();
            CHECK(m % c.size() == 0);
            CHECK(c.leader == *std::min_element(c.members.begin(), c.members.end()));
            CHECK(std::set<std::uint64_t>(c.members.begin(), c.members.end()) == ref[i]);
        }
        CHECK(total == n);
    }
}

TEST_CASE("coset sizes sum to n for large moduli") {
    for (std::uint64_t n : {65535ull, 87381ull, 99999ull, 32767ull, 69905ull}) {
        CosetTable t(n);
        std::uint64_t total = 0;
        for (const auto& c : t.cosets()) total += c.size();
        CHECK(total == n);
    }
}

TEST_CASE("leader range checks") {
    auto r = check_leader_range(455, 7, 12);
    CHECK(r.pass);
    CHECK(r.entries.size() == 4);
    CHECK(check_leader_range(73, 3, 9).pass);
    auto t3 = check_leader_range(21, 3, 6);
    CHECK_FALSE(t3.pass);
    CHECK(t3.entries[1].size == 3);
}

TEST_CASE("odd elements below the bound lead full-size cosets") {
    for (std::uint64_t m = 2; m <= 14; ++m) {
        const std::uint64_t q = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t n = 3; n <= q; n += 2) {
            if (q % n || oracle::order_of_two(n) != m) continue;
            if (n <= (std::uint64_t{1} << (m / 2))) continue;
            const std::uint64_t bound = full_size_leader_bound(n);
            for (std::uint64_t s = 1; s <= bound; s += 2) {
                std::uint64_t x = s % n, lo = x, size = 0;
                do {
                    lo = std::min(lo, x);
                    x = x * 2 % n;
                    ++size;
                } while (x != s % n);
                CAPTURE(n);
                CAPTURE(s);
                REQUIRE(lo == s);
                REQUIRE(size == m);
            }
        }
    }
}

TEST_CASE("family coset lemmas across their ranges") {
    struct Range {
        FamilyKind kind;
        std::uint64_t s_max;
        std::uint64_t expected_multiplier;
    };
    for (const Range& r : {Range{FamilyKind::Type1, 5, 4}, Range{FamilyKind::Type2, 8, 3}, Range{FamilyKind::Type3, 10, 2}}) {
        for (std::uint64_t s = family_lemma_min_s(r.kind); s <= r.s_max; ++s) {
            const std::uint64_t n = family_length(r.kind, s);
            CAPTURE(n);
            CHECK(check_leader_range(n, family_lemma_bound(r.kind, s), r.expected_multiplier * s).pass);
        }
    }
    for (std::uint64_t lambda : {1ull, 3ull, 5ull, 7ull}) {
        for (std::uint64_t s = 2; s <= 24; ++s) {
            if (((std::uint64_t{1} << s) - 1) % lambda) continue;
            if (lambda >= (std::uint64_t{1} << (s / 2))) continue;
            const std::uint64_t n = family_length(FamilyKind::GeneralLambda, s, lambda);
            CAPTURE(n);
            CHECK(check_leader_range(n, family_lemma_bound(FamilyKind::GeneralLambda, s, lambda), s).pass);
        }
    }
}
