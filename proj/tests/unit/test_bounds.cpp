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

#include <stdexcept>

#include "common.hpp"
#include "optbch/bounds.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/families.hpp"

using namespace optbch;

TEST_CASE("sphere packing arithmetic") {
    CHECK(sphere_packing_admits(7, 4, 3));
    CHECK(hamming_ball(7, 1) == pow2(3));
    CHECK_FALSE(sphere_packing_admits(52, 43, 5));
    CHECK(hamming_ball(52, 2) == 1379);
    CHECK(sphere_packing_max_d(52, 43) == 4);
    for (std::uint64_t n = 1; n < 40; ++n) CHECK(sphere_packing_admits(n, n, 1));
}

TEST_CASE("sphere packing against the oracle") {
    for (std::uint64_t n = 2; n <= 70; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            bool admitted = true;
            std::uint64_t best = 0;
            for (std::uint64_t d = 1; d <= n; ++d) {
                const bool ok = oracle::ball(n, (d - 1) / 2) <= oracle::Big(1) << (n - k);
                REQUIRE(sphere_packing_admits(n, k, d) == ok);
                if (!ok) admitted = false;
                REQUIRE((ok || !admitted));
                if (ok) best = d;
            }
            REQUIRE(sphere_packing_max_d(n, k) == best);
        }
    }
}

TEST_CASE("Griesmer sums") {
    auto g = griesmer_check(7, 4, 3);
    CHECK(g.sum == 7);
    CHECK(g.satisfied);
    CHECK(g.meets_with_equality);
    g = griesmer_check(52, 43, 4);
    CHECK(g.sum == 47);
    CHECK(g.satisfied);
    CHECK_FALSE(g.meets_with_equality);
    CHECK_FALSE(griesmer_check(5, 4, 3).satisfied);
}

TEST_CASE("optimality certificates") {
    const auto c = build_family_code(FamilySpec{FamilyKind::Type1, 2, 1, Variant{3, 1}});
    const auto ext = certify(extend_code(c, min_distance(c)));
    CHECK(ext.n == 52);
    CHECK(ext.k == 43);
    CHECK(ext.optimal);
    CHECK(ext.ball_next > ext.redundancy_space);

    const auto t2 = build_family_code(FamilySpec{FamilyKind::Type2, 2, 1, Variant{3, 1}});
    const auto c2 = certify(t2, min_distance(t2));
    CHECK(c2.d_lower.value == 3);
    CHECK(c2.sphere_packing.value == 4);
    CHECK_FALSE(c2.optimal);

    const auto ham = bch_code(BchDesign{7, 3, 1});
    const auto ch = certify(ham, min_distance(ham));
    CHECK(ch.optimal);
    CHECK(ch.redundancy_space == ch.ball_admitted);

    DistanceResult bad;
    bad.lower = {5, BoundSource::BchBound};
    bad.upper = {4, BoundSource::SpherePacking};
    CHECK_THROWS(certify(20, 10, bad));
}

TEST_CASE("optimal certificates exclude the next distance") {
    for (std::uint64_t n : {7ull, 15ull, 21ull, 31ull, 51ull, 73ull, 85ull}) {
        for (std::uint64_t delta : {3ull, 5ull}) {
            const auto c = bch_code(BchDesign{n, delta, 1});
            const auto cert = certify(c, min_distance(c));
            if (!cert.optimal) continue;
            const std::uint64_t d = cert.d_lower.value, k = c.dimension();
            const bool plain = oracle::ball(n, d / 2) > oracle::Big(1) << (n - k);
            // d + 1 even: a code [n, k, d + 1] punctures to [n - 1, k, d].
            const bool punctured = d % 2 == 1 && oracle::ball(n - 1, (d - 1) / 2) > oracle::Big(1) << (n - 1 - k);
            CHECK((plain || punctured));
        }
    }
}

TEST_CASE("s2 thresholds") {
    CHECK(threshold_s2(2, 1) == 3);
    CHECK(threshold_s2(3, 1) == 5);
    CHECK(threshold_s2(2, 3) == 7);
}

TEST_CASE("expansion coefficients") {
    const auto e = expansion_and_s1(2, 1);
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[2] == 1);
    CHECK(e.coeffs[1] == -3);
    CHECK(e.coeffs[0] == -2);
    CHECK(e.a == 3);
    CHECK(e.s1 == 5);
    for (std::uint64_t ell = 2; ell <= 10; ++ell) CHECK(expansion_and_s1(ell, 1).coeffs.back() == 1);

    const auto e3 = expansion_and_s1(3, 1);
    CHECK(e3.coeffs[0] == evaluate_expansion(e3, 0));
    // 3! (1 - 2) at n = 0.
    CHECK(e3.coeffs[0] == -6);
}

TEST_CASE("expansion matches direct evaluation") {
    for (std::uint64_t lambda : {1ull, 3ull, 5ull, 7ull}) {
        for (std::uint64_t ell = 2; ell <= 6; ++ell) {
            const auto e = expansion_and_s1(ell, lambda);
            oracle::Big fact = 1;
            for (std::uint64_t i = 2; i <= ell; ++i) fact *= i;
            for (std::uint64_t s = 1; s <= 24; ++s) {
                const std::uint64_t q = (std::uint64_t{1} << s) - 1;
                if (q % lambda) continue;
                const std::uint64_t n = q / lambda;
                const oracle::Big direct = fact * (oracle::ball(n, ell) - (oracle::Big(1) << ((ell - 1) * s + 1)));
                CHECK(evaluate_expansion(e, n) == direct);
            }
        }
    }
}

TEST_CASE("published threshold table") {
    const std::uint64_t expected[] = {3, 4, 6, 8, 11, 14, 17, 20, 23};
    for (std::uint64_t ell = 2; ell <= 10; ++ell) {
        const auto r = empirical_threshold(ell, 1, 30);
        REQUIRE(r.s_empirical);
        CHECK(*r.s_empirical == expected[ell - 2]);
        CHECK(r.rows.size() == 30);
    }
    CHECK_THROWS_AS(empirical_threshold(3, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(empirical_threshold(3, 2, 30), std::invalid_argument);
}

TEST_CASE("empirical thresholds never exceed the theorem threshold") {
    for (std::uint64_t lambda : {1ull, 3ull, 5ull, 7ull}) {
        for (std::uint64_t ell = 2; ell <= 6; ++ell) {
            const auto r = empirical_threshold(ell, lambda, 40);
            CAPTURE(lambda);
            CAPTURE(ell);
            CHECK(r.s_theorem == std::max(r.expansion.s1, r.s2));
            REQUIRE(r.s_empirical);
            CHECK(*r.s_empirical <= r.s_theorem);
        }
    }
}

TEST_CASE("pincer at desk scale") {
    for (std::uint64_t s = 4; s <= 10; ++s) {
        const auto c = build_family_code(FamilySpec{FamilyKind::GeneralLambda, s, 1, Variant{6, 0}});
        const std::uint64_t n = c.length();
        CHECK(n == (std::uint64_t{1} << s) - 1);
        CHECK(c.dimension() == n - 1 - 2 * s);
        DistanceOptions no_enum;
        no_enum.max_dim = 0;
        no_enum.budget = 0;
        const auto d = min_distance(c, no_enum);
        CHECK(d.exact());
        CHECK(d.lower.value == 6);
        CHECK(d.lower.source == BoundSource::BchBound);
        CHECK(d.upper.source == BoundSource::SpherePacking);
    }
}
