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
#include <string>

#include "common.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/families.hpp"

using namespace optbch;

namespace {

FamilySpec spec(FamilyKind k, std::uint64_t s, std::uint64_t delta = 3, std::int64_t b = 1) {
    return FamilySpec{k, s, 1, Variant{delta, b}};
}

bool is_trace_item(const ReportItem& it) { return it.name.rfind("trace", 0) == 0; }

const ReportItem* find_item(const VerificationReport& r, const std::string& prefix) {
    for (const auto& it : r.items) {
        if (it.name.find(prefix) != std::string::npos) return &it;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_family("type2") == FamilyKind::Type2);
    CHECK(parse_family("lambda") == FamilyKind::GeneralLambda);
    CHECK_THROWS_AS(parse_family("type4"), std::invalid_argument);
    CHECK(parse_variant("d5b1") == Variant{5, 1});
    CHECK(parse_variant("d6b0") == Variant{6, 0});
    CHECK(to_string(Variant{3, 1}) == "d3b1");
    CHECK_THROWS_AS(parse_variant("5b1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant("d1b1"), std::invalid_argument);
}

TEST_CASE("lengths") {
    for (std::uint64_t s = 1; s <= 8; ++s) {
        const std::uint64_t u = std::uint64_t{1} << s;
        CHECK(family_length(FamilyKind::Type1, s) == (u * u + 1) * (u - 1));
        CHECK(family_length(FamilyKind::Type1, s) * (u + 1) == u * u * u * u - 1);
        CHECK(family_length(FamilyKind::Type2, s) * (u - 1) == u * u * u - 1);
        CHECK(family_length(FamilyKind::Type3, s) * 3 == u * u - 1);
    }
    for (std::uint64_t s = 1; s <= 30; ++s) {
        const oracle::Big u = oracle::Big(1) << s;
        CHECK((u * u * u * u - 1) % (u + 1) == 0);
        CHECK((u * u * u * u - 1) / (u + 1) == (u * u + 1) * (u - 1));
        CHECK((u * u * u - 1) / (u - 1) == u * u + u + 1);
    }
    CHECK(family_length(FamilyKind::GeneralLambda, 6, 3) == 21);
    CHECK_THROWS_AS(family_length(FamilyKind::GeneralLambda, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_length(FamilyKind::Type1, 9), std::invalid_argument);
}

TEST_CASE("closed-form predictions") {
    const auto t1 = predict(spec(FamilyKind::Type1, 3));
    REQUIRE(t1);
    CHECK(t1->n == 455);
    CHECK(t1->k == 443);
    CHECK(t1->d_lo == 3);
    CHECK(t1->d_hi == 3);
    CHECK(*t1->dual_enumerator == WeightDistribution(455, {{0, 1}, {224, 3640}, {256, 455}}));
    CHECK(*t1->a3 == 455);

    const auto t3 = predict(spec(FamilyKind::Type3, 4));
    REQUIRE(t3);
    CHECK(t3->n == 85);
    CHECK(t3->k == 77);
    CHECK(*t3->dual_enumerator == WeightDistribution(85, {{0, 1}, {40, 170}, {48, 85}}));

    const auto t2 = predict(spec(FamilyKind::Type2, 3));
    REQUIRE(t2);
    CHECK(t2->n == 73);
    CHECK(t2->k == 64);
    CHECK(t2->d_lo == 3);
    CHECK(t2->d_hi == 4);
    CHECK(t2->has_extended);
    CHECK(t2->ext_d_lo == 4);
    CHECK(t2->extended_optimal);

    CHECK_FALSE(predict(spec(FamilyKind::Type3, 3)));
    CHECK_FALSE(predict(spec(FamilyKind::Type1, 7, 6, 0)));
    CHECK(predict(spec(FamilyKind::Type1, 8, 6, 0)));
}

TEST_CASE("predicted dual enumerators of the first family account for every codeword") {
    for (std::uint64_t s = 2; s <= 5; ++s) {
        const auto p = predict(spec(FamilyKind::Type1, s));
        REQUIRE(p);
        REQUIRE(p->dual_enumerator);
        const std::uint64_t n = p->n;
        const oracle::Big q = oracle::Big(1) << (4 * s);
        CHECK(p->k == n - 4 * s);
        CHECK(p->dual_enumerator->terms().size() == 3);
        const auto& terms = p->dual_enumerator->terms();
        auto it = terms.begin();
        CHECK(it->second == 1);
        ++it;
        CHECK(it->second == q - 1 - n);
        ++it;
        CHECK(it->second == n);
        CHECK(p->dual_enumerator->total() == q);
    }
}

TEST_CASE("predicted enumerators match enumeration") {
    for (auto sp : {spec(FamilyKind::Type1, 2), spec(FamilyKind::Type1, 3), spec(FamilyKind::Type3, 3),
                    spec(FamilyKind::Type3, 4), spec(FamilyKind::Type3, 5)}) {
        auto p = predict(sp);
        if (!p) p = example_fixture(sp);
        REQUIRE(p);
        REQUIRE(p->dual_enumerator);
        const auto dual = weight_distribution_exhaustive(dual_code(build_family_code(sp)));
        CHECK(dual == *p->dual_enumerator);
        if (p->extended_dual_enumerator) CHECK(extended_dual(dual) == *p->extended_dual_enumerator);
    }
}

TEST_CASE("verification of the smallest first-family code") {
    const auto r = verify_instance(spec(FamilyKind::Type1, 2));
    CHECK(r.n == 51);
    CHECK(r.k == 43);
    CHECK(r.has_example);
    for (const auto& it : r.items) {
        CAPTURE(it.name);
        if (is_trace_item(it)) {
            CHECK(it.status == ItemStatus::Mismatch);
        } else {
            CHECK(it.status == ItemStatus::Match);
        }
    }
    REQUIRE(find_item(r, "A3"));
    CHECK(r.extended_certificate);
    CHECK(r.extended_certificate->optimal);
}

TEST_CASE("worked example outside the theorem range") {
    const auto r = verify_instance(spec(FamilyKind::Type3, 3, 5, 1));
    CHECK_FALSE(r.in_theorem_range);
    CHECK(r.has_example);
    CHECK(r.k == 12);
    CHECK(r.ok());
    CHECK(r.distance.lower.value == 5);
}

TEST_CASE("large instance degrades to unverified items") {
    const auto r = verify_instance(spec(FamilyKind::Type1, 8, 6, 0));
    CHECK(r.ok());
    CHECK(r.k == r.n - 65);
    CHECK(r.distance.exact());
    CHECK(r.distance.lower.value == 6);
    const auto* dim = find_item(r, "theorem: dimension");
    REQUIRE(dim);
    CHECK(dim->status == ItemStatus::Match);
    const auto* cos = find_item(r, "are leaders");
    REQUIRE(cos);
    CHECK(cos->status == ItemStatus::Match);
}

TEST_CASE("enumerator items beyond the caps are unverified") {
    VerifyOptions tight;
    tight.max_enum_dim = 8;
    tight.distance.max_dim = 8;
    const auto r = verify_instance(spec(FamilyKind::Type1, 3), tight);
    const auto* dual = find_item(r, "theorem: dual weight enumerator");
    REQUIRE(dual);
    CHECK(dual->status == ItemStatus::Unverified);
    CHECK(to_string(dual->status) == "UNVERIFIED-AT-SCALE");
}

TEST_CASE("every desk-scale prediction is met") {
    const std::vector<Variant> variants = {{3, 1}, {5, 1}, {6, 0}};
    for (FamilyKind kind : {FamilyKind::Type1, FamilyKind::Type2, FamilyKind::Type3}) {
        for (std::uint64_t s = 1; s <= 10; ++s) {
            for (const auto& v : variants) {
                const FamilySpec sp{kind, s, 1, v};
                if (family_field_degree(kind, s) > 32) continue;
                const auto p = predict(sp);
                if (!p || p->n > 4000) continue;
                if (std::min(p->k, p->n - p->k) > 24) continue;
                const auto r = verify_instance(sp);
                CAPTURE(to_string(sp));
                for (const auto& it : r.items) {
                    CAPTURE(it.name);
                    if (!is_trace_item(it)) CHECK(it.status != ItemStatus::Mismatch);
                }
            }
        }
    }
}

TEST_CASE("structural checks for larger first-family codes") {
    for (std::uint64_t s : {4ull, 5ull}) {
        const auto c = build_family_code(spec(FamilyKind::Type1, s));
        CHECK(c.dimension() == c.length() - 4 * s);
    }
}

TEST_CASE("conjecture verdicts") {
    const auto p = conjecture_status(spec(FamilyKind::Type1, 3, 5, 1));
    CHECK(p.hypothesis_holds);
    CHECK(p.verdict == ConjectureVerdict::Proven);
    CHECK(p.measured_d == 5u);

    const auto t2 = conjecture_status(spec(FamilyKind::Type2, 2));
    CHECK(t2.verdict == ConjectureVerdict::Proven);

    const auto open = conjecture_status(spec(FamilyKind::Type1, 2, 5, 1));
    CHECK_FALSE(open.hypothesis_holds);
    CHECK(open.measured_d == 5u);
    CHECK(open.verdict == ConjectureVerdict::ConfirmedComputationally);
    CHECK(to_string(open.verdict) == "CONFIRMED-COMPUTATIONALLY");
}
