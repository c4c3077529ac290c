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

#include "optbch/families.hpp"
#include "optbch/serialization.hpp"

using namespace optbch;

namespace {

CertificateFile sample(bool extended) {
    const auto c = build_family_code(FamilySpec{FamilyKind::Type1, 2, 1, Variant{3, 1}});
    const auto d = min_distance(c);
    if (extended) {
        const auto e = extend_code(c, d);
        return make_certificate_file(c, certify(e), e.distance, true, 0.25);
    }
    return make_certificate_file(c, certify(c, d), d, false, 0.5);
}

}  // namespace

TEST_CASE("code descriptor") {
    const auto j = code_descriptor(bch_code(BchDesign{7, 3, 1}));
    CHECK(j["n"] == 7);
    CHECK(j["m"] == 3);
    CHECK(j["modulus_hex"] == "0xb");
    CHECK(j["generator_hex"] == "0xb");
    CHECK(j["dimension"] == 4);
    CHECK(j["defining_set_leaders"] == Json::array({1}));
}

TEST_CASE("weight distributions round trip") {
    WeightDistribution wd(455, {{0, 1}, {224, 3640}, {256, 455}});
    const Json j = to_json(wd);
    CHECK(j.dump() == R"([[0,"1"],[224,"3640"],[256,"455"]])");
    CHECK(weight_distribution_from_json(j, 455) == wd);

    WeightDistribution big(200);
    big.add(0, 1);
    big.add(100, pow2(190) + 12345);
    CHECK(weight_distribution_from_json(to_json(big), 200) == big);

    CHECK_THROWS_AS(weight_distribution_from_json(Json::parse(R"([[3,"1"],[2,"1"]])"), 7), std::invalid_argument);
    CHECK_THROWS_AS(weight_distribution_from_json(Json::parse(R"([[3,1]])"), 7), std::invalid_argument);
    CHECK_THROWS_AS(weight_distribution_from_json(Json::parse(R"([[3,"x"]])"), 7), std::invalid_argument);
}

TEST_CASE("bound sources round trip") {
    for (auto s : {BoundSource::BchBound, BoundSource::SpherePacking, BoundSource::Enumeration, BoundSource::MacWilliams,
                   BoundSource::SupportSearch, BoundSource::Extension}) {
        const DistanceBound b{7, s};
        const auto back = distance_bound_from_json(to_json(b));
        CHECK(back.value == 7);
        CHECK(back.source == s);
    }
    CHECK_THROWS_AS(parse_bound_source("guess"), std::invalid_argument);
}

TEST_CASE("certificates round trip losslessly") {
    for (bool ext : {false, true}) {
        const CertificateFile f = sample(ext);
        const Json j = to_json(f);
        const CertificateFile back = certificate_from_json(Json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(back.redundancy_space == f.redundancy_space);
        CHECK(back.ball_next == f.ball_next);
        CHECK(back.weight_distribution == f.weight_distribution);
        CHECK(back.dual_weight_distribution == f.dual_weight_distribution);
        CHECK(back.optimal == ext);
    }
}

TEST_CASE("certificate values are decimal strings") {
    const Json j = to_json(sample(true));
    CHECK(j["schema_version"] == 1);
    CHECK(j["tool"]["name"] == "optbch");
    CHECK(j["bounds"]["redundancy_space"] == "512");
    CHECK(j["bounds"]["ball_admitted"] == "53");
    CHECK(j["parameters"]["n"] == 52);
    CHECK(j["verdicts"]["optimal"] == true);
}

TEST_CASE("malformed certificates are rejected") {
    Json j = to_json(sample(false));
    Json wrong = j;
    wrong["schema_version"] = 2;
    CHECK_THROWS_AS(certificate_from_json(wrong), std::invalid_argument);
    wrong = j;
    wrong["bounds"]["ball_next"] = 12;
    CHECK_THROWS_AS(certificate_from_json(wrong), std::invalid_argument);
    wrong = j;
    wrong["parameters"].erase("k");
    CHECK_THROWS_AS(certificate_from_json(wrong), std::invalid_argument);
    wrong = j;
    wrong["parameters"]["d_lower"]["source"] = "oracle";
    CHECK_THROWS_AS(certificate_from_json(wrong), std::invalid_argument);
}

TEST_CASE("other reports serialize") {
    const Json cos = to_json(CosetTable(21));
    CHECK(cos["count"] == 6);
    CHECK(cos["cosets"][1]["leader"] == 1);
    CHECK(cos["cosets"][1]["size"] == 6);

    const Json t = to_json(empirical_threshold(2, 1, 30));
    CHECK(t["s_empirical"] == 3);
    CHECK(t["coefficients"] == Json::array({"-2", "-3", "1"}));

    const Json r = to_json(verify_instance(FamilySpec{FamilyKind::Type2, 2, 1, Variant{3, 1}}));
    CHECK(r["n"] == 21);
    CHECK(r["ok"] == true);
}
