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

#include "optbch/serialization.hpp"

#include <stdexcept>

namespace optbch {

namespace {

std::string hex_mask(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    if (v == 0) return "0x0";
    std::string out;
    while (v) {
        out.insert(out.begin(), digits[v & 15]);
        v >>= 4;
    }
    return "0x" + out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t get_u64(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw std::invalid_argument(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

bool get_bool(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw std::invalid_argument(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

BigInt get_big(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a decimal string");
    return from_decimal(v.get<std::string>());
}

}  // namespace

Json code_descriptor(const CyclicCode& code) {
    Json j;
    j["n"] = code.length();
    j["m"] = code.field()->degree();
    j["modulus_hex"] = hex_mask(code.field()->modulus());
    j["beta_exp"] = code.beta_exp();
    j["defining_set_leaders"] = code.defining_set_leaders();
    j["generator_hex"] = code.generator().to_hex();
    j["dimension"] = code.dimension();
    return j;
}

Json to_json(const WeightDistribution& wd) {
    Json arr = Json::array();
    for (const auto& [w, c] : wd.terms()) arr.push_back(Json::array({w, to_decimal(c)}));
    return arr;
}

WeightDistribution weight_distribution_from_json(const Json& j, std::uint64_t n) {
    if (!j.is_array()) throw std::invalid_argument("weight distribution must be an array");
    WeightDistribution wd(n);
    std::optional<std::uint64_t> last;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_string()) {
            throw std::invalid_argument("weight distribution entries must be [weight, \"count\"]");
        }
        const auto w = pair[0].get<std::uint64_t>();
        if (last && w <= *last) throw std::invalid_argument("weights must be strictly ascending");
        last = w;
        const BigInt c = from_decimal(pair[1].get<std::string>());
        if (c <= 0) throw std::invalid_argument("counts must be positive");
        wd.add(w, c);
    }
    return wd;
}

Json to_json(const DistanceBound& b) { return Json{{"value", b.value}, {"source", to_string(b.source)}}; }

BoundSource parse_bound_source(const std::string& text) {
    for (auto s : {BoundSource::BchBound, BoundSource::SpherePacking, BoundSource::Enumeration, BoundSource::MacWilliams,
                   BoundSource::SupportSearch, BoundSource::Extension}) {
        if (to_string(s) == text) return s;
    }
    throw std::invalid_argument("unknown bound source '" + text + "'");
}

DistanceBound distance_bound_from_json(const Json& j) {
    const Json& src = field(j, "source");
    if (!src.is_string()) throw std::invalid_argument("bound source must be a string");
    return DistanceBound{get_u64(j, "value"), parse_bound_source(src.get<std::string>())};
}

Json to_json(const OptimalityCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["d_lower"] = to_json(c.d_lower);
    j["d_upper"] = to_json(c.d_upper);
    j["sphere_packing_max_d"] = c.sphere_packing.value;
    j["sphere_packing_plain_max_d"] = c.sphere_packing.plain;
    j["punctured"] = c.sphere_packing.punctured;
    j["redundancy_space"] = to_decimal(c.redundancy_space);
    j["ball_admitted"] = to_decimal(c.ball_admitted);
    j["ball_next"] = to_decimal(c.ball_next);
    j["optimal"] = c.optimal;
    return j;
}

Json to_json(const ThresholdReport& r) {
    Json j;
    j["lambda"] = r.lambda;
    j["ell"] = r.ell;
    j["horizon"] = r.horizon;
    j["s2"] = r.s2;
    Json coeffs = Json::array();
    for (const auto& c : r.expansion.coeffs) coeffs.push_back(to_decimal(c));
    j["coefficients"] = coeffs;
    j["a"] = to_decimal(r.expansion.a);
    j["s1"] = r.expansion.s1;
    j["s_theorem"] = r.s_theorem;
    j["s_empirical"] = r.s_empirical ? Json(*r.s_empirical) : Json(nullptr);
    return j;
}

Json to_json(const FamilySpec& spec) {
    Json j;
    j["family"] = to_string(spec.kind);
    j["s"] = spec.s;
    j["lambda"] = spec.lambda;
    j["variant"] = to_string(spec.variant);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["spec"] = to_json(r.spec);
    j["n"] = r.n;
    j["k"] = r.k;
    j["in_theorem_range"] = r.in_theorem_range;
    j["has_example"] = r.has_example;
    j["distance"] = Json{{"lower", to_json(r.distance.lower)}, {"upper", to_json(r.distance.upper)}};
    j["dual_weight_distribution"] = r.dual_distribution ? to_json(*r.dual_distribution) : Json(nullptr);
    j["extended"] = Json{{"n", r.extended.n},
                         {"k", r.extended.k},
                         {"lower", to_json(r.extended.distance.lower)},
                         {"upper", to_json(r.extended.distance.upper)}};
    j["certificate"] = to_json(r.certificate);
    j["extended_certificate"] = r.extended_certificate ? to_json(*r.extended_certificate) : Json(nullptr);
    Json items = Json::array();
    for (const auto& it : r.items) {
        items.push_back(Json{{"name", it.name},
                             {"predicted", it.predicted},
                             {"measured", it.measured},
                             {"status", to_string(it.status)},
                             {"note", it.note}});
    }
    j["items"] = items;
    j["ok"] = r.ok();
    return j;
}

Json to_json(const ConjectureStatus& s) {
    Json j;
    j["spec"] = to_json(s.spec);
    j["n"] = s.n;
    j["gcd_n_b_minus_1"] = s.gcd_value;
    j["hypothesis_holds"] = s.hypothesis_holds;
    j["measured_d"] = s.measured_d ? Json(*s.measured_d) : Json(nullptr);
    j["verdict"] = to_string(s.verdict);
    return j;
}

Json to_json(const CosetTable& t) {
    Json j;
    j["n"] = t.modulus();
    j["m"] = ord_mod(t.modulus());
    j["count"] = t.count();
    Json cosets = Json::array();
    for (const auto& c : t.cosets()) cosets.push_back(Json{{"leader", c.leader}, {"size", c.size()}});
    j["cosets"] = cosets;
    return j;
}

CertificateFile make_certificate_file(const CyclicCode& code, const OptimalityCertificate& cert,
                                      const DistanceResult& distance, bool extended, double wall_seconds) {
    CertificateFile f;
    f.code = code_descriptor(code);
    f.extended = extended;
    f.n = cert.n;
    f.k = cert.k;
    f.d_lower = cert.d_lower;
    f.d_upper = cert.d_upper;
    f.sphere_packing_max_d = cert.sphere_packing.value;
    f.sphere_packing_plain_max_d = cert.sphere_packing.plain;
    f.punctured = cert.sphere_packing.punctured;
    f.redundancy_space = cert.redundancy_space;
    f.ball_admitted = cert.ball_admitted;
    f.ball_next = cert.ball_next;
    f.punctured_space = cert.punctured_space;
    f.punctured_ball = cert.punctured_ball;
    f.griesmer = cert.griesmer;
    f.optimal = cert.optimal;
    f.weight_distribution = distance.distribution;
    f.dual_weight_distribution = distance.dual_distribution;
    f.wall_seconds = wall_seconds;
    return f;
}

Json to_json(const CertificateFile& f) {
    Json j;
    j["schema_version"] = kCertificateSchemaVersion;
    j["tool"] = Json{{"name", kToolName}, {"version", f.tool_version}};
    j["code"] = f.code;
    j["extended"] = f.extended;
    j["parameters"] = Json{{"n", f.n}, {"k", f.k}, {"d_lower", to_json(f.d_lower)}, {"d_upper", to_json(f.d_upper)}};
    Json bounds;
    bounds["sphere_packing_max_d"] = f.sphere_packing_max_d;
    bounds["sphere_packing_plain_max_d"] = f.sphere_packing_plain_max_d;
    bounds["punctured"] = f.punctured;
    bounds["redundancy_space"] = to_decimal(f.redundancy_space);
    bounds["ball_admitted"] = to_decimal(f.ball_admitted);
    bounds["ball_next"] = to_decimal(f.ball_next);
    bounds["punctured_space"] = to_decimal(f.punctured_space);
    bounds["punctured_ball"] = to_decimal(f.punctured_ball);
    bounds["griesmer"] = Json{{"sum", f.griesmer.sum},
                              {"satisfied", f.griesmer.satisfied},
                              {"meets_with_equality", f.griesmer.meets_with_equality}};
    j["bounds"] = bounds;
    j["verdicts"] = Json{{"distance_exact", f.d_lower.value == f.d_upper.value}, {"optimal", f.optimal}};
    j["weight_distribution"] = f.weight_distribution ? to_json(*f.weight_distribution) : Json(nullptr);
    j["dual_weight_distribution"] = f.dual_weight_distribution ? to_json(*f.dual_weight_distribution) : Json(nullptr);
    j["wall_seconds"] = f.wall_seconds;
    return j;
}

CertificateFile certificate_from_json(const Json& j) {
    if (get_u64(j, "schema_version") != static_cast<std::uint64_t>(kCertificateSchemaVersion)) {
        throw std::invalid_argument("unsupported certificate schema version");
    }
    CertificateFile f;
    const Json& tool = field(j, "tool");
    if (!field(tool, "version").is_string()) throw std::invalid_argument("tool version must be a string");
    f.tool_version = tool.at("version").get<std::string>();
    f.code = field(j, "code");
    f.extended = get_bool(j, "extended");
    const Json& p = field(j, "parameters");
    f.n = get_u64(p, "n");
    f.k = get_u64(p, "k");
    f.d_lower = distance_bound_from_json(field(p, "d_lower"));
    f.d_upper = distance_bound_from_json(field(p, "d_upper"));
    const Json& b = field(j, "bounds");
    f.sphere_packing_max_d = get_u64(b, "sphere_packing_max_d");
    f.sphere_packing_plain_max_d = get_u64(b, "sphere_packing_plain_max_d");
    f.punctured = get_bool(b, "punctured");
    f.redundancy_space = get_big(b, "redundancy_space");
    f.ball_admitted = get_big(b, "ball_admitted");
    f.ball_next = get_big(b, "ball_next");
    f.punctured_space = get_big(b, "punctured_space");
    f.punctured_ball = get_big(b, "punctured_ball");
    const Json& g = field(b, "griesmer");
    f.griesmer.sum = get_u64(g, "sum");
    f.griesmer.satisfied = get_bool(g, "satisfied");
    f.griesmer.meets_with_equality = get_bool(g, "meets_with_equality");
    f.optimal = get_bool(field(j, "verdicts"), "optimal");
    if (!field(j, "weight_distribution").is_null()) {
        f.weight_distribution = weight_distribution_from_json(j.at("weight_distribution"), f.n);
    }
    if (!field(j, "dual_weight_distribution").is_null()) {
        f.dual_weight_distribution = weight_distribution_from_json(j.at("dual_weight_distribution"), f.n);
    }
    const Json& ws = field(j, "wall_seconds");
    if (!ws.is_number()) throw std::invalid_argument("wall_seconds must be a number");
    f.wall_seconds = ws.get<double>();
    return f;
}

}  // namespace optbch
