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

#include "optbch/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "optbch/cyclotomy.hpp"

namespace optbch {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Type1: return "type1";
        case FamilyKind::Type2: return "type2";
        case FamilyKind::Type3: return "type3";
        case FamilyKind::GeneralLambda: return "lambda";
    }
    return "unknown";
}

FamilyKind parse_family(std::string_view text) {
    if (text == "type1") return FamilyKind::Type1;
    if (text == "type2") return FamilyKind::Type2;
    if (text == "type3") return FamilyKind::Type3;
    if (text == "lambda") return FamilyKind::GeneralLambda;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected type1|type2|type3|lambda)");
}

Variant parse_variant(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("variant must look like d3b1, got '" + std::string(text) + "'"); };
    if (text.size() < 4 || text[0] != 'd') throw bad();
    const auto bpos = text.find('b');
    if (bpos == std::string_view::npos || bpos < 2) throw bad();
    Variant v;
    const auto dpart = text.substr(1, bpos - 1);
    const auto bpart = text.substr(bpos + 1);
    auto r1 = std::from_chars(dpart.data(), dpart.data() + dpart.size(), v.delta);
    auto r2 = std::from_chars(bpart.data(), bpart.data() + bpart.size(), v.b);
    if (r1.ec != std::errc{} || r1.ptr != dpart.data() + dpart.size() || r2.ec != std::errc{} ||
        r2.ptr != bpart.data() + bpart.size() || bpart.empty()) {
        throw bad();
    }
    if (v.delta < 2) throw std::invalid_argument("designed distance must be at least 2");
    return v;
}

std::string to_string(const Variant& v) { return "d" + std::to_string(v.delta) + "b" + std::to_string(v.b); }

std::string to_string(const FamilySpec& spec) {
    std::string out = to_string(spec.kind) + " s=" + std::to_string(spec.s);
    if (spec.kind == FamilyKind::GeneralLambda) out += " lambda=" + std::to_string(spec.lambda);
    return out + " " + to_string(spec.variant);
}

unsigned family_field_degree(FamilyKind kind, std::uint64_t s) {
    switch (kind) {
        case FamilyKind::Type1: return static_cast<unsigned>(4 * s);
        case FamilyKind::Type2: return static_cast<unsigned>(3 * s);
        case FamilyKind::Type3: return static_cast<unsigned>(2 * s);
        case FamilyKind::GeneralLambda: return static_cast<unsigned>(s);
    }
    return 0;
}

std::uint64_t family_length(FamilyKind kind, std::uint64_t s, std::uint64_t lambda) {
    if (s == 0) throw std::invalid_argument("s must be positive");
    if (family_field_degree(kind, s) > kMaxFieldDegree) {
        throw std::invalid_argument(to_string(kind) + " with s=" + std::to_string(s) + " needs a field beyond GF(2^32)");
    }
    const std::uint64_t u = std::uint64_t{1} << s;
    switch (kind) {
        case FamilyKind::Type1: return (u * u + 1) * (u - 1);
        case FamilyKind::Type2: return u * u + u + 1;
        case FamilyKind::Type3: return (u * u - 1) / 3;
        case FamilyKind::GeneralLambda:
            if (lambda == 0 || (u - 1) % lambda != 0) {
                throw std::invalid_argument("lambda=" + std::to_string(lambda) + " does not divide 2^" + std::to_string(s) +
                                            " - 1");
            }
            return (u - 1) / lambda;
    }
    return 0;
}

std::uint64_t family_lemma_bound(FamilyKind kind, std::uint64_t s, std::uint64_t lambda) {
    switch (kind) {
        case FamilyKind::Type1: return (std::uint64_t{1} << s) - 1;
        case FamilyKind::Type2: return 3;
        case FamilyKind::Type3: return (std::uint64_t{1} << s) / 3;
        case FamilyKind::GeneralLambda: return (std::uint64_t{1} << ((s + 1) / 2)) / lambda;
    }
    return 0;
}

std::uint64_t family_lemma_min_s(FamilyKind kind) { return kind == FamilyKind::Type3 ? 4 : 3; }

CyclicCode build_family_code(const FamilySpec& spec) {
    const std::uint64_t n = family_length(spec.kind, spec.s, spec.lambda);
    if (spec.variant.delta > n) throw std::invalid_argument("designed distance exceeds the length");
    const auto field = Field::build(family_field_degree(spec.kind, spec.s));
    return bch_code(BchDesign{n, spec.variant.delta, spec.variant.b}, field);
}

namespace {

BigInt pw(std::uint64_t e) { return pow2(e); }

std::uint64_t p2(std::uint64_t e) { return std::uint64_t{1} << e; }

PredictedParameters base(const FamilySpec& spec, std::string source) {
    PredictedParameters p;
    p.spec = spec;
    p.source = std::move(source);
    p.n = family_length(spec.kind, spec.s, spec.lambda);
    return p;
}

WeightDistribution type1_dual(std::uint64_t s, std::uint64_t n) {
    WeightDistribution wd(n);
    wd.add(0, 1);
    wd.add(p2(3 * s - 1) - p2(2 * s - 1), pw(4 * s) - 1 - n);
    wd.add(p2(3 * s - 1), n);
    return wd;
}

WeightDistribution type1_extended_dual(std::uint64_t s, std::uint64_t n) {
    WeightDistribution wd(n + 1);
    const BigInt other = pw(4 * s) - 1 - n;
    wd.add(0, 1);
    wd.add(n + 1 - p2(3 * s - 1), n);
    wd.add(p2(3 * s - 1) - p2(2 * s - 1), other);
    wd.add(n + 1 - p2(3 * s - 1) + p2(2 * s - 1), other);
    wd.add(p2(3 * s - 1), n);
    wd.add(n + 1, 1);
    return wd;
}

std::pair<std::uint64_t, std::uint64_t> type3_weights(std::uint64_t s) {
    const std::int64_t sign = s % 2 ? -1 : 1;
    const auto big = static_cast<std::int64_t>(p2(2 * s - 1));
    const auto w1 = (big + sign * static_cast<std::int64_t>(p2(s))) / 3;
    const auto w2 = (big - sign * static_cast<std::int64_t>(p2(s - 1))) / 3;
    return {static_cast<std::uint64_t>(w1), static_cast<std::uint64_t>(w2)};
}

WeightDistribution type3_dual(std::uint64_t s, std::uint64_t n) {
    const auto [w1, w2] = type3_weights(s);
    WeightDistribution wd(n);
    wd.add(0, 1);
    wd.add(w1, n);
    wd.add(w2, 2 * BigInt(n));
    return wd;
}

WeightDistribution type3_extended_dual(std::uint64_t s, std::uint64_t n) {
    const auto [w1, w2] = type3_weights(s);
    WeightDistribution wd(n + 1);
    wd.add(0, 1);
    wd.add(w1, n);
    wd.add(n + 1 - w1, n);
    wd.add(w2, 2 * BigInt(n));
    wd.add(n + 1 - w2, 2 * BigInt(n));
    wd.add(n + 1, 1);
    return wd;
}

void set_distance(PredictedParameters& p, std::uint64_t k, std::uint64_t lo, std::uint64_t hi) {
    p.k = k;
    p.d_lo = lo;
    p.d_hi = hi;
}

void set_extended(PredictedParameters& p, std::uint64_t lo, std::uint64_t hi, bool optimal) {
    p.has_extended = true;
    p.ext_d_lo = lo;
    p.ext_d_hi = hi;
    p.extended_optimal = optimal;
}

}  // namespace

std::optional<PredictedParameters> predict(const FamilySpec& spec) {
    const std::uint64_t s = spec.s;
    const Variant v = spec.variant;
    if (s == 0 || family_field_degree(spec.kind, s) > kMaxFieldDegree) return std::nullopt;
    switch (spec.kind) {
        case FamilyKind::Type1: {
            const std::uint64_t n = family_length(spec.kind, s);
            if (v == Variant{3, 1} && s >= 2) {
                auto p = base(spec, "type1 (3,1), s >= 2");
                set_distance(p, n - 4 * s, 3, 3);
                p.dual_enumerator = type1_dual(s, n);
                const BigInt u = pw(s);
                p.a3 = (u - 2) * (u - 1) * (u * u + 1) / 6;
                set_extended(p, 4, 4, true);
                p.extended_dual_enumerator = type1_extended_dual(s, n);
                return p;
            }
            if (v == Variant{6, 0} && s >= 8) {
                auto p = base(spec, "type1 (6,0), s >= 8");
                set_distance(p, n - 8 * s - 1, 6, 6);
                p.optimal = true;
                return p;
            }
            if (v == Variant{5, 1} && s >= 4) {
                auto p = base(spec, "type1 (5,1), s >= 4");
                set_distance(p, n - 8 * s, 5, 6);
                set_extended(p, 6, 6, true);
                return p;
            }
            return std::nullopt;
        }
        case FamilyKind::Type2: {
            if (v == Variant{3, 1} && s >= 2) {
                auto p = base(spec, "type2 (3,1), s >= 2");
                set_distance(p, p.n - 3 * s, 3, 4);
                set_extended(p, 4, 4, true);
                return p;
            }
            return std::nullopt;
        }
        case FamilyKind::Type3: {
            const std::uint64_t n = family_length(spec.kind, s);
            if (v == Variant{3, 1} && s >= 4) {
                auto p = base(spec, "type3 (3,1), s >= 4");
                set_distance(p, n - 2 * s, 3, 3);
                p.dual_enumerator = type3_dual(s, n);
                set_extended(p, 4, 4, true);
                p.extended_dual_enumerator = type3_extended_dual(s, n);
                return p;
            }
            if (v == Variant{5, 1} && s >= 4) {
                auto p = base(spec, "type3 (5,1), s >= 4");
                set_distance(p, n - 4 * s, 5, 6);
                set_extended(p, 6, 6, s >= 5);
                return p;
            }
            return std::nullopt;
        }
        case FamilyKind::GeneralLambda: {
            if (v.b != 0 || v.delta < 4 || v.delta % 2 != 0) return std::nullopt;
            const std::uint64_t lambda = spec.lambda;
            if (lambda == 0 || lambda % 2 == 0 || s < 3) return std::nullopt;
            if ((p2(s) - 1) % lambda != 0) return std::nullopt;
            if (lambda >= p2(s / 2)) return std::nullopt;
            const std::uint64_t ell = v.delta / 2;
            const std::uint64_t s_thm = std::max(threshold_s2(ell, lambda), expansion_and_s1(ell, lambda).s1);
            if (s < s_thm) return std::nullopt;
            auto p = base(spec, "lambda (2l,0), s >= max(s1, s2)");
            set_distance(p, p.n - 1 - (ell - 1) * s, 2 * ell, 2 * ell);
            p.optimal = true;
            return p;
        }
    }
    return std::nullopt;
}

namespace {

struct Fixture {
    FamilyKind kind;
    std::uint64_t s;
    Variant variant;
    std::uint64_t k;
    std::uint64_t d;
    std::uint64_t ext_d;
    bool with_dual;
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = {
        {FamilyKind::Type1, 2, {3, 1}, 43, 3, 4, true},
        {FamilyKind::Type1, 3, {3, 1}, 443, 3, 4, true},
        {FamilyKind::Type1, 2, {5, 1}, 35, 5, 6, false},
        {FamilyKind::Type1, 3, {5, 1}, 431, 5, 6, false},
        {FamilyKind::Type2, 2, {3, 1}, 15, 3, 4, false},
        {FamilyKind::Type2, 3, {3, 1}, 64, 3, 4, false},
        {FamilyKind::Type3, 3, {3, 1}, 15, 3, 4, true},
        {FamilyKind::Type3, 4, {3, 1}, 77, 3, 4, true},
        {FamilyKind::Type3, 3, {5, 1}, 12, 5, 6, false},
        {FamilyKind::Type3, 4, {5, 1}, 69, 5, 6, false},
    };
    return table;
}

}  // namespace

std::optional<PredictedParameters> example_fixture(const FamilySpec& spec) {
    for (const auto& f : fixtures()) {
        if (f.kind != spec.kind || f.s != spec.s || !(f.variant == spec.variant)) continue;
        auto p = base(spec, "worked example");
        set_distance(p, f.k, f.d, f.d);
        set_extended(p, f.ext_d, f.ext_d, false);
        if (f.with_dual) {
            if (f.kind == FamilyKind::Type1) {
                p.dual_enumerator = type1_dual(f.s, p.n);
                p.extended_dual_enumerator = type1_extended_dual(f.s, p.n);
            } else {
                p.dual_enumerator = type3_dual(f.s, p.n);
                p.extended_dual_enumerator = type3_extended_dual(f.s, p.n);
            }
        }
        if (f.kind == FamilyKind::Type2 && f.s == 3) p.extended_optimal = true;
        return p;
    }
    return std::nullopt;
}

std::vector<FamilySpec> example_catalog() {
    std::vector<FamilySpec> out;
    for (const auto& f : fixtures()) out.push_back(FamilySpec{f.kind, f.s, 1, f.variant});
    return out;
}

std::string to_string(ItemStatus s) {
    switch (s) {
        case ItemStatus::Match: return "MATCH";
        case ItemStatus::Mismatch: return "MISMATCH";
        case ItemStatus::Unverified: return "UNVERIFIED-AT-SCALE";
    }
    return "UNKNOWN";
}

bool VerificationReport::ok() const {
    return std::none_of(items.begin(), items.end(), [](const ReportItem& i) { return i.status == ItemStatus::Mismatch; });
}

namespace {

std::string range_text(std::uint64_t lo, std::uint64_t hi) {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

ItemStatus compare_range(std::uint64_t plo, std::uint64_t phi, std::uint64_t mlo, std::uint64_t mhi) {
    if (mhi < plo || mlo > phi) return ItemStatus::Mismatch;
    if (plo <= mlo && mhi <= phi) return ItemStatus::Match;
    return ItemStatus::Unverified;
}

ItemStatus optimal_status(bool measured_exact, bool optimal) {
    if (optimal) return ItemStatus::Match;
    return measured_exact ? ItemStatus::Mismatch : ItemStatus::Unverified;
}

void compare_prediction(VerificationReport& r, const PredictedParameters& p, const std::string& tag) {
    auto add = [&](std::string name, std::string pred, std::string meas, ItemStatus st, std::string note = {}) {
        r.items.push_back({tag + ": " + std::move(name), std::move(pred), std::move(meas), st, std::move(note)});
    };
    add("dimension", std::to_string(p.k), std::to_string(r.k), p.k == r.k ? ItemStatus::Match : ItemStatus::Mismatch);
    add("minimum distance", range_text(p.d_lo, p.d_hi), range_text(r.distance.lower.value, r.distance.upper.value),
        compare_range(p.d_lo, p.d_hi, r.distance.lower.value, r.distance.upper.value),
        "via " + to_string(r.distance.lower.source) + "/" + to_string(r.distance.upper.source));
    if (p.optimal) {
        add("sphere-packing optimal", "true", r.certificate.optimal ? "true" : "false",
            optimal_status(r.distance.exact(), r.certificate.optimal));
    }
    if (p.dual_enumerator) {
        if (r.dual_distribution) {
            add("dual weight enumerator", p.dual_enumerator->to_string(), r.dual_distribution->to_string(),
                *p.dual_enumerator == *r.dual_distribution ? ItemStatus::Match : ItemStatus::Mismatch);
        } else {
            add("dual weight enumerator", p.dual_enumerator->to_string(), "-", ItemStatus::Unverified,
                "dual dimension above the enumeration cap");
        }
    }
    if (p.a3) {
        if (r.dual_distribution) {
            const BigInt a3 = pless_fourth_moment_a3(*r.dual_distribution, r.n, r.k);
            add("A3 (power moment)", to_decimal(*p.a3), to_decimal(a3),
                a3 == *p.a3 ? ItemStatus::Match : ItemStatus::Mismatch);
        } else {
            add("A3 (power moment)", to_decimal(*p.a3), "-", ItemStatus::Unverified, "dual not enumerated");
        }
    }
    if (p.has_extended) {
        const auto& ed = r.extended.distance;
        add("extended dimension", std::to_string(p.k), std::to_string(r.extended.k),
            p.k == r.extended.k ? ItemStatus::Match : ItemStatus::Mismatch);
        add("extended minimum distance", range_text(p.ext_d_lo, p.ext_d_hi), range_text(ed.lower.value, ed.upper.value),
            compare_range(p.ext_d_lo, p.ext_d_hi, ed.lower.value, ed.upper.value));
        if (p.extended_optimal) {
            const bool opt = r.extended_certificate && r.extended_certificate->optimal;
            add("extended sphere-packing optimal", "true", opt ? "true" : "false", optimal_status(ed.exact(), opt));
        }
    }
    if (p.extended_dual_enumerator) {
        if (r.dual_distribution && r.dual_distribution->all_even()) {
            const auto ext = extended_dual(*r.dual_distribution);
            add("extended dual weight enumerator", p.extended_dual_enumerator->to_string(), ext.to_string(),
                ext == *p.extended_dual_enumerator ? ItemStatus::Match : ItemStatus::Mismatch);
        } else if (r.dual_distribution) {
            add("extended dual weight enumerator", p.extended_dual_enumerator->to_string(), "dual has odd weights",
                ItemStatus::Mismatch);
        } else {
            add("extended dual weight enumerator", p.extended_dual_enumerator->to_string(), "-", ItemStatus::Unverified,
                "dual dimension above the enumeration cap");
        }
    }
}

}  // namespace

VerificationReport verify_instance(const FamilySpec& spec, const VerifyOptions& opts) {
    VerificationReport r;
    r.spec = spec;
    const auto pred = predict(spec);
    const auto ex = example_fixture(spec);
    r.in_theorem_range = pred.has_value();
    r.has_example = ex.has_value();

    const CyclicCode code = build_family_code(spec);
    r.n = code.length();
    r.k = code.dimension();
    const unsigned m = family_field_degree(spec.kind, spec.s);
    const bool lemma_applies = spec.s >= family_lemma_min_s(spec.kind);
    auto structural = [&](std::string name, std::string pred_text, std::string meas, bool pass) {
        ItemStatus st = pass ? ItemStatus::Match : ItemStatus::Mismatch;
        std::string note;
        if (!lemma_applies) {
            note = "outside the lemma's s-range";
            if (!pass) st = ItemStatus::Unverified;
        }
        r.items.push_back({"structure: " + std::move(name), std::move(pred_text), std::move(meas), st, note});
    };
    const std::uint64_t ord = ord_mod(r.n);
    structural("ord_n(2)", std::to_string(m), std::to_string(ord), ord == m);
    const std::uint64_t bound = std::min<std::uint64_t>(family_lemma_bound(spec.kind, spec.s, spec.lambda), r.n - 1);
    if (bound >= 1) {
        const auto lr = check_leader_range(r.n, bound, m);
        structural("odd i <= " + std::to_string(bound) + " are leaders with |C_i| = " + std::to_string(m), "pass",
                   lr.pass ? "pass" : "fail", lr.pass);
    }

    r.distance = min_distance(code, opts.distance);
    if (r.distance.dual_distribution) {
        r.dual_distribution = r.distance.dual_distribution;
    } else if (code.redundancy() <= opts.max_enum_dim && r.n <= kExplicitDefiningSetLimit) {
        r.dual_distribution = weight_distribution_exhaustive(dual_code(code), {opts.max_enum_dim, opts.distance.workers});
    }
    r.extended = extend_code(code, r.distance);
    if (r.k > 0) {
        r.certificate = certify(code, r.distance);
        r.extended_certificate = certify(r.extended);
    }

    if (pred) compare_prediction(r, *pred, "theorem");
    if (ex) compare_prediction(r, *ex, "example");
    if (!pred && !ex) {
        r.items.push_back({"prediction", "none", "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                                                     range_text(r.distance.lower.value, r.distance.upper.value) + "]",
                           ItemStatus::Unverified, "outside every stated s-range and no worked example"});
    }

    if (r.dual_distribution && r.distance.distribution && r.distance.lower.value >= 3) {
        const BigInt a3 = pless_fourth_moment_a3(*r.dual_distribution, r.n, r.k);
        const BigInt direct = r.distance.distribution->count(3);
        r.items.push_back({"consistency: A3 power moment vs direct count", to_decimal(a3), to_decimal(direct),
                           a3 == direct ? ItemStatus::Match : ItemStatus::Mismatch, ""});
    }
    const bool stated = spec.kind == FamilyKind::Type1 || spec.kind == FamilyKind::Type3;
    if (stated && code.defining_set_leaders() == std::vector<std::uint64_t>{1} && r.n <= kExplicitDefiningSetLimit) {
        const auto tc = check_trace_representation(code, TraceRoot::InverseBeta);
        std::string note;
        if (!tc.equals_dual) {
            const auto alt = check_trace_representation(code, TraceRoot::Beta);
            note = std::string("gamma = beta^-1 gives ") +
                   (tc.equals_reversed_dual ? "the dual with coordinates i -> -i" : "a different set") +
                   (alt.equals_dual ? "; gamma = beta gives the dual exactly" : "");
        }
        r.items.push_back({"trace representation (gamma = beta^-1) equals dual", "true", tc.equals_dual ? "true" : "false",
                           tc.equals_dual ? ItemStatus::Match : ItemStatus::Mismatch, note});
    }
    return r;
}

std::string to_string(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::Proven: return "PROVEN";
        case ConjectureVerdict::ConfirmedComputationally: return "CONFIRMED-COMPUTATIONALLY";
        case ConjectureVerdict::Refuted: return "REFUTED-COMPUTATIONALLY";
        case ConjectureVerdict::Open: return "OPEN";
    }
    return "UNKNOWN";
}

ConjectureStatus conjecture_status(const FamilySpec& spec, const DistanceOptions& opts) {
    ConjectureStatus st;
    st.spec = spec;
    st.n = family_length(spec.kind, spec.s, spec.lambda);
    const std::int64_t bm1 = spec.variant.b - 1;
    const auto abs_bm1 = static_cast<std::uint64_t>(bm1 < 0 ? -bm1 : bm1);
    st.gcd_value = std::gcd(st.n, abs_bm1);
    st.hypothesis_holds = st.gcd_value % spec.variant.delta == 0;
    const CyclicCode code = build_family_code(spec);
    const auto d = min_distance(code, opts);
    if (d.exact()) st.measured_d = d.lower.value;
    if (st.hypothesis_holds) {
        st.verdict = ConjectureVerdict::Proven;
    } else if (d.exact()) {
        st.verdict = d.lower.value == spec.variant.delta ? ConjectureVerdict::ConfirmedComputationally
                                                          : ConjectureVerdict::Refuted;
    } else if (d.lower.value > spec.variant.delta) {
        st.verdict = ConjectureVerdict::Refuted;
    }
    return st;
}

}  // namespace optbch
