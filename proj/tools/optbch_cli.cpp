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

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optbch/bounds.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/cyclotomy.hpp"
#include "optbch/families.hpp"
#include "optbch/serialization.hpp"

namespace fs = std::filesystem;
using namespace optbch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

constexpr std::uint64_t kCosetTableCap = std::uint64_t{1} << 26;

// Published thresholds for lambda = 1, indexed by ell.
const std::map<std::uint64_t, std::uint64_t> kPublishedLambda1 = {
    {2, 3}, {3, 4}, {4, 6}, {5, 8}, {6, 11}, {7, 14}, {8, 17}, {9, 20}, {10, 23}};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CodeSelection {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> delta;
    std::int64_t b = 1;
    std::optional<std::string> family;
    std::optional<std::uint64_t> s;
    std::uint64_t lambda = 1;
    std::string variant = "d3b1";

    void add_to(CLI::App* cmd) {
        cmd->add_option("--n", n, "code length (odd)");
        cmd->add_option("--delta", delta, "designed distance");
        cmd->add_option("--b", b, "first exponent of the consecutive run");
        cmd->add_option("--family", family, "type1|type2|type3|lambda");
        cmd->add_option("--s", s, "family parameter s");
        cmd->add_option("--lambda", lambda, "divisor for the lambda family");
        cmd->add_option("--variant", variant, "d<delta>b<b>");
    }

    std::optional<FamilySpec> spec() const {
        if (!family) return std::nullopt;
        if (!s) throw UsageError("--family needs --s");
        FamilySpec sp;
        sp.kind = parse_family(*family);
        sp.s = *s;
        sp.lambda = lambda;
        sp.variant = parse_variant(variant);
        return sp;
    }

    CyclicCode build() const {
        if (family && n) throw UsageError("give either --n/--delta/--b or --family/--s/--variant, not both");
        if (auto sp = spec()) return build_family_code(*sp);
        if (!n || !delta) throw UsageError("select a code with --n and --delta, or with --family and --s");
        return bch_code(BchDesign{*n, *delta, b});
    }
};

struct Caps {
    unsigned max_enum_dim = 26;
    std::uint64_t budget = 50'000'000;
    unsigned workers = 1;
    bool force = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--max-enum-dim", max_enum_dim, "largest dimension enumerated exhaustively")->capture_default_str();
        cmd->add_option("--budget", budget, "support-search budget")->capture_default_str();
        cmd->add_option("--workers", workers, "enumeration threads")->capture_default_str()->check(CLI::Range(1u, 256u));
        cmd->add_flag("--force", force, "accept an inexact distance interval");
    }

    DistanceOptions distance() const {
        DistanceOptions o;
        o.max_dim = max_enum_dim;
        o.budget = budget;
        o.workers = workers;
        return o;
    }
};

std::string params_text(std::uint64_t n, std::uint64_t k, const DistanceResult& d) {
    std::ostringstream os;
    os << '[' << n << ',' << k << ',';
    if (d.exact()) {
        os << d.lower.value;
    } else {
        os << d.lower.value << "<=d<=" << d.upper.value;
    }
    os << ']';
    return os.str();
}

std::string bound_text(const DistanceBound& b) { return std::to_string(b.value) + " (" + to_string(b.source) + ")"; }

bool is_perfect(const OptimalityCertificate& c) {
    return c.d_lower.value == c.d_upper.value && c.d_lower.value % 2 == 1 && c.redundancy_space == c.ball_admitted;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << j.dump(2) << '\n';
}

int refuse_inexact(const std::string& what, const DistanceResult& d) {
    std::cerr << "error: exact minimum distance of " << what << " is out of reach within the caps (" << d.lower.value
              << " <= d <= " << d.upper.value << "); raise --max-enum-dim/--budget or pass --force\n";
    return kExitInfeasible;
}

// construct

int run_construct(const CodeSelection& sel, bool json) {
    const CyclicCode code = sel.build();
    const Json desc = code_descriptor(code);
    if (json) {
        std::cout << desc.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "length        " << code.length() << '\n'
              << "field         GF(2^" << code.field()->degree() << "), modulus " << desc["modulus_hex"].get<std::string>()
              << '\n'
              << "beta          alpha^" << code.beta_exp() << '\n'
              << "leaders       ";
    const auto& leaders = code.defining_set_leaders();
    for (std::size_t i = 0; i < leaders.size(); ++i) std::cout << (i ? " " : "") << leaders[i];
    std::cout << '\n'
              << "dimension     " << code.dimension() << '\n'
              << "bch bound     " << code.bch_bound() << '\n'
              << "generator     " << code.generator().to_hex() << '\n';
    return kExitOk;
}

// analyze

// The distance ladder stops at the pincer; analyze still reports both
// distributions when one side is small enough to enumerate.
void fill_distributions(const CyclicCode& code, DistanceResult& d, const Caps& caps) {
    if (d.distribution && d.dual_distribution) return;
    const std::uint64_t n = code.length();
    const std::uint64_t k = code.dimension();
    EnumerationOptions eo{caps.max_enum_dim, caps.workers};
    if (k <= n - k && k <= caps.max_enum_dim) {
        if (!d.distribution) d.distribution = weight_distribution_exhaustive(code, eo);
        d.dual_distribution = macwilliams_transform(*d.distribution, k);
    } else if (n - k <= caps.max_enum_dim && n <= kExplicitDefiningSetLimit) {
        if (!d.dual_distribution) d.dual_distribution = weight_distribution_exhaustive(dual_code(code), eo);
        d.distribution = macwilliams_transform(*d.dual_distribution, n - k);
    }
}

int run_analyze(const CodeSelection& sel, const Caps& caps, bool extended, bool json) {
    const CyclicCode code = sel.build();
    DistanceResult d = min_distance(code, caps.distance());
    if (!d.exact() && !caps.force) return refuse_inexact("the code", d);
    fill_distributions(code, d, caps);
    const OptimalityCertificate cert = certify(code, d);
    std::optional<ExtendedCode> ext;
    if (extended) ext = extend_code(code, d);

    if (json) {
        Json j;
        j["code"] = code_descriptor(code);
        j["n"] = code.length();
        j["k"] = code.dimension();
        j["d_lower"] = to_json(d.lower);
        j["d_upper"] = to_json(d.upper);
        j["exact"] = d.exact();
        j["perfect"] = is_perfect(cert);
        j["optimal"] = cert.optimal;
        j["weight_distribution"] = d.distribution ? to_json(*d.distribution) : Json(nullptr);
        j["dual_weight_distribution"] = d.dual_distribution ? to_json(*d.dual_distribution) : Json(nullptr);
        if (ext) {
            const OptimalityCertificate ec = certify(*ext);
            const auto& ed = ext->distance;
            j["extended"] = Json{{"n", ext->n},
                                 {"k", ext->k},
                                 {"d_lower", to_json(ed.lower)},
                                 {"d_upper", to_json(ed.upper)},
                                 {"optimal", ec.optimal},
                                 {"weight_distribution", ed.distribution ? to_json(*ed.distribution) : Json(nullptr)},
                                 {"dual_weight_distribution",
                                  ed.dual_distribution ? to_json(*ed.dual_distribution) : Json(nullptr)}};
        }
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "parameters    " << params_text(code.length(), code.dimension(), d) << '\n'
              << "lower bound   " << bound_text(d.lower) << '\n'
              << "upper bound   " << bound_text(d.upper) << '\n'
              << "perfect       " << (is_perfect(cert) ? "yes" : "no") << '\n'
              << "optimal       " << (cert.optimal ? "yes" : "no") << '\n';
    if (d.distribution) std::cout << "weights       " << d.distribution->to_string() << '\n';
    if (d.dual_distribution) std::cout << "dual weights  " << d.dual_distribution->to_string() << '\n';
    if (ext) {
        const OptimalityCertificate ec = certify(*ext);
        std::cout << "extended      " << params_text(ext->n, ext->k, ext->distance) << (ec.optimal ? " optimal" : "")
                  << '\n';
        if (ext->distance.distribution) std::cout << "ext weights   " << ext->distance.distribution->to_string() << '\n';
        if (ext->distance.dual_distribution) {
            std::cout << "ext dual      " << ext->distance.dual_distribution->to_string() << '\n';
        }
    }
    return kExitOk;
}

// certify

int run_certify(const CodeSelection& sel, const Caps& caps, bool extended, const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const CyclicCode code = sel.build();
    const DistanceResult d = min_distance(code, caps.distance());
    std::optional<ExtendedCode> ext;
    if (extended) ext = extend_code(code, d);
    const DistanceResult& measured = ext ? ext->distance : d;
    if (!measured.exact() && !caps.force) return refuse_inexact(ext ? "the extended code" : "the code", measured);
    const OptimalityCertificate cert = ext ? certify(*ext) : certify(code, d);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(to_json(make_certificate_file(code, cert, measured, extended, secs)), out_path);
    return kExitOk;
}

// verify

void print_report(const VerificationReport& r) {
    std::cout << to_string(r.spec) << ": n=" << r.n << " k=" << r.k << (r.in_theorem_range ? "" : " (outside theorem range)")
              << '\n';
    std::size_t w = 4;
    for (const auto& it : r.items) w = std::max(w, it.name.size());
    for (const auto& it : r.items) {
        std::cout << "  " << std::left << std::setw(static_cast<int>(w)) << it.name << "  " << std::setw(20)
                  << to_string(it.status) << " predicted " << it.predicted << ", measured " << it.measured;
        if (!it.note.empty()) std::cout << " (" << it.note << ")";
        std::cout << '\n';
    }
    std::cout << "  result: " << (r.ok() ? "ok" : "MISMATCH") << '\n';
}

int run_verify(const CodeSelection& sel, const Caps& caps, bool json) {
    auto spec = sel.spec();
    if (!spec) throw UsageError("verify needs --family and --s");
    VerifyOptions opts;
    opts.distance = caps.distance();
    opts.max_enum_dim = caps.max_enum_dim;
    const VerificationReport r = verify_instance(*spec, opts);
    if (!r.distance.exact() && !caps.force) return refuse_inexact(to_string(*spec), r.distance);
    if (json) {
        std::cout << to_json(r).dump(2) << '\n';
    } else {
        print_report(r);
    }
    return r.ok() ? kExitOk : kExitMismatch;
}

// table1

bool row_matches_published(const ThresholdReport& r) {
    if (r.lambda != 1) return true;
    auto it = kPublishedLambda1.find(r.ell);
    return it == kPublishedLambda1.end() || (r.s_empirical && *r.s_empirical == it->second);
}

int run_table1(std::uint64_t lambda, std::uint64_t ell_min, std::uint64_t ell_max, std::uint64_t horizon, bool json) {
    if (ell_min < 2 || ell_max < ell_min) throw UsageError("need 2 <= --ell-min <= --ell-max");
    bool all_match = true;
    if (!json) {
        std::cout << std::right << std::setw(4) << "ell" << std::setw(8) << "s1" << std::setw(8) << "s2" << std::setw(8)
                  << "s_thm" << std::setw(8) << "s_emp" << "  published\n";
    }
    for (std::uint64_t ell = ell_min; ell <= ell_max; ++ell) {
        const ThresholdReport r = empirical_threshold(ell, lambda, horizon);
        const bool match = row_matches_published(r);
        all_match = all_match && match;
        if (json) {
            Json j = to_json(r);
            j["matches_published"] = match;
            std::cout << j.dump() << '\n';
            continue;
        }
        std::cout << std::setw(4) << ell << std::setw(8) << r.expansion.s1 << std::setw(8) << r.s2 << std::setw(8)
                  << r.s_theorem << std::setw(8) << (r.s_empirical ? std::to_string(*r.s_empirical) : std::string(">h"));
        auto pub = lambda == 1 ? kPublishedLambda1.find(ell) : kPublishedLambda1.end();
        if (pub != kPublishedLambda1.end()) {
            std::cout << "  " << pub->second << (match ? "" : "  MISMATCH");
        } else {
            std::cout << "  -";
        }
        std::cout << '\n';
    }
    return all_match ? kExitOk : kExitMismatch;
}

// reproduce-paper

struct CheckRow {
    std::string name;
    bool pass = false;
    Json detail;
};

std::vector<CheckRow> reproduce_checks(const Caps& caps) {
    std::vector<CheckRow> rows;
    VerifyOptions opts;
    opts.distance = caps.distance();
    opts.max_enum_dim = caps.max_enum_dim;

    for (const FamilySpec& spec : example_catalog()) {
        const VerificationReport r = verify_instance(spec, opts);
        Json detail;
        detail["n"] = r.n;
        detail["k"] = r.k;
        detail["d"] = params_text(r.n, r.k, r.distance);
        Json bad = Json::array();
        for (const auto& it : r.items) {
            if (it.status == ItemStatus::Mismatch) bad.push_back(it.name);
        }
        detail["mismatches"] = bad;
        rows.push_back({"example " + to_string(spec), r.ok(), detail});
    }

    for (std::uint64_t ell = 2; ell <= 10; ++ell) {
        const ThresholdReport r = empirical_threshold(ell, 1, 30);
        rows.push_back({"table1 ell=" + std::to_string(ell), row_matches_published(r),
                        Json{{"s_empirical", r.s_empirical ? Json(*r.s_empirical) : Json(nullptr)},
                             {"published", kPublishedLambda1.at(ell)}}});
    }

    for (std::uint64_t s = 4; s <= 10; ++s) {
        FamilySpec spec{FamilyKind::GeneralLambda, s, 1, Variant{6, 0}};
        const CyclicCode code = build_family_code(spec);
        const DistanceResult d = min_distance(code, caps.distance());
        const std::uint64_t n = code.length();
        const bool pass = code.dimension() == n - 1 - 2 * s && d.exact() && d.lower.value == 6 &&
                          d.lower.source != BoundSource::Enumeration && d.lower.source != BoundSource::MacWilliams;
        rows.push_back({"pincer lambda=1 ell=3 s=" + std::to_string(s), pass,
                        Json{{"n", n}, {"k", code.dimension()}, {"d", params_text(n, code.dimension(), d)}}});
    }

    {
        FamilySpec spec{FamilyKind::Type1, 8, 1, Variant{6, 0}};
        const VerificationReport r = verify_instance(spec, opts);
        rows.push_back({"large " + to_string(spec), r.ok() && r.distance.exact(),
                        Json{{"n", r.n}, {"k", r.k}, {"d", params_text(r.n, r.k, r.distance)}}});
    }
    return rows;
}

int run_reproduce(const Caps& caps, bool json) {
    const std::vector<CheckRow> rows = reproduce_checks(caps);
    bool all = true;
    std::size_t w = 4;
    for (const auto& r : rows) w = std::max(w, r.name.size());
    for (const auto& r : rows) {
        all = all && r.pass;
        if (json) {
            Json j;
            j["check"] = r.name;
            j["status"] = r.pass ? "PASS" : "FAIL";
            j["detail"] = r.detail;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << std::left << std::setw(static_cast<int>(w)) << r.name << "  " << (r.pass ? "PASS" : "FAIL");
            if (r.detail.contains("mismatches") && !r.detail["mismatches"].empty()) {
                std::cout << "  " << r.detail["mismatches"].dump();
            }
            std::cout << '\n';
        }
    }
    return all ? kExitOk : kExitMismatch;
}

// cosets

std::optional<Json> read_cached_cosets(const fs::path& p, std::uint64_t n) {
    std::ifstream f(p);
    if (!f) return std::nullopt;
    try {
        Json j = Json::parse(f);
        if (j.value("n", std::uint64_t{0}) == n && j.contains("cosets")) return j;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

Json coset_json(std::uint64_t n) {
    const char* dir = std::getenv("OPTBCH_CACHE_DIR");
    if (!dir || !*dir) return to_json(CosetTable(n));
    const fs::path path = fs::path(dir) / ("cosets-" + std::to_string(n) + ".json");
    if (auto cached = read_cached_cosets(path, n)) return *cached;
    Json j = to_json(CosetTable(n));
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp);
        if (f) f << j.dump() << '\n';
    }
    fs::rename(tmp, path, ec);
    return j;
}

int run_cosets(std::uint64_t n, bool force, bool json) {
    if (n % 2 == 0) throw UsageError("n must be odd");
    if (n > kCosetTableCap && !force) {
        std::cerr << "error: a full coset table for n=" << n << " exceeds the cap of " << kCosetTableCap
                  << " residues; pass --force\n";
        return kExitInfeasible;
    }
    const Json j = coset_json(n);
    if (json) {
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "n=" << n << " ord_n(2)=" << j["m"] << " cosets=" << j["count"] << '\n';
    std::cout << std::right << std::setw(12) << "leader" << std::setw(8) << "size" << '\n';
    for (const auto& c : j["cosets"]) {
        std::cout << std::setw(12) << c["leader"].get<std::uint64_t>() << std::setw(8) << c["size"].get<std::uint64_t>()
                  << '\n';
    }
    return kExitOk;
}

const std::array<const char*, 7> kSubcommands = {"construct", "analyze",         "certify", "verify",
                                                 "table1",    "reproduce-paper", "cosets"};

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && argv[1][0] != '-') {
        const std::string sub = argv[1];
        if (std::find(kSubcommands.begin(), kSubcommands.end(), sub) == kSubcommands.end()) {
            std::cerr << "error: unknown subcommand '" << sub << "'\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Binary BCH code families: construction, exact parameters and optimality certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    bool json = false;
    bool extended = false;
    std::string out_path;
    CodeSelection sel;
    Caps caps;

    auto* construct = app.add_subcommand("construct", "print the code descriptor");
    sel.add_to(construct);
    construct->add_flag("--json", json);

    auto* analyze = app.add_subcommand("analyze", "minimum distance and weight distributions");
    sel.add_to(analyze);
    caps.add_to(analyze);
    analyze->add_flag("--extended", extended, "also report the extended code");
    analyze->add_flag("--json", json);

    auto* cert = app.add_subcommand("certify", "write an optimality certificate");
    sel.add_to(cert);
    caps.add_to(cert);
    cert->add_flag("--extended", extended, "certify the extended code");
    cert->add_option("-o,--output", out_path, "certificate path (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "check a family instance against its predictions");
    sel.add_to(verify);
    caps.add_to(verify);
    verify->add_flag("--json", json);

    std::uint64_t lambda = 1, ell_min = 2, ell_max = 10, horizon = 30;
    auto* table1 = app.add_subcommand("table1", "empirical sphere-packing thresholds");
    table1->add_option("--lambda", lambda)->capture_default_str();
    table1->add_option("--ell-min", ell_min)->capture_default_str();
    table1->add_option("--ell-max", ell_max)->capture_default_str();
    table1->add_option("--horizon", horizon)->capture_default_str();
    table1->add_flag("--json", json, "one JSON object per line");

    auto* repro = app.add_subcommand("reproduce-paper", "run the full fixture set");
    caps.add_to(repro);
    repro->add_flag("--json", json, "one JSON object per line");

    std::uint64_t coset_n = 0;
    bool coset_force = false;
    auto* cosets = app.add_subcommand("cosets", "2-cyclotomic cosets modulo n");
    cosets->add_option("--n", coset_n, "odd modulus")->required();
    cosets->add_flag("--force", coset_force);
    cosets->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return run_construct(sel, json);
        if (*analyze) return run_analyze(sel, caps, extended, json);
        if (*cert) return run_certify(sel, caps, extended, out_path);
        if (*verify) return run_verify(sel, caps, json);
        if (*table1) return run_table1(lambda, ell_min, ell_max, horizon, json);
        if (*repro) return run_reproduce(caps, json);
        if (*cosets) return run_cosets(coset_n, coset_force, json);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
