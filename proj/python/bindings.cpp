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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "optbch/bounds.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/cyclotomy.hpp"
#include "optbch/families.hpp"
#include "optbch/serialization.hpp"

namespace py = pybind11;
using namespace optbch;

namespace {

py::object to_py(const BigInt& v) {
    const std::string s = to_decimal(v);
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict distribution_to_py(const WeightDistribution& wd) {
    py::dict d;
    for (const auto& [w, c] : wd.terms()) d[py::int_(w)] = to_py(c);
    return d;
}

WeightDistribution distribution_from_py(const py::dict& d, std::uint64_t n) {
    WeightDistribution wd(n);
    for (auto item : d) {
        const auto w = item.first.cast<std::uint64_t>();
        wd.add(w, from_decimal(py::str(item.second).cast<std::string>()));
    }
    return wd;
}

BitVec bits_from_py(const std::vector<int>& v) {
    BitVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i] & 1);
    return out;
}

std::vector<int> bits_to_py(const BitVec& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

DistanceOptions distance_options(unsigned max_dim, std::uint64_t budget, unsigned workers) {
    DistanceOptions o;
    o.max_dim = max_dim;
    o.budget = budget;
    o.workers = workers;
    return o;
}

py::dict distance_to_py(const DistanceResult& d) {
    py::dict out;
    out["lower"] = d.lower.value;
    out["lower_source"] = to_string(d.lower.source);
    out["upper"] = d.upper.value;
    out["upper_source"] = to_string(d.upper.source);
    out["exact"] = d.exact();
    out["distribution"] = d.distribution ? py::object(distribution_to_py(*d.distribution)) : py::none();
    out["dual_distribution"] = d.dual_distribution ? py::object(distribution_to_py(*d.dual_distribution)) : py::none();
    return out;
}

FamilySpec make_spec(const std::string& family, std::uint64_t s, const std::string& variant, std::uint64_t lambda) {
    FamilySpec sp;
    sp.kind = parse_family(family);
    sp.s = s;
    sp.lambda = lambda;
    sp.variant = parse_variant(variant);
    return sp;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Binary BCH code families: exact parameters, weight distributions and optimality certificates";
    m.attr("__version__") = kToolVersion;

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<CyclicCode>(m, "CyclicCode")
        .def_property_readonly("length", &CyclicCode::length)
        .def_property_readonly("dimension", &CyclicCode::dimension)
        .def_property_readonly("redundancy", &CyclicCode::redundancy)
        .def_property_readonly("field_degree", [](const CyclicCode& c) { return c.field()->degree(); })
        .def_property_readonly("modulus", [](const CyclicCode& c) { return c.field()->modulus(); })
        .def_property_readonly("beta_exp", &CyclicCode::beta_exp)
        .def_property_readonly("defining_set_leaders", &CyclicCode::defining_set_leaders)
        .def_property_readonly("generator_hex", [](const CyclicCode& c) { return c.generator().to_hex(); })
        .def("bch_bound", &CyclicCode::bch_bound)
        .def("descriptor", [](const CyclicCode& c) { return to_py(code_descriptor(c)); })
        .def("encode", [](const CyclicCode& c, const std::vector<int>& msg) { return bits_to_py(encode(c, bits_from_py(msg))); })
        .def("is_codeword", [](const CyclicCode& c, const std::vector<int>& v) { return is_codeword(c, bits_from_py(v)); })
        .def("dual", [](const CyclicCode& c) { return dual_code(c); })
        .def("__repr__", [](const CyclicCode& c) {
            return "<CyclicCode [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]>";
        });

    m.def(
        "bch_code",
        [](std::uint64_t n, std::uint64_t delta, std::int64_t b, std::optional<std::uint64_t> modulus) {
            const BchDesign design{n, delta, b};
            if (!modulus) return bch_code(design);
            return bch_code(design, Field::with_modulus(static_cast<unsigned>(ord_mod(n)), *modulus));
        },
        py::arg("n"), py::arg("delta"), py::arg("b") = 1, py::arg("modulus") = py::none());

    m.def(
        "cyclic_code",
        [](std::uint64_t n, const std::vector<std::uint64_t>& reps) {
            return cyclic_from_coset_representatives(n, reps, default_field_for_length(n));
        },
        py::arg("n"), py::arg("coset_representatives"));

    m.def(
        "family_code",
        [](const std::string& family, std::uint64_t s, const std::string& variant, std::uint64_t lambda) {
            return build_family_code(make_spec(family, s, variant, lambda));
        },
        py::arg("family"), py::arg("s"), py::arg("variant") = "d3b1", py::arg("lam") = 1);

    m.def("ord_mod", &ord_mod, py::arg("n"));
    m.def(
        "cyclotomic_cosets",
        [](std::uint64_t n) {
            const CosetTable t(n);
            std::vector<std::vector<std::uint64_t>> out;
            for (const auto& c : t.cosets()) out.push_back(c.members);
            return out;
        },
        py::arg("n"));

    m.def(
        "weight_distribution",
        [](const CyclicCode& c, unsigned max_dim, unsigned workers) {
            WeightDistribution wd;
            {
                py::gil_scoped_release release;
                wd = weight_distribution_exhaustive(c, {max_dim, workers});
            }
            return distribution_to_py(wd);
        },
        py::arg("code"), py::arg("max_dim") = 26, py::arg("workers") = 1);

    m.def(
        "macwilliams",
        [](const py::dict& wd, std::uint64_t n, std::uint64_t k) {
            return distribution_to_py(macwilliams_transform(distribution_from_py(wd, n), k));
        },
        py::arg("distribution"), py::arg("n"), py::arg("k"));

    m.def(
        "min_distance",
        [](const CyclicCode& c, unsigned max_dim, std::uint64_t budget, unsigned workers) {
            DistanceResult d;
            {
                py::gil_scoped_release release;
                d = min_distance(c, distance_options(max_dim, budget, workers));
            }
            return distance_to_py(d);
        },
        py::arg("code"), py::arg("max_dim") = 26, py::arg("budget") = 50'000'000, py::arg("workers") = 1);

    m.def("sphere_packing_admits", &sphere_packing_admits, py::arg("n"), py::arg("k"), py::arg("d"));
    m.def("sphere_packing_max_d", &sphere_packing_max_d, py::arg("n"), py::arg("k"));

    m.def(
        "certificate",
        [](const CyclicCode& c, bool extended, unsigned max_dim, std::uint64_t budget, unsigned workers) {
            const auto t0 = std::chrono::steady_clock::now();
            const DistanceResult d = min_distance(c, distance_options(max_dim, budget, workers));
            Json j;
            if (extended) {
                const ExtendedCode e = extend_code(c, d);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                j = to_json(make_certificate_file(c, certify(e), e.distance, true, secs));
            } else {
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                j = to_json(make_certificate_file(c, certify(c, d), d, false, secs));
            }
            return to_py(j);
        },
        py::arg("code"), py::arg("extended") = false, py::arg("max_dim") = 26, py::arg("budget") = 50'000'000,
        py::arg("workers") = 1);

    m.def(
        "parse_certificate",
        [](const std::string& text) { return to_py(to_json(certificate_from_json(Json::parse(text)))); },
        py::arg("text"));

    m.def(
        "verify",
        [](const std::string& family, std::uint64_t s, const std::string& variant, std::uint64_t lambda) {
            return to_py(to_json(verify_instance(make_spec(family, s, variant, lambda))));
        },
        py::arg("family"), py::arg("s"), py::arg("variant") = "d3b1", py::arg("lam") = 1);

    m.def(
        "empirical_threshold",
        [](std::uint64_t ell, std::uint64_t lambda, std::uint64_t horizon) {
            return to_py(to_json(empirical_threshold(ell, lambda, horizon)));
        },
        py::arg("ell"), py::arg("lam") = 1, py::arg("horizon") = 30);
}
