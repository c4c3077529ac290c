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

#ifndef OPTBCH_TESTS_COMMON_HPP
#define OPTBCH_TESTS_COMMON_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "optbch/binary_poly.hpp"
#include "optbch/code_analysis.hpp"
#include "optbch/cyclic_code.hpp"
#include "optbch/cyclotomy.hpp"
#include "oracle.hpp"

namespace testutil {

inline oracle::Poly to_poly(const optbch::BinaryPolynomial& p) {
    oracle::Poly out;
    for (long i = 0; i <= p.degree(); ++i) out.push_back(p.coefficient(static_cast<std::uint64_t>(i)));
    return out;
}

inline std::map<std::uint64_t, std::uint64_t> to_map(const optbch::WeightDistribution& wd) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [w, c] : wd.terms()) out[w] = static_cast<std::uint64_t>(c);
    return out;
}

inline std::vector<oracle::Row> to_rows(const std::vector<optbch::BitVec>& vs) {
    std::vector<oracle::Row> out;
    for (const auto& v : vs) {
        oracle::Row r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = v.get(i);
        out.push_back(r);
    }
    return out;
}

inline optbch::BitVec to_bitvec(const oracle::Row& r) {
    optbch::BitVec v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v.set(i, r[i]);
    return v;
}

// Cyclic code of odd length n whose defining set is a random union of cosets.
inline optbch::CyclicCode random_cyclic_code(std::uint64_t n, std::mt19937_64& rng) {
    const optbch::CosetTable table(n);
    std::vector<std::uint64_t> reps;
    for (const auto& c : table.cosets()) {
        if (rng() & 1) reps.push_back(c.leader);
    }
    return optbch::cyclic_from_coset_representatives(n, reps, optbch::default_field_for_length(n));
}

}  // namespace testutil

#endif  // OPTBCH_TESTS_COMMON_HPP
