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

#include "optbch/cyclotomy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace optbch {

namespace {

void require_odd(std::uint64_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("modulus must be odd and positive, got " + std::to_string(n));
}

std::uint64_t twice_mod(std::uint64_t x, std::uint64_t n) {
    // n < 2^63, so 2x never overflows
    const std::uint64_t y = x << 1;
    return y >= n ? y - n : y;
}

}  // namespace

std::uint64_t ord_mod(std::uint64_t n) {
    require_odd(n);
    if (n == 1) return 1;
    std::uint64_t v = 2 % n;
    std::uint64_t m = 1;
    while (v != 1) {
        v = twice_mod(v, n);
        ++m;
    }
    return m;
}

Coset coset_of(std::uint64_t n, std::uint64_t s) {
    require_odd(n);
    const std::uint64_t start = s % n;
    std::uint64_t leader = start;
    std::uint64_t x = twice_mod(start, n);
    while (x != start) {
        leader = std::min(leader, x);
        x = twice_mod(x, n);
    }
    Coset c;
    c.leader = leader;
    x = leader;
    do {
        c.members.push_back(x);
        x = twice_mod(x, n);
    } while (x != leader);
    return c;
}

std::uint64_t coset_leader(std::uint64_t n, std::uint64_t s) {
    require_odd(n);
    const std::uint64_t start = s % n;
    std::uint64_t leader = start;
    for (std::uint64_t x = twice_mod(start, n); x != start; x = twice_mod(x, n)) leader = std::min(leader, x);
    return leader;
}

std::uint64_t coset_size(std::uint64_t n, std::uint64_t s) {
    require_odd(n);
    const std::uint64_t start = s % n;
    std::uint64_t size = 1;
    for (std::uint64_t x = twice_mod(start, n); x != start; x = twice_mod(x, n)) ++size;
    return size;
}

CosetTable::CosetTable(std::uint64_t n) : n_(n) {
    require_odd(n);
    if (n > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("modulus too large to tabulate");
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    owner_.assign(n, kUnset);
    for (std::uint64_t r = 0; r < n; ++r) {
        if (owner_[r] != kUnset) continue;
        // r is the smallest unvisited residue, hence the leader of its coset
        Coset c;
        c.leader = r;
        std::uint64_t x = r;
        do {
            owner_[x] = static_cast<std::uint32_t>(cosets_.size());
            c.members.push_back(x);
            x = twice_mod(x, n);
        } while (x != r);
        cosets_.push_back(std::move(c));
    }
}

std::vector<std::uint64_t> CosetTable::leaders() const {
    std::vector<std::uint64_t> out;
    out.reserve(cosets_.size());
    for (const auto& c : cosets_) out.push_back(c.leader);
    return out;
}

CosetTable all_cosets(std::uint64_t n) { return CosetTable(n); }

LeaderRangeReport check_leader_range(std::uint64_t n, std::uint64_t bound, std::uint64_t expected_size) {
    require_odd(n);
    LeaderRangeReport report;
    report.n = n;
    report.bound = bound;
    report.expected_size = expected_size;
    report.pass = true;
    for (std::uint64_t s = 1; s <= bound; s += 2) {
        const Coset c = coset_of(n, s);
        LeaderRangeEntry e;
        e.s = s;
        e.is_leader = c.leader == s % n;
        e.size = c.size();
        e.pass = e.is_leader && e.size == expected_size;
        report.pass = report.pass && e.pass;
        report.entries.push_back(e);
    }
    return report;
}

std::uint64_t full_size_leader_bound(std::uint64_t n) {
    const std::uint64_t m = ord_mod(n);
    using boost::multiprecision::cpp_int;
    cpp_int num = cpp_int(n) << ((m + 1) / 2);
    cpp_int den = (cpp_int(1) << m) - 1;
    return static_cast<std::uint64_t>(num / den);
}

}  // namespace optbch
