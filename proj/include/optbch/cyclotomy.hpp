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

#ifndef OPTBCH_CYCLOTOMY_HPP
#define OPTBCH_CYCLOTOMY_HPP

#include <cstdint>
#include <vector>

namespace optbch {

/// Smallest m >= 1 with 2^m = 1 (mod n). Throws std::invalid_argument for
/// even or zero n.
std::uint64_t ord_mod(std::uint64_t n);

/// A 2-cyclotomic coset modulo n. members[0] is the leader and
/// members[j] = leader * 2^j mod n.
struct Coset {
    std::uint64_t leader = 0;
    std::vector<std::uint64_t> members;

    std::uint64_t size() const noexcept { return members.size(); }
    friend bool operator==(const Coset&, const Coset&) = default;
};

/// The coset containing s mod n, computed without a full table.
Coset coset_of(std::uint64_t n, std::uint64_t s);
std::uint64_t coset_leader(std::uint64_t n, std::uint64_t s);
std::uint64_t coset_size(std::uint64_t n, std::uint64_t s);

/// Partition of Z_n into cosets, ordered by ascending leader.
class CosetTable {
public:
    explicit CosetTable(std::uint64_t n);

    std::uint64_t modulus() const noexcept { return n_; }
    const std::vector<Coset>& cosets() const noexcept { return cosets_; }
    std::size_t count() const noexcept { return cosets_.size(); }
    /// Coset owning residue r (0 <= r < n).
    const Coset& owner(std::uint64_t r) const { return cosets_.at(owner_.at(r)); }
    std::size_t owner_index(std::uint64_t r) const { return owner_.at(r); }
    bool is_leader(std::uint64_t r) const { return owner(r).leader == r; }
    std::vector<std::uint64_t> leaders() const;

private:
    std::uint64_t n_;
    std::vector<Coset> cosets_;
    std::vector<std::uint32_t> owner_;
};

/// Throws std::invalid_argument for even n; n up to 2^32 - 1.
CosetTable all_cosets(std::uint64_t n);

struct LeaderRangeEntry {
    std::uint64_t s = 0;
    bool is_leader = false;
    std::uint64_t size = 0;
    bool pass = false;
};

struct LeaderRangeReport {
    std::uint64_t n = 0;
    std::uint64_t bound = 0;
    std::uint64_t expected_size = 0;
    std::vector<LeaderRangeEntry> entries;  // one per odd s <= bound
    bool pass = false;
};

/// For each odd s in [1, bound]: is s a coset leader and |C_s| ==
/// expected_size? Works for any odd n since it never tabulates Z_n.
LeaderRangeReport check_leader_range(std::uint64_t n, std::uint64_t bound, std::uint64_t expected_size);

/// floor(n * 2^ceil(m/2) / (2^m - 1)) with m = ord_mod(n): the upper end of
/// the range in which every coset has full size m and every odd element
/// leads its coset, provided 2^floor(m/2) < n.
std::uint64_t full_size_leader_bound(std::uint64_t n);

}  // namespace optbch

#endif  // OPTBCH_CYCLOTOMY_HPP
