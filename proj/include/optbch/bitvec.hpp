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

#ifndef OPTBCH_BITVEC_HPP
#define OPTBCH_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace optbch {

/// Fixed-length vector over GF(2), packed 64 bits per word. Bit i is
/// coordinate i; unused high bits of the last word are always zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters, coordinate 0 first.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const noexcept { return length_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }
    bool is_zero() const noexcept {
        for (auto word : words_) {
            if (word) return false;
        }
        return true;
    }

    /// (c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}).
    BitVec cyclic_shift() const;

    /// Appends one coordinate, returning a vector of length size()+1.
    BitVec appended(bool bit) const;

    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept;
};

}  // namespace optbch

#endif  // OPTBCH_BITVEC_HPP
