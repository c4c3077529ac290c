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

#include "optbch/bitvec.hpp"

#include <stdexcept>

namespace optbch {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVec BitVec::cyclic_shift() const {
    BitVec out(length_);
    if (length_ == 0) return out;
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) out.set(i + 1 == length_ ? 0 : i + 1);
    }
    return out;
}

BitVec BitVec::appended(bool bit) const {
    BitVec out(length_ + 1);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w];
    out.set(length_, bit);
    return out;
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (auto w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace optbch
