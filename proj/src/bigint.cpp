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

#include "optbch/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace optbch {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays an exact binomial C(n-k+i, i) after each step
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt pow2(std::uint64_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

BigInt hamming_ball(std::uint64_t n, std::uint64_t radius) {
    BigInt sum = 0;
    BigInt term = 1;
    for (std::uint64_t i = 0; i <= radius && i <= n; ++i) {
        if (i > 0) {
            term *= (n - i + 1);
            term /= i;
        }
        sum += term;
    }
    return sum;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty decimal string");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed decimal string");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("malformed decimal string: " + std::string(text));
        }
    }
    BigInt r(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-r) : r;
}

}  // namespace optbch
