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

#ifndef OPTBCH_BIGINT_HPP
#define OPTBCH_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace optbch {

/// Arbitrary-precision signed integer used for every count and bound.
using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// 2^e.
BigInt pow2(std::uint64_t e);

/// Σ_{i=0}^{radius} C(n, i), the size of a Hamming ball in GF(2)^n.
BigInt hamming_ball(std::uint64_t n, std::uint64_t radius);

std::string to_decimal(const BigInt& v);

/// Parses an optionally signed decimal string. Throws std::invalid_argument.
BigInt from_decimal(std::string_view text);

}  // namespace optbch

#endif  // OPTBCH_BIGINT_HPP
