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

#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "optbch/finite_field.hpp"

using namespace optbch;

TEST_CASE("exponents add under multiplication") {
    auto f = Field::build(4);
    CHECK(f->mul(f->exp(3), f->exp(5)) == f->exp(8));
    CHECK(f->inv(f->exp(3)) == f->exp(12));
    for (FieldValue a = 0; a < 16; ++a) CHECK(f->add(a, a) == 0);
}

TEST_CASE("inverse of zero is an error") {
    auto f = Field::build(4);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
}

TEST_CASE("builtin moduli match the bit-serial oracle") {
    for (unsigned m = 2; m <= 12; ++m) {
        auto f = Field::build(m);
        CHECK(is_primitive_polynomial(m, f->modulus()));
        std::mt19937_64 rng(m);
        for (int t = 0; t < 500; ++t) {
            const FieldValue a = rng() & ((1u << m) - 1), b = rng() & ((1u << m) - 1);
            CHECK(f->mul(a, b) == oracle::gf_mul(a, b, m, f->modulus()));
        }
    }
}

TEST_CASE("untabulated fields agree with the oracle") {
    for (unsigned m : {21u, 24u, 28u, 31u, 32u}) {
        auto f = Field::build(m);
        CHECK_FALSE(f->tabulated());
        std::mt19937_64 rng(m);
        const std::uint64_t mask = m == 32 ? 0xffffffffu : ((std::uint64_t{1} << m) - 1);
        for (int t = 0; t < 200; ++t) {
            const auto a = static_cast<FieldValue>(rng() & mask), b = static_cast<FieldValue>(rng() & mask);
            CHECK(f->mul(a, b) == oracle::gf_mul(a, b, m, f->modulus()));
        }
        const FieldValue x = f->exp(123456789);
        REQUIRE(f->log(x));
        CHECK(*f->log(x) == 123456789 % f->group_order());
    }
}

TEST_CASE("trace values") {
    auto f4 = Field::build(4);
    CHECK(f4->modulus() == 0x13);
    CHECK(f4->trace(1) == 0);
    FieldValue alpha = 2, t = 0, c = alpha;
    for (int i = 0; i < 4; ++i) {
        t ^= c;
        c = static_cast<FieldValue>(oracle::gf_mul(c, c, 4, 0x13));
    }
    CHECK(t <= 1);
    CHECK(f4->trace(alpha) == t);
    CHECK(f4->trace(alpha) == 0);
    CHECK(Field::build(3)->trace(1) == 1);
}

TEST_CASE("every nonzero element has order dividing the group order") {
    for (unsigned m = 2; m <= 16; ++m) {
        auto f = Field::build(m);
        const std::uint64_t q = f->group_order();
        for (std::uint64_t e = 0; e < q; e += (m > 12 ? 97 : 1)) CHECK(f->pow(f->exp(e), q) == 1);
    }
}

TEST_CASE("trace is linear and balanced") {
    for (unsigned m = 2; m <= 8; ++m) {
        auto f = Field::build(m);
        const FieldValue size = FieldValue{1} << m;
        for (FieldValue a = 0; a < size; ++a)
            for (FieldValue b = 0; b < size; ++b) REQUIRE(f->trace(a ^ b) == (f->trace(a) ^ f->trace(b)));
    }
    for (unsigned m = 2; m <= 16; ++m) {
        auto f = Field::build(m);
        std::uint64_t zeros = 0;
        for (FieldValue a = 0; a < (FieldValue{1} << m); ++a) zeros += f->trace(a) == 0;
        CHECK(zeros == (std::uint64_t{1} << (m - 1)));
    }
}

TEST_CASE("roots of unity have the requested order") {
    for (unsigned m = 2; m <= 16; ++m) {
        auto f = Field::build(m);
        const std::uint64_t q = f->group_order();
        for (std::uint64_t n = 1; n <= q; ++n) {
            if (q % n) continue;
            CHECK(nth_root_of_unity(f, n).order() == n);
        }
    }
}

TEST_CASE("alternate primitive moduli") {
    auto polys = primitive_polynomials(8, 3);
    REQUIRE(polys.size() == 3);
    CHECK(polys[0] == builtin_primitive_modulus(8));
    auto f = Field::with_modulus(8, polys[1]);
    CHECK(f->modulus() == polys[1]);
    CHECK_THROWS_AS(Field::with_modulus(8, 0x11b), std::invalid_argument);
}
