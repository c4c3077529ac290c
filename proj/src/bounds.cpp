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

#include "optbch/bounds.hpp"

#include <stdexcept>
#include <string>

#include "optbch/cyclotomy.hpp"

namespace optbch {

namespace {

std::uint64_t ceil_half(std::uint64_t s) { return (s + 1) / 2; }

}  // namespace

bool sphere_packing_admits(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    if (k > n) return false;
    if (d == 0) return true;
    return hamming_ball(n, (d - 1) / 2) <= pow2(n - k);
}

std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k) {
    if (k == 0 || k > n) throw std::invalid_argument("sphere packing needs 1 <= k <= n");
    // The ball sum grows with the radius, so scan radii and stop at the first overflow.
    const BigInt space = pow2(n - k);
    BigInt ball = 0;
    std::uint64_t radius = 0;
    for (;; ++radius) {
        ball += binomial(n, radius);
        if (ball > space || radius >= n) break;
    }
    // Radius t fits iff d <= 2t + 2; the first failing radius r caps d at 2r.
    if (ball <= space) return n;
    return std::min<std::uint64_t>(n, std::max<std::uint64_t>(1, 2 * radius));
}

SpherePackingBound sphere_packing_upper_bound(std::uint64_t n, std::uint64_t k) {
    SpherePackingBound b;
    b.plain = sphere_packing_max_d(n, k);
    b.value = b.plain;
    if (b.plain >= 2 && b.plain % 2 == 0 && !sphere_packing_admits(n - 1, k, b.plain - 1)) {
        b.value = b.plain - 1;
        b.punctured = true;
    }
    return b;
}

GriesmerResult griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    GriesmerResult r;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (i >= 64 || (std::uint64_t{1} << i) >= d) {
            r.sum += (k - i) * (d > 0 ? 1 : 0);
            break;
        }
        const std::uint64_t div = std::uint64_t{1} << i;
        r.sum += (d + div - 1) / div;
    }
    r.satisfied = n >= r.sum;
    r.meets_with_equality = n == r.sum;
    return r;
}

OptimalityCertificate certify(std::uint64_t n, std::uint64_t k, const DistanceResult& d) {
    if (k == 0 || k > n) throw std::invalid_argument("certify needs 1 <= k <= n");
    if (d.lower.value > d.upper.value) throw std::invalid_argument("distance lower bound exceeds upper bound");
    OptimalityCertificate c;
    c.n = n;
    c.k = k;
    c.d_lower = d.lower;
    c.d_upper = d.upper;
    c.sphere_packing = sphere_packing_upper_bound(n, k);
    if (d.upper.value > c.sphere_packing.value) {
        c.d_upper = {c.sphere_packing.value, BoundSource::SpherePacking};
        if (c.d_lower.value > c.d_upper.value) throw std::invalid_argument("distance exceeds the sphere-packing bound");
    }
    const std::uint64_t dl = c.d_lower.value;
    c.redundancy_space = pow2(n - k);
    c.ball_admitted = dl == 0 ? BigInt(0) : hamming_ball(n, (dl - 1) / 2);
    c.ball_next = hamming_ball(n, dl / 2);
    if (c.sphere_packing.punctured) {
        c.punctured_space = pow2(n - 1 - k);
        c.punctured_ball = hamming_ball(n - 1, (c.sphere_packing.plain - 2) / 2);
    }
    c.griesmer = griesmer_check(n, k, dl);
    c.optimal = c.d_lower.value == c.d_upper.value && c.sphere_packing.value == dl;
    return c;
}

OptimalityCertificate certify(const CyclicCode& code, const DistanceResult& d) {
    return certify(code.length(), code.dimension(), d);
}

OptimalityCertificate certify(const ExtendedCode& code) { return certify(code.n, code.k, code.distance); }

std::uint64_t threshold_s2(std::uint64_t ell, std::uint64_t lambda) {
    if (ell < 2 || lambda == 0) throw std::invalid_argument("threshold needs ell >= 2 and lambda >= 1");
    const BigInt target = BigInt(2 * ell - 1) * lambda;
    for (std::uint64_t s = 1;; ++s) {
        if (target <= pow2(ceil_half(s))) return s;
    }
}

Expansion expansion_and_s1(std::uint64_t ell, std::uint64_t lambda) {
    if (ell < 2 || lambda == 0) throw std::invalid_argument("expansion needs ell >= 2 and lambda >= 1");
    std::vector<BigInt> poly(ell + 1, 0);
    BigInt ell_fact = 1;
    for (std::uint64_t i = 2; i <= ell; ++i) ell_fact *= i;

    // ell!/i! * n (n-1) ... (n-i+1) for each i.
    for (std::uint64_t i = 0; i <= ell; ++i) {
        std::vector<BigInt> falling{1};
        for (std::uint64_t j = 0; j < i; ++j) {
            std::vector<BigInt> next(falling.size() + 1, 0);
            for (std::size_t t = 0; t < falling.size(); ++t) {
                next[t + 1] += falling[t];
                next[t] -= falling[t] * j;
            }
            falling = std::move(next);
        }
        BigInt i_fact = 1;
        for (std::uint64_t j = 2; j <= i; ++j) i_fact *= j;
        const BigInt scale = ell_fact / i_fact;
        for (std::size_t t = 0; t < falling.size(); ++t) poly[t] += scale * falling[t];
    }
    // - 2 ell! (lambda n + 1)^(ell-1).
    for (std::uint64_t t = 0; t + 1 <= ell; ++t) {
        BigInt lam_pow = 1;
        for (std::uint64_t j = 0; j < t; ++j) lam_pow *= lambda;
        poly[t] -= 2 * ell_fact * binomial(ell - 1, t) * lam_pow;
    }

    Expansion e;
    e.coeffs = std::move(poly);
    for (std::uint64_t i = 0; i < ell; ++i) {
        const BigInt mag = e.coeffs[i] < 0 ? BigInt(-e.coeffs[i]) : e.coeffs[i];
        if (mag > e.a) e.a = mag;
    }
    const BigInt lhs = 1 + BigInt(ell) * lambda * e.a;
    for (std::uint64_t s = 1;; ++s) {
        if (lhs < pow2(ceil_half(s))) {
            e.s1 = s;
            break;
        }
    }
    return e;
}

BigInt evaluate_expansion(const Expansion& e, const BigInt& n) {
    BigInt acc = 0;
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

ThresholdReport empirical_threshold(std::uint64_t ell, std::uint64_t lambda, std::uint64_t horizon) {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    if (lambda == 0 || lambda % 2 == 0) throw std::invalid_argument("lambda must be odd");
    ThresholdReport rep;
    rep.ell = ell;
    rep.lambda = lambda;
    rep.horizon = horizon;
    rep.s2 = threshold_s2(ell, lambda);
    if (horizon < rep.s2 || horizon > 62) {
        throw std::invalid_argument("horizon must lie in [s2, 62], s2 = " + std::to_string(rep.s2));
    }
    rep.expansion = expansion_and_s1(ell, lambda);
    rep.s_theorem = std::max(rep.expansion.s1, rep.s2);

    for (std::uint64_t s = 1; s <= horizon; ++s) {
        ThresholdRow row;
        row.s = s;
        const std::uint64_t full = (std::uint64_t{1} << s) - 1;
        row.applicable = full % lambda == 0;
        if (row.applicable) {
            const std::uint64_t n = full / lambda;
            row.n = n;
            row.cosets_ok = true;
            for (std::uint64_t i = 1; i + 2 <= 2 * ell - 1 && row.cosets_ok; i += 2) {
                row.cosets_ok = i < n && coset_leader(n, i) == i && coset_size(n, i) == s;
            }
            row.sphere_ok = hamming_ball(n, ell) > pow2((ell - 1) * s + 1);
        }
        rep.rows.push_back(row);
    }
    for (std::uint64_t s = horizon + 1; s-- > 1;) {
        if (!rep.rows[s - 1].pass()) break;
        rep.s_empirical = s;
    }
    return rep;
}

}  // namespace optbch
