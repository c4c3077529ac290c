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

#include "optbch/code_analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>
#include <unordered_map>

#include "optbch/bounds.hpp"

namespace optbch {

WeightDistribution::WeightDistribution(std::uint64_t n,
                                       std::initializer_list<std::pair<std::uint64_t, long long>> terms)
    : n_(n) {
    for (const auto& [w, c] : terms) add(w, BigInt(c));
}

BigInt WeightDistribution::count(std::uint64_t w) const {
    const auto it = counts_.find(w);
    return it == counts_.end() ? BigInt(0) : it->second;
}

void WeightDistribution::add(std::uint64_t w, const BigInt& c) {
    if (w > n_) throw std::out_of_range("weight " + std::to_string(w) + " exceeds length " + std::to_string(n_));
    if (c == 0) return;
    auto& slot = counts_[w];
    slot += c;
    if (slot == 0) counts_.erase(w);
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& [w, c] : counts_) t += c;
    return t;
}

std::optional<std::uint64_t> WeightDistribution::min_nonzero_weight() const {
    for (const auto& [w, c] : counts_) {
        if (w > 0) return w;
    }
    return std::nullopt;
}

bool WeightDistribution::all_even() const {
    return std::all_of(counts_.begin(), counts_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

std::uint64_t WeightDistribution::dimension() const {
    const BigInt t = total();
    if (t <= 0) throw std::logic_error("empty weight distribution");
    const auto msb = boost::multiprecision::msb(t);
    if (t != pow2(msb)) throw std::logic_error("weight distribution total is not a power of two");
    return msb;
}

std::string WeightDistribution::to_string() const {
    std::string out;
    for (const auto& [w, c] : counts_) {
        if (!out.empty()) out += '+';
        if (w == 0) {
            out += to_decimal(c);
            continue;
        }
        if (c != 1) out += to_decimal(c);
        out += w == 1 ? std::string("z") : "z^" + std::to_string(w);
    }
    return out.empty() ? "0" : out;
}

namespace {

using Histogram = std::vector<std::uint64_t>;

template <std::size_t W>
void gray_walk_fixed(const std::uint64_t* rows, std::size_t low_rows, const std::uint64_t* start, Histogram& hist) {
    std::array<std::uint64_t, W> cur{};
    for (std::size_t j = 0; j < W; ++j) cur[j] = start[j];
    auto weigh = [&] {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < W; ++j) w += static_cast<std::uint64_t>(std::popcount(cur[j]));
        ++hist[w];
    };
    weigh();
    const std::uint64_t steps = std::uint64_t{1} << low_rows;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const std::uint64_t* row = rows + static_cast<std::size_t>(std::countr_zero(i)) * W;
        for (std::size_t j = 0; j < W; ++j) cur[j] ^= row[j];
        weigh();
    }
}

void gray_walk_dynamic(const std::uint64_t* rows, std::size_t words, std::size_t low_rows, const std::uint64_t* start,
                       Histogram& hist) {
    std::vector<std::uint64_t> cur(start, start + words);
    auto weigh = [&] {
        std::uint64_t w = 0;
        for (auto x : cur) w += static_cast<std::uint64_t>(std::popcount(x));
        ++hist[w];
    };
    weigh();
    const std::uint64_t steps = std::uint64_t{1} << low_rows;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const std::uint64_t* row = rows + static_cast<std::size_t>(std::countr_zero(i)) * words;
        for (std::size_t j = 0; j < words; ++j) cur[j] ^= row[j];
        weigh();
    }
}

void gray_walk(const std::uint64_t* rows, std::size_t words, std::size_t low_rows, const std::uint64_t* start,
               Histogram& hist) {
    switch (words) {
        case 1: return gray_walk_fixed<1>(rows, low_rows, start, hist);
        case 2: return gray_walk_fixed<2>(rows, low_rows, start, hist);
        case 3: return gray_walk_fixed<3>(rows, low_rows, start, hist);
        case 4: return gray_walk_fixed<4>(rows, low_rows, start, hist);
        case 5: return gray_walk_fixed<5>(rows, low_rows, start, hist);
        case 6: return gray_walk_fixed<6>(rows, low_rows, start, hist);
        case 7: return gray_walk_fixed<7>(rows, low_rows, start, hist);
        case 8: return gray_walk_fixed<8>(rows, low_rows, start, hist);
        default: return gray_walk_dynamic(rows, words, low_rows, start, hist);
    }
}

}  // namespace

WeightDistribution enumerate_span(std::size_t n, std::span<const BitVec> basis, const EnumerationOptions& opts) {
    const std::size_t k = basis.size();
    if (k > opts.max_dim) {
        throw CapExceeded("dimension " + std::to_string(k) + " exceeds the enumeration cap " +
                          std::to_string(opts.max_dim));
    }
    if (k >= 63) throw CapExceeded("dimension too large to enumerate");
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(std::max<std::size_t>(k, 1) * words, 0);
    for (std::size_t r = 0; r < k; ++r) {
        if (basis[r].size() != n) throw std::invalid_argument("basis row length differs from n");
        std::copy(basis[r].words().begin(), basis[r].words().end(), rows.begin() + static_cast<std::ptrdiff_t>(r * words));
    }

    // The top `high` rows are fixed per chunk; each chunk walks the rest.
    const unsigned workers = std::max(1u, opts.workers);
    std::size_t high = 0;
    while ((std::size_t{1} << high) < workers && high < k) ++high;
    const std::size_t low = k - high;
    const std::size_t chunks = std::size_t{1} << high;
    std::vector<Histogram> hists(chunks, Histogram(n + 1, 0));

    auto run_chunk = [&](std::size_t c) {
        std::vector<std::uint64_t> start(words, 0);
        for (std::size_t b = 0; b < high; ++b) {
            if ((c >> b) & 1u) {
                const std::uint64_t* row = rows.data() + (low + b) * words;
                for (std::size_t j = 0; j < words; ++j) start[j] ^= row[j];
            }
        }
        gray_walk(rows.data(), words, low, start.data(), hists[c]);
    };

    const std::size_t threads = std::min<std::size_t>(workers, chunks);
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t c = t; c < chunks; c += threads) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    WeightDistribution wd(n);
    for (std::size_t w = 0; w <= n; ++w) {
        BigInt sum = 0;
        for (const auto& h : hists) sum += h[w];
        wd.add(w, sum);
    }
    return wd;
}

WeightDistribution weight_distribution_exhaustive(const CyclicCode& code, const EnumerationOptions& opts) {
    if (code.dimension() > opts.max_dim) {
        throw CapExceeded("dimension " + std::to_string(code.dimension()) + " exceeds the enumeration cap " +
                          std::to_string(opts.max_dim));
    }
    const auto rows = code.generator_rows();
    return enumerate_span(code.length(), rows, opts);
}

BigInt krawtchouk(std::uint64_t n, std::uint64_t j, std::uint64_t i) {
    BigInt sum = 0;
    for (std::uint64_t h = 0; h <= j; ++h) {
        BigInt term = binomial(i, h) * binomial(n - i, j - h);
        if (h % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd, std::uint64_t k) {
    const std::uint64_t n = wd.length();
    if (wd.total() != pow2(k)) throw std::invalid_argument("weight distribution does not sum to 2^k");
    std::vector<BigInt> acc(n + 1, 0);
    std::vector<BigInt> kr(n + 1);
    for (const auto& [i, a] : wd.terms()) {
        kr[0] = 1;
        if (n >= 1) kr[1] = BigInt(n) - 2 * BigInt(i);
        for (std::uint64_t j = 1; j < n; ++j) {
            BigInt num = (BigInt(n) - 2 * BigInt(i)) * kr[j] - BigInt(n - j + 1) * kr[j - 1];
            BigInt q, r;
            boost::multiprecision::divide_qr(num, BigInt(j + 1), q, r);
            if (r != 0) throw std::logic_error("Krawtchouk recurrence lost integrality");
            kr[j + 1] = std::move(q);
        }
        for (std::uint64_t j = 0; j <= n; ++j) acc[j] += a * kr[j];
    }
    WeightDistribution out(n);
    const BigInt scale = pow2(k);
    for (std::uint64_t j = 0; j <= n; ++j) {
        BigInt q, r;
        boost::multiprecision::divide_qr(acc[j], scale, q, r);
        if (r != 0 || q < 0) throw std::logic_error("MacWilliams transform produced a non-integral count");
        out.add(j, q);
    }
    return out;
}

std::string to_string(BoundSource s) {
    switch (s) {
        case BoundSource::BchBound: return "bch_bound";
        case BoundSource::SpherePacking: return "sphere_packing";
        case BoundSource::Enumeration: return "enumeration";
        case BoundSource::MacWilliams: return "macwilliams";
        case BoundSource::SupportSearch: return "support_search";
        case BoundSource::Extension: return "extension";
    }
    return "unknown";
}

namespace {

std::vector<BitVec> syndromes(const CyclicCode& code) {
    const std::uint64_t n = code.length();
    const std::uint64_t r = code.redundancy();
    const BinaryPolynomial& g = code.generator();
    std::vector<BitVec> out;
    out.reserve(n);
    BinaryPolynomial cur = BinaryPolynomial::one();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (static_cast<std::uint64_t>(cur.degree() + 1) > r) cur = cur % g;
        out.push_back(cur.to_bits(r));
        cur = cur.shifted(1);
        if (cur.degree() == static_cast<long>(r)) cur += g;
    }
    return out;
}

}  // namespace

bool has_codeword_of_weight(const CyclicCode& code, std::uint64_t w, std::uint64_t budget) {
    const std::uint64_t n = code.length();
    if (w == 0 || w > 4) throw std::invalid_argument("support search handles weights 1..4");
    if (w > n) return false;
    if (binomial(n - 1, w - 1) > budget) {
        throw CapExceeded("support search for weight " + std::to_string(w) + " exceeds the budget");
    }
    if (n > kExplicitDefiningSetLimit) throw CapExceeded("support search not supported at this length");
    if (code.redundancy() == 0) return w == 1;
    if (w == 1) return false;

    const auto syn = syndromes(code);
    std::unordered_multimap<BitVec, std::uint64_t, BitVecHash> index;
    index.reserve(n);
    for (std::uint64_t i = 1; i < n; ++i) index.emplace(syn[i], i);

    // A codeword with support {0, i_2, ..., i_w} exists iff the syndromes sum to 0.
    auto find_other = [&](const BitVec& target, std::initializer_list<std::uint64_t> excluded) {
        auto [lo, hi] = index.equal_range(target);
        for (auto it = lo; it != hi; ++it) {
            if (std::find(excluded.begin(), excluded.end(), it->second) == excluded.end()) return true;
        }
        return false;
    };
    if (w == 2) return find_other(syn[0], {});
    if (w == 3) {
        for (std::uint64_t i = 1; i < n; ++i) {
            if (find_other(syn[0] ^ syn[i], {i})) return true;
        }
        return false;
    }
    for (std::uint64_t i = 1; i < n; ++i) {
        const BitVec partial = syn[0] ^ syn[i];
        for (std::uint64_t j = i + 1; j < n; ++j) {
            if (find_other(partial ^ syn[j], {i, j})) return true;
        }
    }
    return false;
}

DistanceResult min_distance(const CyclicCode& code, const DistanceOptions& opts) {
    const std::uint64_t n = code.length();
    const std::uint64_t k = code.dimension();
    DistanceResult res;
    if (k == 0) {
        res.lower = {n + 1, BoundSource::Enumeration};
        res.upper = {n + 1, BoundSource::Enumeration};
        return res;
    }
    res.lower = {code.bch_bound(), BoundSource::BchBound};
    res.upper = {sphere_packing_upper_bound(n, k).value, BoundSource::SpherePacking};
    if (res.lower.value > res.upper.value) throw std::logic_error("BCH bound exceeds the sphere-packing bound");
    if (res.exact()) return res;

    const std::uint64_t dual_k = n - k;
    const EnumerationOptions eo{opts.max_dim, opts.workers};
    if (std::min(k, dual_k) <= opts.max_dim) {
        if (k <= dual_k) {
            auto wd = weight_distribution_exhaustive(code, eo);
            const auto d = *wd.min_nonzero_weight();
            res.lower = {d, BoundSource::Enumeration};
            res.upper = {d, BoundSource::Enumeration};
            res.distribution = std::move(wd);
        } else {
            auto dual_wd = weight_distribution_exhaustive(dual_code(code), eo);
            auto wd = macwilliams_transform(dual_wd, dual_k);
            const auto d = *wd.min_nonzero_weight();
            res.lower = {d, BoundSource::MacWilliams};
            res.upper = {d, BoundSource::MacWilliams};
            res.distribution = std::move(wd);
            res.dual_distribution = std::move(dual_wd);
        }
        return res;
    }

    while (res.lower.value <= 4 && !res.exact()) {
        const std::uint64_t w = res.lower.value;
        bool found = false;
        try {
            found = has_codeword_of_weight(code, w, opts.budget);
        } catch (const CapExceeded&) {
            break;
        }
        if (found) {
            res.upper = {w, BoundSource::SupportSearch};
            break;
        }
        res.lower = {w + 1, BoundSource::SupportSearch};
    }
    return res;
}

ExtendedCode extend_code(std::uint64_t n, std::uint64_t k, const DistanceResult& d) {
    auto bump = [](DistanceBound b) {
        if (b.value % 2 == 1) {
            ++b.value;
            b.source = BoundSource::Extension;
        }
        return b;
    };
    ExtendedCode ext;
    ext.n = n + 1;
    ext.k = k;
    ext.distance.lower = bump(d.lower);
    ext.distance.upper = bump(d.upper);
    if (d.distribution) ext.distance.distribution = extended_distribution(*d.distribution);
    if (d.dual_distribution && d.dual_distribution->all_even()) {
        ext.distance.dual_distribution = extended_dual(*d.dual_distribution);
    }
    return ext;
}

ExtendedCode extend_code(const CyclicCode& code, const DistanceResult& d) {
    return extend_code(code.length(), code.dimension(), d);
}

WeightDistribution extended_distribution(const WeightDistribution& wd) {
    WeightDistribution out(wd.length() + 1);
    for (const auto& [w, c] : wd.terms()) out.add(w % 2 ? w + 1 : w, c);
    return out;
}

WeightDistribution extended_dual(const WeightDistribution& dual_wd) {
    if (!dual_wd.all_even()) throw std::invalid_argument("dual code has a codeword of odd weight");
    const std::uint64_t n = dual_wd.length();
    WeightDistribution out(n + 1);
    for (const auto& [w, c] : dual_wd.terms()) {
        out.add(w, c);
        out.add(n + 1 - w, c);
    }
    return out;
}

BigInt pless_fourth_moment_a3(const WeightDistribution& dual_wd, std::uint64_t n, std::uint64_t k) {
    if (dual_wd.length() != n) throw std::invalid_argument("dual distribution length differs from n");
    if (k > n || dual_wd.total() != pow2(n - k)) throw std::invalid_argument("dual distribution does not sum to 2^(n-k)");
    BigInt moment = 0;
    for (const auto& [j, b] : dual_wd.terms()) moment += BigInt(j) * j * j * b;
    moment *= 8;
    BigInt q, r;
    boost::multiprecision::divide_qr(moment, pow2(n - k), q, r);
    if (r != 0) throw std::logic_error("power moment is not divisible by 2^(n-k)");
    const BigInt numerator = BigInt(n) * n * (BigInt(n) + 3) - q;
    BigInt a3, rem;
    boost::multiprecision::divide_qr(numerator, BigInt(6), a3, rem);
    if (rem != 0 || a3 < 0) throw std::logic_error("power moment gives no valid A_3");
    return a3;
}

BitVec trace_vector(const CyclicCode& code, FieldValue a, TraceRoot root) {
    const Field& f = *code.field();
    const FieldValue gamma = root == TraceRoot::Beta ? code.beta() : f.inv(code.beta());
    BitVec v(code.length());
    FieldValue x = a;
    for (std::uint64_t i = 0; i < code.length(); ++i) {
        if (f.trace(x)) v.set(i);
        x = f.mul(x, gamma);
    }
    return v;
}

namespace {

std::size_t gf2_rank(std::vector<BitVec> rows) {
    std::size_t rank = 0;
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

// a -> (Tr(a gamma^i))_i is GF(2)-linear, so the image is the span of the
// images of the polynomial basis 1, alpha, ..., alpha^(m-1).
TraceCheck check_trace_representation(const CyclicCode& code, TraceRoot root) {
    if (code.defining_set_leaders() != std::vector<std::uint64_t>{1}) {
        throw std::invalid_argument("trace representation needs the defining set C_1");
    }
    const unsigned m = code.field()->degree();
    if (m > 32) throw CapExceeded("field too large");
    const std::uint64_t n = code.length();
    const CyclicCode dual = dual_code(code);
    std::vector<BitVec> images;
    bool in_dual = true;
    bool in_reversed = true;
    for (unsigned j = 0; j < m; ++j) {
        BitVec v = trace_vector(code, static_cast<FieldValue>(FieldValue{1} << j), root);
        BitVec rev(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (v.get(i)) rev.set((n - i) % n);
        }
        in_dual = in_dual && is_codeword(dual, v);
        in_reversed = in_reversed && is_codeword(dual, rev);
        images.push_back(std::move(v));
    }
    TraceCheck tc;
    tc.vectors = std::uint64_t{1} << m;
    const std::size_t rank = gf2_rank(std::move(images));
    tc.distinct = std::uint64_t{1} << rank;
    const bool full = rank == dual.dimension();
    tc.in_dual = in_dual ? tc.vectors : 0;
    tc.equals_dual = full && in_dual;
    tc.equals_reversed_dual = full && in_reversed;
    return tc;
}

bool trace_code_equals_dual(const CyclicCode& code, TraceRoot root) {
    return check_trace_representation(code, root).equals_dual;
}

}  // namespace optbch
