#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <thread>
#include <vector>

#include "qcs/qcmodel.hpp"

namespace qcs {

/// d[i] = wt(g_a + x^i g_b), indices mod m.
struct DistanceVector {
    int m = 0;
    std::vector<int> d;

    int at(long long i) const { return d[static_cast<std::size_t>(((i % m) + m) % m)]; }
};

/// entry(i, j) = wt(g_1 + x^i g_2 + x^j g_3), both indices mod m.
struct DistanceTable {
    int m = 0;
    std::vector<int> d;  // row-major m*m

    int at(long long i, long long j) const {
        auto r = static_cast<std::size_t>(((i % m) + m) % m);
        auto c = static_cast<std::size_t>(((j % m) + m) % m);
        return d[r * static_cast<std::size_t>(m) + c];
    }
};

struct CodeReport {
    int n = 0;
    int k = 0;
    int d_min = 0;
    std::uint64_t codeword_count = 0;
    std::map<int, std::uint64_t> weight_distribution;
};

inline DistanceVector pair_distance_vector(const SimplexCode& ca, const SimplexCode& cb) {
    if (ca.m() != cb.m()) throw error("pair_distance_vector: mismatched m");
    int m = ca.m();
    DistanceVector out{m, {}};
    out.d.reserve(static_cast<std::size_t>(m));
    CyclicWord ga = ca.generator_word();
    CyclicWord gb = cb.generator_word();
    for (int i = 0; i < m; ++i) out.d.push_back(weight(ga ^ shift_mul(gb, i)));
    return out;
}

inline DistanceTable triple_distance_table(const SimplexCode& c1, const SimplexCode& c2, const SimplexCode& c3) {
    if (c1.m() != c2.m() || c1.m() != c3.m()) throw error("triple_distance_table: mismatched m");
    int m = c1.m();
    CyclicWord g1 = c1.generator_word();
    std::vector<CyclicWord> r2, r3;
    r2.reserve(static_cast<std::size_t>(m));
    r3.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        r2.push_back(shift_mul(c2.generator_word(), i));
        r3.push_back(shift_mul(c3.generator_word(), i));
    }
    DistanceTable out{m, {}};
    out.d.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        CyclicWord gi = g1 ^ r2[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) out.d.push_back(weight(gi ^ r3[static_cast<std::size_t>(j)]));
    }
    return out;
}

/// min( p*2^{k-1}, min_j sum_t D[j + a(t)] ) with a(0) = 0. The cap term covers
/// codewords with only one generator's message nonzero, which the block sums
/// cannot see.
inline int two_gen_formula_distance(const DistanceVector& D, std::span<const int> offsets, int k) {
    int m = D.m;
    int p = static_cast<int>(offsets.size()) + 1;
    int best = p * (1 << (k - 1));
    for (int j = 0; j < m; ++j) {
        int s = D.at(j);
        for (int a : offsets) s += D.at(j + a);
        best = std::min(best, s);
    }
    return best;
}

/// Minimum of the single-generator cap and the four block-sum minimizations over
/// D12, D13, D23 (index differences b - a) and the table D123.
inline int three_gen_formula_distance(const DistanceVector& D12, const DistanceVector& D13,
                                      const DistanceVector& D23, const DistanceTable& D123,
                                      std::span<const int> a, std::span<const int> b, int k) {
    if (a.size() != b.size()) throw error("three_gen_formula_distance: offset tuples differ in length");
    int m = D12.m;
    int p = static_cast<int>(a.size()) + 1;
    int best = p * (1 << (k - 1));
    for (int j = 0; j < m; ++j) {
        int s12 = D12.at(j), s13 = D13.at(j), s23 = D23.at(j);
        for (std::size_t t = 0; t < a.size(); ++t) {
            s12 += D12.at(j + a[t]);
            s13 += D13.at(j + b[t]);
            s23 += D23.at(j + b[t] - a[t]);
        }
        best = std::min({best, s12, s13, s23});
    }
    // table scan: normalized offsets + conditional subtraction keep the inner
    // loop free of division
    std::vector<int> an, bn;
    for (std::size_t t = 0; t < a.size(); ++t) {
        an.push_back(((a[t] % m) + m) % m);
        bn.push_back(((b[t] % m) + m) % m);
    }
    std::vector<const int*> rows(a.size());
    const int* tab = D123.d.data();
    for (int i = 0; i < m; ++i) {
        const int* base = tab + static_cast<std::size_t>(i) * m;
        for (std::size_t t = 0; t < an.size(); ++t) {
            int r = i + an[t];
            if (r >= m) r -= m;
            rows[t] = tab + static_cast<std::size_t>(r) * m;
        }
        for (int j = 0; j < m; ++j) {
            int s = base[j];
            for (std::size_t t = 0; t < bn.size(); ++t) {
                int c = j + bn[t];
                if (c >= m) c -= m;
                s += rows[t][c];
            }
            if (s < best) best = s;
        }
    }
    return best;
}

struct VerifyOptions {
    int dimension_cap = 26;
    int threads = 0;  // 0 = hardware concurrency
};

namespace detail {

// Weight histogram of all 2^K messages over the given (independent) rows,
// enumerated in reflected Gray order: message x and x-1 differ in row ctz(x).
inline void gray_histogram(const std::vector<BitVec>& rows, std::uint64_t lo, std::uint64_t hi,
                           std::vector<std::uint64_t>& hist) {
    BitVec acc(rows.empty() ? 0 : rows[0].size());
    std::uint64_t start_gray = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if ((start_gray >> r) & 1u) acc ^= rows[r];
    for (std::uint64_t x = lo; x < hi; ++x) {
        acc ^= rows[static_cast<std::size_t>(std::countr_zero(x))];
        ++hist[static_cast<std::size_t>(acc.weight())];
    }
}

}  // namespace detail

/// Full weight distribution by enumerating all 2^K - 1 nonzero messages over an
/// independent row basis. Deterministic: the merged histogram is identical for
/// any thread count.
inline CodeReport exhaustive_min_distance(const QcCodeSpec& spec, VerifyOptions opt = {}) {
    spec.validate();
    std::vector<BitVec> all_rows = generator_matrix(spec);
    std::vector<std::size_t> keep = independent_rows(all_rows);
    if (keep.empty()) throw error("empty code");
    std::vector<BitVec> rows;
    rows.reserve(keep.size());
    for (std::size_t i : keep) rows.push_back(all_rows[i]);
    int K = static_cast<int>(rows.size());
    if (K > opt.dimension_cap)
        throw error("exhaustive_min_distance: dimension " + std::to_string(K) + " exceeds cap " +
                    std::to_string(opt.dimension_cap));
    if (K > 62) throw error("exhaustive_min_distance: dimension " + std::to_string(K) + " not enumerable");
    int n = spec.length();
    std::uint64_t total = std::uint64_t{1} << K;

    int nthreads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    std::uint64_t span = total - 1;
    if (static_cast<std::uint64_t>(nthreads) > span) nthreads = static_cast<int>(span);

    std::vector<std::vector<std::uint64_t>> hists(static_cast<std::size_t>(nthreads),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<std::thread> workers;
    std::uint64_t chunk = span / static_cast<std::uint64_t>(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        std::uint64_t lo = 1 + chunk * static_cast<std::uint64_t>(t);
        std::uint64_t hi = (t == nthreads - 1) ? total : lo + chunk;
        workers.emplace_back(detail::gray_histogram, std::cref(rows), lo, hi, std::ref(hists[static_cast<std::size_t>(t)]));
    }
    for (auto& w : workers) w.join();

    CodeReport report;
    report.n = n;
    report.k = K;
    report.codeword_count = total;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& h : hists)
        for (std::size_t w = 0; w <= static_cast<std::size_t>(n); ++w) hist[w] += h[w];
    hist[0] += 1;  // the zero codeword
    report.d_min = 0;
    for (int w = 0; w <= n; ++w)
        if (hist[static_cast<std::size_t>(w)]) {
            report.weight_distribution[w] = hist[static_cast<std::size_t>(w)];
            if (w > 0 && report.d_min == 0) report.d_min = w;
        }
    return report;
}

struct TwoWeightResult {
    bool is_two_weight = false;
    int w_low = 0;
    int w_high = 0;
};

/// True iff exactly two distinct nonzero weights occur.
inline TwoWeightResult two_weight_check(const CodeReport& report) {
    std::vector<int> nz;
    for (const auto& [w, c] : report.weight_distribution)
        if (w > 0 && c > 0) nz.push_back(w);
    if (nz.size() == 2) return {true, nz[0], nz[1]};
    return {false, 0, 0};
}

}  // namespace qcs
