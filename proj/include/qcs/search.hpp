#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <random>

#include "qcs/distance.hpp"

namespace qcs {

struct OffsetTuple {
    std::vector<int> a;
    std::optional<std::vector<int>> b;
};

enum class SearchMode { exhaustive, stochastic };

struct SearchOptions {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t budget = 2'000'000;  // candidate evaluations
};

struct SearchResult {
    OffsetTuple best;
    int d = 0;
    std::uint64_t evaluations = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    bool optimal = false;  // exhaustive mode saw every canonical candidate
};

/// Lexicographically smallest sorted translate of the offset multiset. Block
/// sums are invariant under common translation mod m, so every translate names
/// the same code distance.
inline std::vector<int> canonical_offset_multiset(std::vector<int> offsets, int m) {
    for (int& x : offsets) x = ((x % m) + m) % m;
    std::vector<int> best;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        std::vector<int> t(offsets.size());
        for (std::size_t j = 0; j < offsets.size(); ++j) t[j] = ((offsets[j] - offsets[i]) % m + m) % m;
        std::sort(t.begin(), t.end());
        if (best.empty() || t < best) best = std::move(t);
    }
    return best;
}

/// Input is the full p-element multiset (implicit leading 0 included); the
/// result drops that leading 0 and carries the remaining p-1 offsets.
inline OffsetTuple canonicalize_two_gen(std::span<const int> offsets_including_zero, int m) {
    std::vector<int> full =
        canonical_offset_multiset(std::vector<int>(offsets_including_zero.begin(), offsets_including_zero.end()), m);
    if (full.empty() || full.front() != 0) throw error("canonicalize: internal error");
    return OffsetTuple{std::vector<int>(full.begin() + 1, full.end()), std::nullopt};
}

namespace detail {

// Canonical form for coupled (a(t), b(t)) block pairs: translations of a and b
// anchored at a common block plus block reordering. The leading pair is (0,0).
inline std::vector<std::pair<int, int>> canonical_pair_list(std::span<const int> a, std::span<const int> b, int m) {
    std::size_t p = a.size() + 1;
    std::vector<std::pair<int, int>> pairs(p, {0, 0});
    for (std::size_t t = 1; t < p; ++t)
        pairs[t] = {((a[t - 1] % m) + m) % m, ((b[t - 1] % m) + m) % m};
    std::vector<std::pair<int, int>> best;
    for (std::size_t t0 = 0; t0 < p; ++t0) {
        std::vector<std::pair<int, int>> cand(p);
        for (std::size_t t = 0; t < p; ++t)
            cand[t] = {((pairs[t].first - pairs[t0].first) % m + m) % m,
                       ((pairs[t].second - pairs[t0].second) % m + m) % m};
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

inline OffsetTuple canonical_three_gen_tuple(std::span<const int> a, std::span<const int> b, int m) {
    auto pairs = canonical_pair_list(a, b, m);
    OffsetTuple out;
    out.b.emplace();
    for (std::size_t t = 1; t < pairs.size(); ++t) {
        out.a.push_back(pairs[t].first);
        out.b->push_back(pairs[t].second);
    }
    return out;
}

inline std::uint64_t multichoose(std::uint64_t n, std::uint64_t r) {
    // C(n + r - 1, r), saturating
    long double v = 1.0L;
    for (std::uint64_t i = 0; i < r; ++i) v = v * static_cast<long double>(n + i) / static_cast<long double>(i + 1);
    if (v > 1e18L) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v + 0.5L);
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

template <typename Eval>
SearchResult climb(int m, int tuple_len, Eval&& eval, const SearchOptions& opt,
                   const std::function<std::vector<int>(const std::vector<int>&)>& canon) {
    SearchResult res;
    res.mode = SearchMode::stochastic;
    res.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    // rng() % m rather than uniform_int_distribution: identical draws on every
    // platform, which the determinism contract needs
    int best_d = -1;
    std::vector<int> best_canon;
    std::vector<int> best_tuple;
    while (res.evaluations < opt.budget) {
        std::vector<int> t(static_cast<std::size_t>(tuple_len));
        for (int& x : t) x = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        int cur = eval(t);
        ++res.evaluations;
        bool improved = true;
        while (improved && res.evaluations < opt.budget) {
            improved = false;
            int step_best = cur;
            std::vector<int> step_tuple;
            for (std::size_t pos = 0; pos < t.size() && res.evaluations < opt.budget; ++pos) {
                int save = t[pos];
                for (int v = 0; v < m && res.evaluations < opt.budget; ++v) {
                    if (v == save) continue;
                    t[pos] = v;
                    int d = eval(t);
                    ++res.evaluations;
                    if (d > step_best) {
                        step_best = d;
                        step_tuple = t;
                    }
                }
                t[pos] = save;
            }
            if (step_best > cur) {
                cur = step_best;
                t = step_tuple;
                improved = true;
            }
        }
        std::vector<int> c = canon(t);
        if (cur > best_d || (cur == best_d && c < best_canon)) {
            best_d = cur;
            best_canon = std::move(c);
            best_tuple = t;
        }
        if (tuple_len == 0) break;
    }
    res.d = best_d;
    res.best.a = best_tuple;  // caller reshapes
    return res;
}

}  // namespace detail

/// Maximizes the two-generator formula distance over p-1 offsets. Exhaustive
/// mode scans all nondecreasing tuples (every offset multiset once) and is
/// globally optimal; ties resolve to the lexicographically smallest canonical
/// tuple. Stochastic mode is seeded single-change hill climbing with restarts.
inline SearchResult search_two_gen(const SimplexCode& c1, const SimplexCode& c2, int p, SearchOptions opt = {}) {
    if (p < 1) throw error("search_two_gen: p must be >= 1");
    DistanceVector D = pair_distance_vector(c1, c2);
    int m = D.m, k = c1.k();
    auto eval = [&](std::span<const int> t) { return two_gen_formula_distance(D, t, k); };

    if (opt.mode == SearchMode::stochastic) {
        auto canon = [&](const std::vector<int>& t) {
            std::vector<int> full(t);
            full.push_back(0);
            return canonical_offset_multiset(full, m);
        };
        SearchResult res = detail::climb(m, p - 1, [&](const std::vector<int>& t) { return eval(t); }, opt, canon);
        res.best = canonicalize_two_gen(canon(res.best.a), m);
        return res;
    }

    std::uint64_t count = detail::multichoose(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(p - 1));
    if (count > opt.budget)
        throw error("search_two_gen: exhaustive mode needs " + std::to_string(count) +
                    " evaluations, above budget " + std::to_string(opt.budget) + "; use stochastic mode");
    SearchResult res;
    res.mode = SearchMode::exhaustive;
    res.optimal = true;
    res.seed = opt.seed;
    int best_d = -1;
    std::vector<int> best_canon;
    std::vector<int> t(static_cast<std::size_t>(p - 1), 0);
    for (;;) {
        int d = eval(t);
        ++res.evaluations;
        if (d >= best_d) {
            std::vector<int> full(t);
            full.push_back(0);
            std::vector<int> c = canonical_offset_multiset(full, m);
            if (d > best_d || c < best_canon) {
                best_d = d;
                best_canon = std::move(c);
            }
        }
        int i = p - 2;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == m - 1) --i;
        if (i < 0) break;
        int v = ++t[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < t.size(); ++j) t[j] = v;
    }
    res.d = best_d;
    res.best = OffsetTuple{std::vector<int>(best_canon.begin() + 1, best_canon.end()), std::nullopt};
    return res;
}

/// Maximizes the three-generator formula distance over coupled (a, b) tuples.
/// Exhaustive mode scans raw tuples in [0,m)^{2(p-1)}; precomputes the distance
/// vectors and table once.
inline SearchResult search_three_gen(const SimplexCode& c1, const SimplexCode& c2, const SimplexCode& c3, int p,
                                     SearchOptions opt = {}) {
    if (p < 1) throw error("search_three_gen: p must be >= 1");
    DistanceVector D12 = pair_distance_vector(c1, c2);
    DistanceVector D13 = pair_distance_vector(c1, c3);
    DistanceVector D23 = pair_distance_vector(c2, c3);
    DistanceTable D123 = triple_distance_table(c1, c2, c3);
    int m = D12.m, k = c1.k();
    std::size_t half = static_cast<std::size_t>(p - 1);
    auto eval = [&](const std::vector<int>& t) {
        std::span<const int> a(t.data(), half), b(t.data() + half, half);
        return three_gen_formula_distance(D12, D13, D23, D123, a, b, k);
    };
    auto canon_pairs = [&](const std::vector<int>& t) {
        std::span<const int> a(t.data(), half), b(t.data() + half, half);
        auto pairs = detail::canonical_pair_list(a, b, m);
        std::vector<int> flat;
        for (auto [x, y] : pairs) {
            flat.push_back(x);
            flat.push_back(y);
        }
        return flat;
    };

    if (opt.mode == SearchMode::stochastic) {
        SearchResult res = detail::climb(m, 2 * (p - 1), eval, opt, canon_pairs);
        std::vector<int> t = res.best.a;
        res.best = detail::canonical_three_gen_tuple(std::span<const int>(t.data(), half),
                                                     std::span<const int>(t.data() + half, half), m);
        return res;
    }

    // over budget the scan stops early and the result is flagged non-optimal
    std::uint64_t count = detail::ipow(static_cast<std::uint64_t>(m), 2 * static_cast<unsigned>(p - 1));
    SearchResult res;
    res.mode = SearchMode::exhaustive;
    res.optimal = count <= opt.budget;
    res.seed = opt.seed;
    int best_d = -1;
    std::vector<int> best_canon, best_tuple;
    std::vector<int> t(2 * half, 0);
    for (;;) {
        int d = eval(t);
        ++res.evaluations;
        if (d >= best_d) {
            std::vector<int> c = canon_pairs(t);
            if (d > best_d || c < best_canon) {
                best_d = d;
                best_canon = std::move(c);
                best_tuple = t;
            }
        }
        if (res.evaluations >= opt.budget && !res.optimal) break;
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] == m - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < t.size(); ++j) t[j] = 0;
    }
    res.d = best_d;
    res.best = detail::canonical_three_gen_tuple(std::span<const int>(best_tuple.data(), half),
                                                 std::span<const int>(best_tuple.data() + half, half), m);
    return res;
}

}  // namespace qcs
