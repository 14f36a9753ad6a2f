#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qcs/simplex.hpp"

namespace qcs {

/// One stack of circulant blocks: block j is the circulant of x^{shifts[j]} g,
/// of which only the first base.k rows enter the generator matrix (the circulant
/// of a simplex generator has rank k).
struct CirculantRowGroup {
    SimplexCode base;
    std::vector<int> shifts;  // size p, shifts[0] == 0
};

/// An explicit generator row that is not a circulant row (e.g. all-ones blocks).
/// Always stored without block parity bits, length m*p.
struct RawRow {
    BitVec bits;
};

/// Generator-matrix description of a quasi-cyclic code: g circulant row groups
/// over a common block length m, optional raw rows, optional per-block parity
/// position. Codewords are block-major, x^0 first within a block, parity bit
/// (when present) last within its block.
struct QcCodeSpec {
    int m = 0;
    int p = 0;
    std::vector<CirculantRowGroup> groups;
    std::vector<RawRow> raw_rows;
    bool block_parity = false;

    int block_len() const { return m + (block_parity ? 1 : 0); }
    int length() const { return block_len() * p; }
    int message_length() const {
        int k = 0;
        for (const auto& g : groups) k += g.base.k();
        return k + static_cast<int>(raw_rows.size());
    }

    void validate() const {
        if (m < 1 || p < 1) throw error("spec: m and p must be positive");
        for (const auto& g : groups) {
            if (g.base.m() != m) throw error("spec: group modulus mismatch (base.m != m)");
            if (static_cast<int>(g.shifts.size()) != p) throw error("spec: shifts length != p");
            if (g.shifts[0] != 0) throw error("spec: shifts[0] must be 0");
            for (int s : g.shifts)
                if (s < 0 || s >= m) throw error("spec: shift out of range [0, m)");
        }
        for (const auto& r : raw_rows)
            if (static_cast<int>(r.bits.size()) != m * p) throw error("spec: raw row length != m*p");
        if (groups.empty() && raw_rows.empty()) throw error("empty code");
    }
};

namespace detail {

inline std::vector<int> normalized_shifts(int m, std::span<const int> offsets) {
    std::vector<int> shifts{0};
    for (int a : offsets) shifts.push_back(static_cast<int>(((a % m) + m) % m));
    return shifts;
}

}  // namespace detail

/// Single circulant group shifted per block by the p-1 offsets.
inline QcCodeSpec build_one_gen(const SimplexCode& c, std::span<const int> offsets) {
    QcCodeSpec spec;
    spec.m = c.m();
    spec.p = static_cast<int>(offsets.size()) + 1;
    spec.groups.push_back({c, detail::normalized_shifts(spec.m, offsets)});
    spec.validate();
    return spec;
}

/// First group repeats c1 unshifted across all blocks; second group carries the
/// per-block shift offsets (0, a(1), ..., a(p-1)).
inline QcCodeSpec build_two_gen(const SimplexCode& c1, const SimplexCode& c2, std::span<const int> offsets) {
    if (c1.m() != c2.m()) throw error("build_two_gen: mismatched m");
    QcCodeSpec spec;
    spec.m = c1.m();
    spec.p = static_cast<int>(offsets.size()) + 1;
    spec.groups.push_back({c1, std::vector<int>(static_cast<std::size_t>(spec.p), 0)});
    spec.groups.push_back({c2, detail::normalized_shifts(spec.m, offsets)});
    spec.validate();
    return spec;
}

inline QcCodeSpec build_three_gen(const SimplexCode& c1, const SimplexCode& c2, const SimplexCode& c3,
                                  std::span<const int> a, std::span<const int> b) {
    if (c1.m() != c2.m() || c1.m() != c3.m()) throw error("build_three_gen: mismatched m");
    if (a.size() != b.size()) throw error("build_three_gen: offset tuples differ in length");
    QcCodeSpec spec;
    spec.m = c1.m();
    spec.p = static_cast<int>(a.size()) + 1;
    spec.groups.push_back({c1, std::vector<int>(static_cast<std::size_t>(spec.p), 0)});
    spec.groups.push_back({c2, detail::normalized_shifts(spec.m, a)});
    spec.groups.push_back({c3, detail::normalized_shifts(spec.m, b)});
    spec.validate();
    return spec;
}

/// Appends one raw row per pattern; pattern entry j = true fills block j with ones.
inline QcCodeSpec extend_with_unit_rows(QcCodeSpec spec, const std::vector<std::vector<bool>>& patterns) {
    for (const auto& pat : patterns) {
        if (static_cast<int>(pat.size()) != spec.p) throw error("extend_with_unit_rows: pattern length != p");
        RawRow row{BitVec(static_cast<std::size_t>(spec.m) * spec.p)};
        for (int j = 0; j < spec.p; ++j)
            if (pat[static_cast<std::size_t>(j)])
                for (int e = 0; e < spec.m; ++e) row.bits.set_bit(static_cast<std::size_t>(j * spec.m + e));
        spec.raw_rows.push_back(std::move(row));
    }
    return spec;
}

/// Each length-m block gains one appended overall-parity position; by linearity
/// every codeword block then has even weight.
inline QcCodeSpec extend_with_block_parity(QcCodeSpec spec) {
    if (spec.block_parity) throw error("extend_with_block_parity: already extended");
    spec.block_parity = true;
    return spec;
}

/// Message layout: for each group in order, k bits are the coefficients of u(x)
/// (ascending exponent); then one bit per raw row.
inline BitVec encode(const QcCodeSpec& spec, const BitVec& message) {
    if (static_cast<int>(message.size()) != spec.message_length())
        throw error("encode: message length must be " + std::to_string(spec.message_length()));
    std::vector<BitVec> blocks(static_cast<std::size_t>(spec.p), BitVec(static_cast<std::size_t>(spec.m)));
    std::size_t off = 0;
    for (const auto& g : spec.groups) {
        CyclicWord ug(spec.m);  // u(x) g(x) mod x^m - 1
        CyclicWord base = g.base.generator_word();
        for (int r = 0; r < g.base.k(); ++r)
            if (message.bit(off + static_cast<std::size_t>(r))) ug ^= shift_mul(base, r);
        off += static_cast<std::size_t>(g.base.k());
        for (int j = 0; j < spec.p; ++j)
            blocks[static_cast<std::size_t>(j)] ^= shift_mul(ug, g.shifts[static_cast<std::size_t>(j)]).bits();
    }
    for (const auto& row : spec.raw_rows)
        if (message.bit(off++))
            for (int j = 0; j < spec.p; ++j)
                for (int e = 0; e < spec.m; ++e)
                    if (row.bits.bit(static_cast<std::size_t>(j * spec.m + e)))
                        blocks[static_cast<std::size_t>(j)].flip_bit(static_cast<std::size_t>(e));
    BitVec out(static_cast<std::size_t>(spec.length()));
    int bl = spec.block_len();
    for (int j = 0; j < spec.p; ++j) {
        const BitVec& blk = blocks[static_cast<std::size_t>(j)];
        for (int e = 0; e < spec.m; ++e)
            if (blk.bit(static_cast<std::size_t>(e))) out.set_bit(static_cast<std::size_t>(j * bl + e));
        if (spec.block_parity && (blk.weight() & 1)) out.set_bit(static_cast<std::size_t>(j * bl + spec.m));
    }
    return out;
}

/// K rows, each the encoding of a unit message; row order matches the message layout.
inline std::vector<BitVec> generator_matrix(const QcCodeSpec& spec) {
    int K = spec.message_length();
    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        BitVec msg(static_cast<std::size_t>(K));
        msg.set_bit(static_cast<std::size_t>(i));
        rows.push_back(encode(spec, msg));
    }
    return rows;
}

/// Indices of a maximal linearly independent subset of rows (first-wins order).
inline std::vector<std::size_t> independent_rows(const std::vector<BitVec>& rows) {
    std::vector<std::size_t> keep;
    std::vector<std::pair<std::size_t, BitVec>> basis;  // (pivot bit, reduced row)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BitVec cur = rows[i];
        for (;;) {
            std::size_t h = cur.highest_set_bit();
            if (h == BitVec::npos) break;
            auto it = std::find_if(basis.begin(), basis.end(), [&](const auto& b) { return b.first == h; });
            if (it == basis.end()) {
                basis.emplace_back(h, cur);
                keep.push_back(i);
                break;
            }
            cur ^= it->second;
        }
    }
    return keep;
}

inline int gf2_rank(const std::vector<BitVec>& rows) {
    return static_cast<int>(independent_rows(rows).size());
}

/// Rank of the generator matrix over GF(2); equals the intended dimension for
/// all well-formed constructions, smaller when rows are dependent.
inline int code_dimension(const QcCodeSpec& spec) { return gf2_rank(generator_matrix(spec)); }

}  // namespace qcs
