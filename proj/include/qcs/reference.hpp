#pragma once

#include <cstddef>

#include "qcs/qcmodel.hpp"

// Bundled reference constructions and their verified parameters. Single source
// of truth for the reproduce subcommand and the acceptance suite.

namespace qcs::reference {

inline SimplexCode make_simplex(const char* octal, int k) {
    return SimplexCode::from_generator(parse_octal(octal, (1 << k) - 1), k);
}

/// One generator pair per block length, in the argument order under which the
/// reported distance vector equals pair_distance_vector(a, b). Note the m = 7
/// pair is (x^4+x^2+x+1, x^4+x^3+x^2+1): the reported m = 7 data corresponds to
/// the swapped order relative to the other datasets.
struct PairDataset {
    int m;
    int k;
    const char* gen_a;
    const char* gen_b;
    std::vector<int> d_full;      // complete distance vector for (gen_a, gen_b)
    std::vector<int> d_reported;  // entries as reported; lossy for m = 31, 63
    int reported_aligned;         // reported entries that align in order with d_full
};

inline const std::vector<PairDataset>& pair_datasets() {
    static const std::vector<PairDataset> data = {
        {7, 3, "27", "35", {2, 4, 4, 6, 2, 2, 4}, {2, 4, 4, 6, 2, 2, 4}, 7},
        {15, 4, "7531", "4657",
         {8, 6, 8, 4, 6, 10, 8, 6, 4, 10, 6, 10, 10, 8, 8},
         {8, 6, 8, 4, 6, 10, 8, 6, 4, 10, 6, 10, 10, 8, 8}, 15},
        {31, 5, "454761565", "715750453",
         {12, 12, 16, 16, 20, 12, 16, 20, 16, 16, 20, 16, 16, 16, 16, 12,
          16, 20, 16, 12, 12, 12, 16, 12, 20, 16, 16, 16, 12, 20, 12},
         // the reported list omits index 14
         {12, 12, 16, 16, 20, 12, 16, 20, 16, 16, 20, 16, 16, 16, 12, 16,
          20, 16, 12, 12, 12, 16, 12, 20, 16, 16, 16, 12, 20, 12}, 30},
        {63, 6, "10305172162267315277", "13745214756551542207",
         {32, 32, 24, 40, 32, 32, 40, 32, 32, 32, 32, 32, 32, 24, 32, 32,
          32, 32, 24, 32, 40, 32, 32, 32, 32, 32, 40, 32, 32, 32, 32, 24,
          32, 32, 32, 32, 32, 32, 32, 32, 24, 32, 32, 32, 32, 32, 32, 32,
          32, 24, 24, 24, 32, 24, 40, 32, 32, 24, 32, 40, 32, 32, 32},
         // the reported list drops several entries and carries one stray 32
         {32, 32, 24, 40, 32, 32, 40, 32, 32, 32, 32, 32, 24, 32, 32, 32,
          32, 24, 32, 40, 32, 32, 32, 32, 32, 32, 32, 40, 32, 32, 32, 32,
          24, 32, 32, 32, 32, 32, 32, 24, 24, 24, 32, 24, 40, 32, 32, 24,
          32, 40, 32, 32, 32}, 52},
    };
    return data;
}

inline const PairDataset& pair_for_m(int m) {
    for (const auto& d : pair_datasets())
        if (d.m == m) return d;
    throw error("no reference pair dataset for m = " + std::to_string(m));
}

/// Good two-generator codes: offsets a(1..p-1) and the verified distance d.
struct TwoGenRow {
    int p;
    int m;
    int k;
    int d;
    std::vector<int> offsets;
    bool optimal;  // exhaustively optimal over offset choices
};

inline const std::vector<TwoGenRow>& table_rows() {
    static const std::vector<TwoGenRow> rows = {
        {3, 7, 3, 8, {1, 2}, true},
        {4, 7, 3, 12, {1, 2, 4}, true},
        {5, 7, 3, 16, {0, 3, 5, 6}, true},
        {7, 7, 3, 24, {1, 2, 3, 4, 5, 6}, true},
        {2, 15, 4, 12, {3}, true},
        {5, 15, 4, 34, {1, 3, 6, 13}, true},
        {10, 15, 4, 72, {1, 3, 4, 6, 7, 9, 10, 12, 13}, true},
        {11, 15, 4, 80, {1, 2, 3, 4, 5, 6, 9, 11, 12, 13}, true},
        {12, 15, 4, 88, {1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13}, true},
        {15, 15, 4, 112, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}, true},
        {5, 31, 5, 72, {1, 3, 6, 18}, false},
        {6, 31, 5, 88, {1, 4, 7, 19, 28}, false},
        {2, 63, 6, 56, {21}, false},
        {3, 63, 6, 88, {21, 42}, true},
    };
    return rows;
}

/// Two-weight cases: both circulant groups built from one simplex code, shifts
/// from the matching table row. Every such code with distinct nonzero offsets
/// has exactly the weights (p-1)*2^{k-1} and p*2^{k-1}.
struct TwoWeightCase {
    int m;
    int p;
    std::vector<int> offsets;
    int w_low, w_high;
    std::uint64_t n_low, n_high;  // codeword counts at the two weights
};

inline const std::vector<TwoWeightCase>& two_weight_cases() {
    static const std::vector<TwoWeightCase> cases = {
        {7, 3, {1, 2}, 8, 12, 21, 42},
        {7, 4, {1, 2, 4}, 12, 16, 28, 35},
        {7, 7, {1, 2, 3, 4, 5, 6}, 24, 28, 49, 14},
        {15, 10, {1, 3, 4, 6, 7, 9, 10, 12, 13}, 72, 80, 150, 105},
        {15, 11, {1, 2, 3, 4, 5, 6, 9, 11, 12, 13}, 80, 88, 165, 90},
        {15, 12, {1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13}, 88, 96, 180, 75},
        {15, 15, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}, 112, 120, 225, 30},
    };
    return cases;
}

struct TripleDataset {
    int m;
    int k;
    const char* g1;
    const char* g2;
    const char* g3;
};

inline const TripleDataset& triple_m31() {
    static const TripleDataset t{31, 5, "535437151", "454761565", "715750453"};
    return t;
}

inline const TripleDataset& triple_m127() {
    static const TripleDataset t{127, 7,
                                 "0017725147351306755331107027625632117050301",
                                 "11151734177073051372502674712630155350621",
                                 "14111773707251275147153042731036267012155"};
    return t;
}

/// Record constructions. For the extended codes the generator-matrix display is
/// ambiguous about the third/second circulant row's shifts; both readings are
/// buildable, and the variant carrying the base code's offsets is the one that
/// attains the target distance (variant_d is the other reading's verified d).
struct RecordCase {
    const char* name;
    int n, k, d;
    std::uint64_t count_at_d;
    int variant_d;  // -1 when the construction has no ambiguous display reading
};

inline const std::vector<RecordCase>& records() {
    static const std::vector<RecordCase> recs = {
        {"[93,15,36]", 93, 15, 36, 1240, -1},
        {"[93,17,34]", 93, 17, 34, 1488, 30},
        {"[96,17,36]", 96, 17, 36, 2728, 32},
        {"[254,21,104]", 254, 21, 104, 13716, -1},
        {"[254,23,102]", 254, 23, 102, 7620, 94},
        {"[256,23,104]", 256, 23, 104, 38608, 96},
    };
    return recs;
}

inline QcCodeSpec build_record(std::size_t index, bool displayed_variant = false) {
    auto base_93 = [&](std::vector<int> b) {
        const auto& t = triple_m31();
        std::vector<int> a{1, 18};
        return build_three_gen(make_simplex(t.g1, t.k), make_simplex(t.g2, t.k), make_simplex(t.g3, t.k), a, b);
    };
    auto base_254 = [&](std::vector<int> a, std::vector<int> b) {
        const auto& t = triple_m127();
        return build_three_gen(make_simplex(t.g1, t.k), make_simplex(t.g2, t.k), make_simplex(t.g3, t.k), a, b);
    };
    std::vector<std::vector<bool>> rows_93 = {{true, true, false}, {true, false, true}};
    std::vector<std::vector<bool>> rows_254 = {{true, false}, {false, true}};
    switch (index) {
        case 0:
            return base_93({30, 2});
        case 1:
            return extend_with_unit_rows(base_93(displayed_variant ? std::vector<int>{30, 30}
                                                                   : std::vector<int>{30, 2}),
                                         rows_93);
        case 2:
            return extend_with_block_parity(build_record(1, displayed_variant));
        case 3:
            return base_254({21}, {43});
        case 4:
            return extend_with_unit_rows(displayed_variant ? base_254({0}, {0}) : base_254({21}, {43}), rows_254);
        case 5:
            return extend_with_block_parity(build_record(4, displayed_variant));
        default:
            throw error("build_record: unknown index");
    }
}

/// All simplex generators used by the bundled datasets, for validation sweeps.
struct SimplexGen {
    int k;
    const char* octal;
};

inline const std::vector<SimplexGen>& simplex_generators() {
    static const std::vector<SimplexGen> gens = {
        {3, "35"}, {3, "27"},
        {4, "7531"}, {4, "4657"},
        {5, "535437151"}, {5, "454761565"}, {5, "715750453"},
        {6, "10305172162267315277"}, {6, "13745214756551542207"},
        {7, "0017725147351306755331107027625632117050301"},
        {7, "11151734177073051372502674712630155350621"},
        {7, "14111773707251275147153042731036267012155"},
    };
    return gens;
}

/// Weight distribution of the [21,6,8] code built from the m = 7 pair dataset
/// with offsets (1, 2).
inline const std::vector<std::pair<int, std::uint64_t>>& example_21_6_8_distribution() {
    static const std::vector<std::pair<int, std::uint64_t>> dist = {
        {0, 1}, {8, 14}, {10, 21}, {12, 21}, {14, 7}};
    return dist;
}

}  // namespace qcs::reference
