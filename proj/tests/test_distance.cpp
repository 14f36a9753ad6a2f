#include <catch2/catch_amalgamated.hpp>

#include "qcs/distance.hpp"
#include "qcs/reference.hpp"
#include "test_util.hpp"

using namespace qcs;

namespace {

SimplexCode sim(const char* oct, int k) { return reference::make_simplex(oct, k); }

// Independent oracle: per-message encoding, no Gray stepping, no row basis.
// Valid for full-rank specs only.
CodeReport naive_report(const QcCodeSpec& spec) {
    int K = spec.message_length();
    REQUIRE(K <= 20);
    CodeReport rep;
    rep.n = spec.length();
    rep.k = K;
    rep.codeword_count = std::uint64_t{1} << K;
    for (std::uint64_t x = 0; x < rep.codeword_count; ++x) {
        BitVec msg(static_cast<std::size_t>(K));
        for (int b = 0; b < K; ++b)
            if (x & (std::uint64_t{1} << b)) msg.set_bit(static_cast<std::size_t>(b));
        ++rep.weight_distribution[encode(spec, msg).weight()];
    }
    rep.d_min = 0;
    for (const auto& [w, c] : rep.weight_distribution)
        if (w > 0) {
            rep.d_min = w;
            break;
        }
    return rep;
}

}  // namespace

TEST_CASE("pair_distance_vector") {
    DistanceVector d7 = pair_distance_vector(sim("27", 3), sim("35", 3));
    CHECK(d7.d == std::vector<int>{2, 4, 4, 6, 2, 2, 4});

    DistanceVector d15 = pair_distance_vector(sim("7531", 4), sim("4657", 4));
    CHECK(d15.d == std::vector<int>{8, 6, 8, 4, 6, 10, 8, 6, 4, 10, 6, 10, 10, 8, 8});

    DistanceVector self = pair_distance_vector(sim("35", 3), sim("35", 3));
    CHECK(self.d[0] == 0);

    CHECK_THROWS_AS(pair_distance_vector(sim("35", 3), sim("7531", 4)), error);
}

TEST_CASE("distance vector entries are bounded by m") {
    for (const auto& ds : reference::pair_datasets()) {
        DistanceVector D = pair_distance_vector(sim(ds.gen_a, ds.k), sim(ds.gen_b, ds.k));
        CHECK(static_cast<int>(D.d.size()) == ds.m);
        for (int v : D.d) {
            CHECK(v >= 0);
            CHECK(v <= ds.m);
        }
    }
}

TEST_CASE("triple_distance_table") {
    const auto& t = reference::triple_m31();
    SimplexCode c1 = sim(t.g1, 5), c2 = sim(t.g2, 5), c3 = sim(t.g3, 5);
    DistanceTable tab = triple_distance_table(c1, c2, c3);
    CHECK(tab.at(0, 0) == 14);

    // duplicated third code: entries (i, i) collapse to wt(g1)
    DistanceTable dup = triple_distance_table(c1, c2, c2);
    for (int i = 0; i < 31; i += 5) CHECK(dup.at(i, i) == 16);

    // spot-check one random entry against a direct bit-level recomputation
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        int i = static_cast<int>(rng() % 31), j = static_cast<int>(rng() % 31);
        CyclicWord w = c1.generator_word() ^ shift_mul(c2.generator_word(), i) ^ shift_mul(c3.generator_word(), j);
        CHECK(tab.at(i, j) == weight(w));
    }

    // triangle bound against the pair vector
    DistanceVector d12 = pair_distance_vector(c1, c2);
    for (int trial = 0; trial < 50; ++trial) {
        int i = static_cast<int>(rng() % 31), j = static_cast<int>(rng() % 31);
        CHECK(tab.at(i, j) >= std::abs(d12.at(i) - 16));
    }
}

TEST_CASE("two_gen_formula_distance on the m = 7 dataset") {
    DistanceVector D = pair_distance_vector(sim("27", 3), sim("35", 3));
    CHECK(two_gen_formula_distance(D, std::vector<int>{1, 2}, 3) == 8);
    CHECK(two_gen_formula_distance(D, std::vector<int>{0, 3, 5, 6}, 3) == 16);
    CHECK(two_gen_formula_distance(D, std::vector<int>{1, 2, 3, 4, 5, 6}, 3) == 24);
    // p = 1: single block
    CHECK(two_gen_formula_distance(D, std::vector<int>{}, 3) == 2);
}

TEST_CASE("three_gen_formula_distance") {
    const auto& t31 = reference::triple_m31();
    SimplexCode c1 = sim(t31.g1, 5), c2 = sim(t31.g2, 5), c3 = sim(t31.g3, 5);
    DistanceVector D12 = pair_distance_vector(c1, c2);
    DistanceVector D13 = pair_distance_vector(c1, c3);
    DistanceVector D23 = pair_distance_vector(c2, c3);
    DistanceTable D123 = triple_distance_table(c1, c2, c3);
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, std::vector<int>{1, 18}, std::vector<int>{30, 2}, 5) == 36);

    // all-zero offsets: twice the single-block distance (verified below by the oracle)
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, std::vector<int>{0}, std::vector<int>{0}, 5) == 16);
    std::vector<int> z{0};
    QcCodeSpec doubled = build_three_gen(c1, c2, c3, z, z);
    CodeReport rep2 = exhaustive_min_distance(doubled);
    CHECK(rep2.d_min == 16);

    QcCodeSpec single = build_three_gen(c1, c2, c3, std::vector<int>{}, std::vector<int>{});
    CodeReport rep1 = exhaustive_min_distance(single);
    CHECK(rep1.d_min == 8);
    // p-fold repetition scales every weight by p
    for (const auto& [w, c] : rep1.weight_distribution) {
        REQUIRE(rep2.weight_distribution.count(2 * w) == 1);
        CHECK(rep2.weight_distribution.at(2 * w) == c);
    }
    CHECK(rep1.weight_distribution.size() == rep2.weight_distribution.size());
}

TEST_CASE("three_gen_formula_distance on the m = 127 dataset") {
    const auto& t = reference::triple_m127();
    SimplexCode c1 = sim(t.g1, 7), c2 = sim(t.g2, 7), c3 = sim(t.g3, 7);
    DistanceVector D12 = pair_distance_vector(c1, c2);
    DistanceVector D13 = pair_distance_vector(c1, c3);
    DistanceVector D23 = pair_distance_vector(c2, c3);
    DistanceTable D123 = triple_distance_table(c1, c2, c3);
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, std::vector<int>{21}, std::vector<int>{43}, 7) == 104);
}

TEST_CASE("exhaustive_min_distance: [21,6,8]") {
    std::vector<int> offs{1, 2};
    QcCodeSpec spec = build_two_gen(sim("27", 3), sim("35", 3), offs);
    CodeReport rep = exhaustive_min_distance(spec);
    CHECK(rep.n == 21);
    CHECK(rep.k == 6);
    CHECK(rep.d_min == 8);
    CHECK(rep.codeword_count == 64);
    std::map<int, std::uint64_t> want;
    for (auto [w, c] : reference::example_21_6_8_distribution()) want[w] = c;
    CHECK(rep.weight_distribution == want);

    // the zero codeword is counted exactly once; totals add up
    std::uint64_t total = 0;
    for (const auto& [w, c] : rep.weight_distribution) total += c;
    CHECK(total == rep.codeword_count);
    CHECK(rep.weight_distribution.at(0) == 1);
}

TEST_CASE("exhaustive_min_distance: simplex as a one-group spec") {
    CodeReport rep = exhaustive_min_distance(build_one_gen(sim("35", 3), std::vector<int>{}));
    CHECK(rep.d_min == 4);
    CHECK(rep.weight_distribution == std::map<int, std::uint64_t>{{0, 1}, {4, 7}});
}

TEST_CASE("exhaustive_min_distance matches the naive per-message oracle") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        int p = 2 + static_cast<int>(rng() % 3);
        std::vector<int> offs;
        for (int i = 1; i < p; ++i) offs.push_back(static_cast<int>(rng() % 15));
        QcCodeSpec spec = build_two_gen(sim("7531", 4), sim("4657", 4), offs);
        if (trial % 2 == 0) spec = extend_with_block_parity(spec);
        CodeReport a = exhaustive_min_distance(spec);
        CodeReport b = naive_report(spec);
        CHECK(a.d_min == b.d_min);
        CHECK(a.weight_distribution == b.weight_distribution);
    }
}

TEST_CASE("exhaustive_min_distance refuses above the dimension cap") {
    QcCodeSpec spec = reference::build_record(0);  // K = 15
    VerifyOptions opt;
    opt.dimension_cap = 10;
    CHECK_THROWS_WITH(exhaustive_min_distance(spec, opt), Catch::Matchers::ContainsSubstring("cap"));
}

TEST_CASE("exhaustive_min_distance reports the actual dimension when rows are dependent") {
    QcCodeSpec dup = build_two_gen(sim("35", 3), sim("35", 3), std::vector<int>{0, 0});
    CodeReport rep = exhaustive_min_distance(dup);
    CHECK(rep.k == 3);
    CHECK(rep.codeword_count == 8);
    CHECK(rep.d_min == 12);  // three repeated simplex blocks
}

TEST_CASE("thread count does not change the report") {
    QcCodeSpec spec = reference::build_record(0);
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions four;
    four.threads = 4;
    CodeReport a = exhaustive_min_distance(spec, one);
    CodeReport b = exhaustive_min_distance(spec, four);
    CHECK(a.d_min == 36);
    CHECK(a.weight_distribution == b.weight_distribution);
    CHECK(a.weight_distribution.at(36) == 1240);
}

TEST_CASE("two_weight_check") {
    // one simplex code in both groups: exactly two nonzero weights
    std::vector<int> offs{1, 2};
    SimplexCode c = sim("35", 3);
    TwoWeightResult tw = two_weight_check(exhaustive_min_distance(build_two_gen(c, c, offs)));
    CHECK(tw.is_two_weight);
    CHECK(tw.w_low == 8);
    CHECK(tw.w_high == 12);

    CHECK_FALSE(two_weight_check(exhaustive_min_distance(build_one_gen(c, std::vector<int>{}))).is_two_weight);

    // the heterogeneous [30,8,12] code is not two-weight
    QcCodeSpec h = build_two_gen(sim("7531", 4), sim("4657", 4), std::vector<int>{3});
    CodeReport rep = exhaustive_min_distance(h);
    CHECK(rep.d_min == 12);
    CHECK_FALSE(two_weight_check(rep).is_two_weight);
}

TEST_CASE("weight of a shifted pair depends only on the shift difference") {
    std::mt19937_64 rng(59);
    for (int m : {7, 15, 31, 127}) {
        for (int trial = 0; trial < 30; ++trial) {
            CyclicWord u = test::random_word(rng, m);
            CyclicWord v = test::random_word(rng, m);
            int s = static_cast<int>(rng() % m), j = static_cast<int>(rng() % m);
            CHECK(weight(shift_mul(u, s) ^ shift_mul(v, s + j)) == weight(u ^ shift_mul(v, j)));
        }
    }
}

TEST_CASE("formula equals exhaustive distance (spot checks; acceptance runs the full sweep)") {
    SimplexCode a = sim("27", 3), b = sim("35", 3);
    DistanceVector D = pair_distance_vector(a, b);
    for (int off = 0; off < 7; ++off) {
        std::vector<int> t{off};
        CHECK(two_gen_formula_distance(D, t, 3) == exhaustive_min_distance(build_two_gen(a, b, t)).d_min);
    }
    std::mt19937_64 rng(61);
    SimplexCode a15 = sim("7531", 4), b15 = sim("4657", 4);
    DistanceVector D15 = pair_distance_vector(a15, b15);
    for (int trial = 0; trial < 20; ++trial) {
        int p = 2 + static_cast<int>(rng() % 3);
        std::vector<int> t;
        for (int i = 1; i < p; ++i) t.push_back(static_cast<int>(rng() % 15));
        CHECK(two_gen_formula_distance(D15, t, 4) == exhaustive_min_distance(build_two_gen(a15, b15, t)).d_min);
    }
}

TEST_CASE("block parity extension never decreases the minimum distance") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> t{static_cast<int>(rng() % 15), static_cast<int>(rng() % 15)};
        QcCodeSpec base = build_two_gen(sim("7531", 4), sim("4657", 4), t);
        QcCodeSpec ext = extend_with_block_parity(base);
        CodeReport rb = exhaustive_min_distance(base);
        CodeReport re = exhaustive_min_distance(ext);
        CHECK(re.d_min >= rb.d_min);
        // any codeword with an odd-weight block gains weight
        for (int i = 0; i < 10; ++i) {
            BitVec msg = test::random_bits(rng, 8);
            BitVec cb = encode(base, msg);
            BitVec ce = encode(ext, msg);
            bool odd_block = false;
            for (int j = 0; j < base.p; ++j) {
                int w = 0;
                for (int e = 0; e < 15; ++e) w += cb.bit(static_cast<std::size_t>(j * 15 + e));
                if (w % 2) odd_block = true;
            }
            if (odd_block)
                CHECK(ce.weight() > cb.weight());
            else
                CHECK(ce.weight() == cb.weight());
        }
    }
}
