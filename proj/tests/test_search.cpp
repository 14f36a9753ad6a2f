#include <catch2/catch_amalgamated.hpp>

#include "qcs/reference.hpp"
#include "qcs/search.hpp"

using namespace qcs;

namespace {

SimplexCode sim(const char* oct, int k) { return reference::make_simplex(oct, k); }

}  // namespace

TEST_CASE("canonical_offset_multiset") {
    CHECK(canonical_offset_multiset({0, 1, 2}, 7) == std::vector<int>{0, 1, 2});
    CHECK(canonical_offset_multiset({3, 4, 5}, 7) == std::vector<int>{0, 1, 2});
    CHECK(canonical_offset_multiset({0, 0, 3, 5, 6}, 7) == std::vector<int>{0, 0, 3, 5, 6});
    CHECK(canonical_offset_multiset({-1, 0}, 7) == std::vector<int>{0, 1});

    OffsetTuple t = canonicalize_two_gen(std::vector<int>{0, 0, 3, 5, 6}, 7);
    CHECK(t.a == std::vector<int>{0, 3, 5, 6});
    CHECK(!t.b.has_value());

    // canonicalization preserves the formula value
    DistanceVector D = pair_distance_vector(sim("27", 3), sim("35", 3));
    CHECK(two_gen_formula_distance(D, t.a, 3) == 16);
}

TEST_CASE("formula distance is invariant under common translation of the offsets") {
    std::mt19937_64 rng(71);
    DistanceVector D = pair_distance_vector(sim("7531", 4), sim("4657", 4));
    for (int trial = 0; trial < 50; ++trial) {
        int p = 2 + static_cast<int>(rng() % 4);
        std::vector<int> t, shifted;
        int c = static_cast<int>(rng() % 15);
        // translating all p offsets (implicit 0 becomes c) keeps every block sum window
        std::vector<int> full{0};
        for (int i = 1; i < p; ++i) full.push_back(static_cast<int>(rng() % 15));
        std::vector<int> fullshift;
        for (int x : full) fullshift.push_back((x + c) % 15);
        // evaluate both as multisets via the canonical tail
        OffsetTuple a1 = canonicalize_two_gen(full, 15);
        OffsetTuple a2 = canonicalize_two_gen(fullshift, 15);
        CHECK(a1.a == a2.a);
        CHECK(two_gen_formula_distance(D, std::vector<int>(full.begin() + 1, full.end()), 4) ==
              two_gen_formula_distance(D, a2.a, 4));
    }
}

TEST_CASE("search_two_gen exhaustive finds the recorded optima for m = 7") {
    SimplexCode a = sim("27", 3), b = sim("35", 3);
    struct Want {
        int p, d;
        std::vector<int> tuple;
    };
    for (const Want& w : {Want{3, 8, {1, 2}}, Want{4, 12, {1, 2, 4}}, Want{5, 16, {0, 3, 5, 6}},
                          Want{7, 24, {1, 2, 3, 4, 5, 6}}}) {
        SearchResult res = search_two_gen(a, b, w.p);
        CHECK(res.d == w.d);
        CHECK(res.best.a == w.tuple);
        CHECK(res.optimal);
        CHECK(res.mode == SearchMode::exhaustive);
    }
}

TEST_CASE("search_two_gen exhaustive m = 15, p = 2") {
    SearchResult res = search_two_gen(sim("7531", 4), sim("4657", 4), 2);
    CHECK(res.d == 12);
    CHECK(res.best.a == std::vector<int>{3});
    CHECK(res.evaluations == 15);
}

TEST_CASE("exhaustive mode equals a raw brute force over all tuples (m = 7, p <= 4)") {
    SimplexCode a = sim("27", 3), b = sim("35", 3);
    DistanceVector D = pair_distance_vector(a, b);
    for (int p = 2; p <= 4; ++p) {
        int best = -1;
        std::vector<int> t(static_cast<std::size_t>(p - 1), 0);
        for (;;) {
            best = std::max(best, two_gen_formula_distance(D, t, 3));
            std::size_t i = t.size();
            while (i > 0 && t[i - 1] == 6) --i;
            if (i == 0) break;
            ++t[i - 1];
            for (std::size_t j = i; j < t.size(); ++j) t[j] = 0;
        }
        CHECK(search_two_gen(a, b, p).d == best);
    }
}

TEST_CASE("search_two_gen p = 1 degenerates to the single-block distance") {
    SearchResult res = search_two_gen(sim("27", 3), sim("35", 3), 1);
    CHECK(res.d == 2);
    CHECK(res.best.a.empty());
    CHECK(res.evaluations == 1);
}

TEST_CASE("search_two_gen exhaustive budget guard") {
    SearchOptions opt;
    opt.budget = 1000;
    CHECK_THROWS_WITH(search_two_gen(sim("7531", 4), sim("4657", 4), 15, opt),
                      Catch::Matchers::ContainsSubstring("stochastic"));
}

TEST_CASE("stochastic search is deterministic for a fixed seed and finds good tuples") {
    SearchOptions opt;
    opt.mode = SearchMode::stochastic;
    opt.seed = 99;
    opt.budget = 3000;
    SearchResult r1 = search_two_gen(sim("27", 3), sim("35", 3), 3, opt);
    SearchResult r2 = search_two_gen(sim("27", 3), sim("35", 3), 3, opt);
    CHECK(r1.d == r2.d);
    CHECK(r1.best.a == r2.best.a);
    CHECK(r1.evaluations == r2.evaluations);
    CHECK(!r1.optimal);
    CHECK(r1.d == 8);  // space is tiny; the climber reaches the optimum

    DistanceVector D = pair_distance_vector(sim("27", 3), sim("35", 3));
    CHECK(two_gen_formula_distance(D, r1.best.a, 3) == r1.d);
}

TEST_CASE("every bundled two-generator row evaluates to its recorded distance") {
    for (const auto& row : reference::table_rows()) {
        const auto& ds = reference::pair_for_m(row.m);
        DistanceVector D = pair_distance_vector(sim(ds.gen_a, ds.k), sim(ds.gen_b, ds.k));
        CHECK(two_gen_formula_distance(D, row.offsets, row.k) == row.d);
    }
}

TEST_CASE("exhaustive search never returns less than a recorded certificate (m = 7, 15 small p)") {
    for (const auto& row : reference::table_rows()) {
        if (row.m > 15 || row.p > 5) continue;
        const auto& ds = reference::pair_for_m(row.m);
        SearchResult res = search_two_gen(sim(ds.gen_a, ds.k), sim(ds.gen_b, ds.k), row.p);
        CHECK(res.d >= row.d);
        if (row.optimal) CHECK(res.d == row.d);
    }
}

TEST_CASE("search_three_gen exhaustive over the m = 127, p = 2 grid") {
    const auto& t = reference::triple_m127();
    SimplexCode c1 = sim(t.g1, 7), c2 = sim(t.g2, 7), c3 = sim(t.g3, 7);
    SearchOptions opt;
    opt.budget = 17000;
    SearchResult res = search_three_gen(c1, c2, c3, 2, opt);
    CHECK(res.d == 104);
    CHECK(res.evaluations == 127 * 127);
    CHECK(res.optimal);
    REQUIRE(res.best.b.has_value());

    DistanceVector D12 = pair_distance_vector(c1, c2);
    DistanceVector D13 = pair_distance_vector(c1, c3);
    DistanceVector D23 = pair_distance_vector(c2, c3);
    DistanceTable D123 = triple_distance_table(c1, c2, c3);
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, res.best.a, *res.best.b, 7) == 104);
    // the recorded (21, 43) certificate is among the maximizers
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, std::vector<int>{21}, std::vector<int>{43}, 7) == 104);
}

TEST_CASE("search_three_gen stochastic on m = 31, p = 3 is deterministic") {
    const auto& t = reference::triple_m31();
    SimplexCode c1 = sim(t.g1, 5), c2 = sim(t.g2, 5), c3 = sim(t.g3, 5);
    SearchOptions opt;
    opt.mode = SearchMode::stochastic;
    opt.seed = 2024;
    opt.budget = 60000;
    SearchResult r1 = search_three_gen(c1, c2, c3, 3, opt);
    SearchResult r2 = search_three_gen(c1, c2, c3, 3, opt);
    CHECK(r1.d == r2.d);
    CHECK(r1.best.a == r2.best.a);
    CHECK(r1.best.b == r2.best.b);

    DistanceVector D12 = pair_distance_vector(c1, c2);
    DistanceVector D13 = pair_distance_vector(c1, c3);
    DistanceVector D23 = pair_distance_vector(c2, c3);
    DistanceTable D123 = triple_distance_table(c1, c2, c3);
    CHECK(three_gen_formula_distance(D12, D13, D23, D123, r1.best.a, *r1.best.b, 5) == r1.d);
    CHECK(r1.d == 36);  // the climber reaches the record value at this budget
}

TEST_CASE("search_three_gen over budget returns a partial result flagged non-optimal") {
    const auto& t = reference::triple_m31();
    SearchOptions opt;
    opt.budget = 50;
    SearchResult res = search_three_gen(sim(t.g1, 5), sim(t.g2, 5), sim(t.g3, 5), 2, opt);
    CHECK(!res.optimal);
    CHECK(res.evaluations == 50);
    CHECK(res.d > 0);
}

TEST_CASE("search_three_gen p = 1") {
    const auto& t = reference::triple_m31();
    SearchResult res = search_three_gen(sim(t.g1, 5), sim(t.g2, 5), sim(t.g3, 5), 1);
    CHECK(res.d == 8);
    CHECK(res.best.a.empty());
}
