// qcs: build, search, and verify quasi-cyclic codes assembled from cyclic
// simplex codes. Machine-readable reports go to stdout; timings and notes go
// to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcs/distance.hpp"
#include "qcs/qcmodel.hpp"
#include "qcs/reference.hpp"
#include "qcs/search.hpp"
#include "qcs/spec_io.hpp"

namespace {

using nlohmann::json;
using namespace qcs;

struct CommonArgs {
    std::string g1, g2, g3;
    int k = 0;
    int p = 0;
    std::vector<int> a, b;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    std::uint64_t budget = 2'000'000;
    int threads = 0;
    int cap = 26;
    bool as_json = false;
    std::string spec_path;
    std::string out_path;
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw error("cannot write " + out_path);
        f << j.dump(2) << "\n";
    }
}

SimplexCode make_code(const std::string& octal, int k) {
    if (octal.empty()) throw error("missing generator (use --g1/--g2/--g3)");
    if (k < 2) throw error("missing or bad --k");
    return SimplexCode::from_generator(parse_octal(octal, (1 << k) - 1), k);
}

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

json search_result_json(const SearchResult& r) {
    json j{{"d", r.d},
           {"a", r.best.a},
           {"evaluations", r.evaluations},
           {"mode", r.mode == SearchMode::exhaustive ? "exhaustive" : "stochastic"},
           {"optimal", r.optimal}};
    if (r.best.b)
        j["b"] = *r.best.b;
    else
        j["b"] = nullptr;
    if (r.mode == SearchMode::stochastic) j["seed"] = r.seed;
    return j;
}

SearchOptions search_options(const CommonArgs& args) {
    SearchOptions opt;
    if (args.mode == "exhaustive")
        opt.mode = SearchMode::exhaustive;
    else if (args.mode == "stochastic")
        opt.mode = SearchMode::stochastic;
    else
        throw error("--mode must be exhaustive or stochastic");
    opt.seed = args.seed;
    opt.budget = args.budget;
    return opt;
}

int cmd_parse_poly(const std::string& octal, bool as_json) {
    Gf2Poly p = parse_octal(octal);
    auto deg = p.degree();
    if (as_json) {
        json j{{"octal", octal},
               {"canonical_octal", format_octal(p)},
               {"degree", deg ? json(*deg) : json(nullptr)},
               {"weight", p.weight()},
               {"support", p.support()}};
        emit(j, "");
        return 0;
    }
    if (!deg) {
        std::cout << "zero polynomial\n";
        return 0;
    }
    std::cout << "degree " << *deg << ", weight " << p.weight() << "\n";
    std::cout << "support:";
    for (auto e : p.support()) std::cout << " x^" << e;
    std::cout << "\n";
    return 0;
}

int cmd_simplex(const CommonArgs& args) {
    SimplexCode c = make_code(args.g1, args.k);
    if (args.as_json) {
        emit(json{{"n", c.m()},
                  {"k", c.k()},
                  {"d", c.min_distance()},
                  {"generator_octal", format_octal(c.generator())}},
             args.out_path);
    } else {
        std::cout << "[" << c.m() << ", " << c.k() << ", " << c.min_distance() << "] simplex code, generator "
                  << format_octal(c.generator()) << " (octal)\n";
    }
    return 0;
}

int cmd_dvec(const CommonArgs& args) {
    DistanceVector D = pair_distance_vector(make_code(args.g1, args.k), make_code(args.g2, args.k));
    if (args.as_json) {
        emit(json{{"m", D.m}, {"d", D.d}}, args.out_path);
    } else {
        std::cout << tuple_str(D.d) << "\n";
    }
    return 0;
}

int cmd_dtable(const CommonArgs& args) {
    DistanceTable T = triple_distance_table(make_code(args.g1, args.k), make_code(args.g2, args.k),
                                            make_code(args.g3, args.k));
    if (args.as_json) {
        json rows = json::array();
        for (int i = 0; i < T.m; ++i)
            rows.push_back(std::vector<int>(T.d.begin() + static_cast<std::ptrdiff_t>(i) * T.m,
                                            T.d.begin() + static_cast<std::ptrdiff_t>(i + 1) * T.m));
        emit(json{{"m", T.m}, {"d", rows}}, args.out_path);
    } else {
        for (int i = 0; i < T.m; ++i) {
            for (int j = 0; j < T.m; ++j) std::cout << (j ? " " : "") << T.at(i, j);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_formula_d(const CommonArgs& args) {
    int d = 0;
    if (args.g3.empty()) {
        DistanceVector D = pair_distance_vector(make_code(args.g1, args.k), make_code(args.g2, args.k));
        d = two_gen_formula_distance(D, args.a, args.k);
    } else {
        SimplexCode c1 = make_code(args.g1, args.k), c2 = make_code(args.g2, args.k), c3 = make_code(args.g3, args.k);
        if (args.a.size() != args.b.size()) throw error("--a and --b must have the same length");
        d = three_gen_formula_distance(pair_distance_vector(c1, c2), pair_distance_vector(c1, c3),
                                       pair_distance_vector(c2, c3), triple_distance_table(c1, c2, c3), args.a,
                                       args.b, args.k);
    }
    if (args.as_json)
        emit(json{{"d", d}}, args.out_path);
    else
        std::cout << "d = " << d << "\n";
    return 0;
}

int cmd_search(const CommonArgs& args, bool three) {
    SearchOptions opt = search_options(args);
    SearchResult res;
    json inputs{{"g1", args.g1}, {"g2", args.g2}, {"k", args.k}, {"p", args.p},
                {"mode", args.mode}, {"budget", args.budget}};
    if (three) {
        inputs["g3"] = args.g3;
        res = search_three_gen(make_code(args.g1, args.k), make_code(args.g2, args.k), make_code(args.g3, args.k),
                               args.p, opt);
    } else {
        res = search_two_gen(make_code(args.g1, args.k), make_code(args.g2, args.k), args.p, opt);
    }
    if (opt.mode == SearchMode::stochastic) inputs["seed"] = args.seed;
    emit(json{{"command", three ? "search3" : "search2"}, {"inputs", inputs}, {"result", search_result_json(res)}},
         args.out_path);
    std::cerr << "best d = " << res.d << " at a = " << tuple_str(res.best.a);
    if (res.best.b) std::cerr << ", b = " << tuple_str(*res.best.b);
    std::cerr << " after " << res.evaluations << " evaluations\n";
    return 0;
}

QcCodeSpec spec_from_args(const CommonArgs& args) {
    if (args.g2.empty()) return build_one_gen(make_code(args.g1, args.k), args.a);
    if (args.g3.empty()) return build_two_gen(make_code(args.g1, args.k), make_code(args.g2, args.k), args.a);
    return build_three_gen(make_code(args.g1, args.k), make_code(args.g2, args.k), make_code(args.g3, args.k),
                           args.a, args.b);
}

std::vector<std::vector<bool>> parse_unit_patterns(const std::vector<std::string>& pats) {
    std::vector<std::vector<bool>> out;
    for (const auto& s : pats) {
        std::vector<bool> row;
        for (char c : s) {
            if (c != '0' && c != '1') throw error("--unit-rows patterns must be 01 strings");
            row.push_back(c == '1');
        }
        out.push_back(std::move(row));
    }
    return out;
}

int cmd_build(const CommonArgs& args, const std::vector<std::string>& unit_rows, bool block_parity) {
    QcCodeSpec spec = spec_from_args(args);
    if (!unit_rows.empty()) spec = extend_with_unit_rows(spec, parse_unit_patterns(unit_rows));
    if (block_parity) spec = extend_with_block_parity(spec);
    emit(spec_to_json(spec), args.out_path);
    return 0;
}

int cmd_extend(const CommonArgs& args, const std::vector<std::string>& unit_rows, bool block_parity) {
    QcCodeSpec spec = load_spec_file(args.spec_path);
    if (!unit_rows.empty()) spec = extend_with_unit_rows(spec, parse_unit_patterns(unit_rows));
    if (block_parity) spec = extend_with_block_parity(spec);
    emit(spec_to_json(spec), args.out_path);
    return 0;
}

int cmd_verify(const CommonArgs& args, bool human) {
    QcCodeSpec spec = load_spec_file(args.spec_path);
    VerifyOptions opt;
    opt.dimension_cap = args.cap;
    opt.threads = args.threads;
    auto t0 = std::chrono::steady_clock::now();
    CodeReport rep = exhaustive_min_distance(spec, opt);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (human) {
        std::cout << "[" << rep.n << ", " << rep.k << ", " << rep.d_min << "] code, " << rep.codeword_count
                  << " codewords\n";
        std::cout << "weight distribution:\n";
        for (const auto& [w, c] : rep.weight_distribution)
            std::cout << "  " << w << ": " << c << "\n";
    } else {
        emit(json{{"command", "verify"}, {"spec", spec_to_json(spec)}, {"report", report_to_json(rep)}},
             args.out_path);
    }
    std::cerr << "verified in " << secs << " s\n";
    return 0;
}

// ---- reproduce ----

struct Reproducer {
    int passed = 0;
    int failed = 0;

    void line(bool ok, const std::string& what, const std::string& detail = "") {
        (ok ? ++passed : ++failed);
        std::cout << (ok ? "PASS " : "FAIL ") << what;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
};

// longest in-order alignment between the reported entries and the full vector
int aligned_entries(const std::vector<int>& reported, const std::vector<int>& full) {
    std::size_t n = reported.size(), m = full.size();
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;)
            dp[i][j] = reported[i] == full[j] ? dp[i + 1][j + 1] + 1 : std::max(dp[i + 1][j], dp[i][j + 1]);
    return dp[0][0];
}

void reproduce_example1(Reproducer& rep) {
    const auto& ds = reference::pair_for_m(7);
    SimplexCode ca = reference::make_simplex(ds.gen_a, ds.k);
    SimplexCode cb = reference::make_simplex(ds.gen_b, ds.k);
    DistanceVector D = pair_distance_vector(ca, cb);
    rep.line(D.d == ds.d_full, "example1 distance vector", tuple_str(D.d));
    std::vector<int> offs{1, 2};
    int fd = two_gen_formula_distance(D, offs, 3);
    rep.line(fd == 8, "example1 formula distance at (1, 2)", "d = " + std::to_string(fd));
    CodeReport r = exhaustive_min_distance(build_two_gen(ca, cb, offs));
    rep.line(r.n == 21 && r.k == 6 && r.d_min == 8, "example1 [21,6,8] exhaustive verification",
             "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d_min) + "]");
}

void reproduce_dvectors(Reproducer& rep) {
    for (const auto& ds : reference::pair_datasets()) {
        DistanceVector D = pair_distance_vector(reference::make_simplex(ds.gen_a, ds.k),
                                                reference::make_simplex(ds.gen_b, ds.k));
        bool full_ok = D.d == ds.d_full;
        int aligned = aligned_entries(ds.d_reported, D.d);
        bool align_ok = aligned == ds.reported_aligned;
        std::string detail = std::to_string(aligned) + "/" + std::to_string(ds.d_reported.size()) +
                             " reported entries align";
        if (static_cast<int>(ds.d_reported.size()) < ds.m)
            detail += " (reported list has " + std::to_string(ds.d_reported.size()) + " of " +
                      std::to_string(ds.m) + " entries)";
        rep.line(full_ok && align_ok, "dvectors m=" + std::to_string(ds.m), detail);
    }
}

void reproduce_table1(Reproducer& rep, int threads) {
    for (const auto& row : reference::table_rows()) {
        const auto& ds = reference::pair_for_m(row.m);
        SimplexCode ca = reference::make_simplex(ds.gen_a, ds.k);
        SimplexCode cb = reference::make_simplex(ds.gen_b, ds.k);
        int fd = two_gen_formula_distance(pair_distance_vector(ca, cb), row.offsets, row.k);
        VerifyOptions opt;
        opt.threads = threads;
        CodeReport r = exhaustive_min_distance(build_two_gen(ca, cb, row.offsets), opt);
        bool ok = fd == row.d && r.d_min == row.d && r.k == 2 * row.k;
        rep.line(ok, "table1 p=" + std::to_string(row.p) + " m=" + std::to_string(row.m),
                 "formula " + std::to_string(fd) + ", verified " + std::to_string(r.d_min) + ", expected " +
                     std::to_string(row.d));
    }
}

void reproduce_records(Reproducer& rep, int threads) {
    const auto& recs = reference::records();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rc = recs[i];
        VerifyOptions opt;
        opt.threads = threads;
        CodeReport r = exhaustive_min_distance(reference::build_record(i), opt);
        bool ok = r.n == rc.n && r.k == rc.k && r.d_min == rc.d && r.weight_distribution.at(rc.d) == rc.count_at_d;
        rep.line(ok, std::string("records ") + rc.name,
                 "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d_min) + "], " +
                     std::to_string(r.weight_distribution.at(r.d_min)) + " words at d");
        if (rc.variant_d >= 0) {
            CodeReport rv = exhaustive_min_distance(reference::build_record(i, true), opt);
            rep.line(rv.d_min == rc.variant_d, std::string("records ") + rc.name + " display-variant",
                     "base-offsets reading attains d=" + std::to_string(r.d_min) +
                         "; as-displayed reading gives d=" + std::to_string(rv.d_min));
        }
    }
}

int cmd_reproduce(const std::string& target, int threads) {
    Reproducer rep;
    bool all = target == "all";
    if (all || target == "example1") reproduce_example1(rep);
    if (all || target == "dvectors") reproduce_dvectors(rep);
    if (all || target == "table1") reproduce_table1(rep, threads);
    if (all || target == "records") reproduce_records(rep, threads);
    if (rep.passed + rep.failed == 0) throw error("unknown reproduce target: " + target);
    std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic codes from cyclic simplex codes: construction, search, verification"};
    app.require_subcommand(1);
    CommonArgs args;

    auto add_generators = [&](CLI::App* sub, bool need2, bool need3) {
        sub->add_option("--g1", args.g1, "first generator polynomial (octal)")->required();
        auto* o2 = sub->add_option("--g2", args.g2, "second generator polynomial (octal)");
        auto* o3 = sub->add_option("--g3", args.g3, "third generator polynomial (octal)");
        if (need2) o2->required();
        if (need3) o3->required();
        sub->add_option("--k", args.k, "dimension of each simplex code")->required();
    };

    std::string poly_arg;
    auto* sc_parse = app.add_subcommand("parse-poly", "parse an octal polynomial and print its summary");
    sc_parse->add_option("octal", poly_arg, "octal digit string")->required();
    sc_parse->add_flag("--json", args.as_json, "JSON output");

    auto* sc_simplex = app.add_subcommand("simplex", "validate a simplex code generator");
    add_generators(sc_simplex, false, false);
    sc_simplex->add_flag("--json", args.as_json, "JSON output");

    auto* sc_dvec = app.add_subcommand("dvec", "distance vector of two simplex codes");
    add_generators(sc_dvec, true, false);
    sc_dvec->add_flag("--json", args.as_json, "JSON output");
    sc_dvec->add_option("--out", args.out_path, "write output to file");

    auto* sc_dtable = app.add_subcommand("dtable", "distance table of three simplex codes");
    add_generators(sc_dtable, true, true);
    sc_dtable->add_flag("--json", args.as_json, "JSON output");
    sc_dtable->add_option("--out", args.out_path, "write output to file");

    auto* sc_formula = app.add_subcommand("formula-d", "closed-form minimum distance for given offsets");
    add_generators(sc_formula, true, false);
    sc_formula->add_option("--p", args.p, "number of blocks");
    sc_formula->add_option("--a", args.a, "offsets a(1..p-1), comma separated")->delimiter(',');
    sc_formula->add_option("--b", args.b, "offsets b(1..p-1), comma separated")->delimiter(',');
    sc_formula->add_flag("--json", args.as_json, "JSON output");

    auto add_search_opts = [&](CLI::App* sub) {
        sub->add_option("--p", args.p, "number of blocks")->required();
        sub->add_option("--mode", args.mode, "exhaustive|stochastic");
        sub->add_option("--seed", args.seed, "stochastic seed");
        sub->add_option("--budget", args.budget, "max candidate evaluations");
        sub->add_flag("--json", args.as_json, "JSON output");
        sub->add_option("--out", args.out_path, "write report to file");
    };
    auto* sc_search2 = app.add_subcommand("search2", "maximize distance over two-generator offsets");
    add_generators(sc_search2, true, false);
    add_search_opts(sc_search2);
    auto* sc_search3 = app.add_subcommand("search3", "maximize distance over three-generator offsets");
    add_generators(sc_search3, true, true);
    add_search_opts(sc_search3);

    std::vector<std::string> unit_rows;
    bool block_parity = false;
    auto* sc_build = app.add_subcommand("build", "emit a code spec file for given generators and offsets");
    add_generators(sc_build, false, false);
    sc_build->add_option("--a", args.a, "offsets a(1..p-1)")->delimiter(',');
    sc_build->add_option("--b", args.b, "offsets b(1..p-1)")->delimiter(',');
    sc_build->add_option("--unit-rows", unit_rows, "per-block fill patterns, e.g. 110,101")->delimiter(',');
    sc_build->add_flag("--block-parity", block_parity, "append one parity position per block");
    sc_build->add_option("--out", args.out_path, "write spec to file");

    auto* sc_extend = app.add_subcommand("extend", "extend an existing spec file");
    sc_extend->add_option("--spec", args.spec_path, "spec file")->required();
    sc_extend->add_option("--unit-rows", unit_rows, "per-block fill patterns")->delimiter(',');
    sc_extend->add_flag("--block-parity", block_parity, "append one parity position per block");
    sc_extend->add_option("--out", args.out_path, "write spec to file");

    bool human = false;
    auto* sc_verify = app.add_subcommand("verify", "exhaustively verify dimension, distance, weight distribution");
    sc_verify->add_option("--spec", args.spec_path, "spec file")->required();
    sc_verify->add_option("--threads", args.threads, "worker threads (0 = all cores)");
    sc_verify->add_option("--cap", args.cap, "dimension cap for exhaustive enumeration");
    sc_verify->add_flag("--human", human, "human-readable table instead of JSON");
    sc_verify->add_option("--out", args.out_path, "write report to file");

    std::string target;
    auto* sc_repro = app.add_subcommand("reproduce", "re-verify the bundled reference constructions");
    sc_repro->add_option("target", target, "example1|dvectors|table1|records|all")->required();
    sc_repro->add_option("--threads", args.threads, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_parse->parsed()) return cmd_parse_poly(poly_arg, args.as_json);
        if (sc_simplex->parsed()) return cmd_simplex(args);
        if (sc_dvec->parsed()) return cmd_dvec(args);
        if (sc_dtable->parsed()) return cmd_dtable(args);
        if (sc_formula->parsed()) return cmd_formula_d(args);
        if (sc_search2->parsed()) return cmd_search(args, false);
        if (sc_search3->parsed()) return cmd_search(args, true);
        if (sc_build->parsed()) return cmd_build(args, unit_rows, block_parity);
        if (sc_extend->parsed()) return cmd_extend(args, unit_rows, block_parity);
        if (sc_verify->parsed()) return cmd_verify(args, human);
        if (sc_repro->parsed()) return cmd_reproduce(target, args.threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
