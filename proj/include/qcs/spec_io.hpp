#pragma once

#include <fstream>

#include "json.hpp"
#include "qcs/distance.hpp"
#include "qcs/qcmodel.hpp"

namespace qcs {

namespace detail {

template <typename T>
T get_field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) throw error(std::string("spec: missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw error(std::string("spec: invalid field '") + name + "'");
    }
}

}  // namespace detail

inline nlohmann::json spec_to_json(const QcCodeSpec& spec) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : spec.groups)
        groups.push_back({{"k", g.base.k()},
                          {"generator_octal", format_octal(g.base.generator())},
                          {"shifts", g.shifts}});
    nlohmann::json raw = nlohmann::json::array();
    for (const auto& r : spec.raw_rows) raw.push_back(r.bits.to_string01());
    return {{"m", spec.m},
            {"p", spec.p},
            {"groups", groups},
            {"raw_rows", raw},
            {"block_parity", spec.block_parity}};
}

inline QcCodeSpec spec_from_json(const nlohmann::json& j) {
    QcCodeSpec spec;
    spec.m = detail::get_field<int>(j, "m");
    spec.p = detail::get_field<int>(j, "p");
    auto groups = detail::get_field<nlohmann::json>(j, "groups");
    if (!groups.is_array()) throw error("spec: invalid field 'groups'");
    for (const auto& gj : groups) {
        int k = detail::get_field<int>(gj, "k");
        std::string oct = detail::get_field<std::string>(gj, "generator_octal");
        auto shifts = detail::get_field<std::vector<int>>(gj, "shifts");
        SimplexCode base = SimplexCode::from_generator(parse_octal(oct, spec.m), k);
        spec.groups.push_back({std::move(base), std::move(shifts)});
    }
    if (j.contains("raw_rows")) {
        auto raw = detail::get_field<std::vector<std::string>>(j, "raw_rows");
        for (const auto& s : raw) spec.raw_rows.push_back({BitVec::from_string01(s)});
    }
    if (j.contains("block_parity")) spec.block_parity = detail::get_field<bool>(j, "block_parity");
    spec.validate();
    return spec;
}

inline QcCodeSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("spec: JSON parse error: ") + e.what());
    }
    return spec_from_json(j);
}

inline void save_spec_file(const QcCodeSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write spec file: " + path);
    out << spec_to_json(spec).dump(2) << "\n";
}

/// Weight distribution as [weight, count] pairs in ascending weight order, so
/// serialized reports are byte-stable.
inline nlohmann::json report_to_json(const CodeReport& report) {
    nlohmann::json dist = nlohmann::json::array();
    for (const auto& [w, c] : report.weight_distribution) dist.push_back({w, c});
    return {{"n", report.n},
            {"k", report.k},
            {"d_min", report.d_min},
            {"codeword_count", report.codeword_count},
            {"weight_distribution", dist}};
}

}  // namespace qcs
