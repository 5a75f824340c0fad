#include "whitney/json_io.hpp"

#include <fstream>

namespace whitney {

using nlohmann::json;

json poset_to_json(const Poset& p) {
    json covers = json::array();
    for (const auto& [lo, hi] : p.covers()) {
        covers.push_back(json::array({p.element_name(lo), p.element_name(hi)}));
    }
    return json{{"elements", p.elements()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers")) {
        throw PosetError("poset JSON must be an object with \"elements\" and \"covers\"");
    }
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw PosetError("poset elements must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
            throw PosetError("poset covers must be [lower, upper] string pairs");
        }
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Poset::from_covers(std::move(elements), covers);
}

Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PosetError("cannot open poset file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw PosetError("cannot parse poset file " + path + ": " + e.what());
    }
    return poset_from_json(j);
}

json family_to_json(const FamilySpec& spec) {
    json j{{"family", family_name(spec)}};
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Fence> || std::is_same_v<T, Crown>) {
                j["n"] = s.n;
            } else if constexpr (std::is_same_v<T, AsymmetricPeak>) {
                j["mu"] = s.mu;
                j["nu"] = s.nu;
            } else {
                j["w"] = s.w;
                j["x"] = s.x;
                j["y"] = s.y;
                j["z"] = s.z;
            }
        },
        spec);
    return j;
}

json table_to_json(const FamilySpec& spec, const WhitneyTable& table, const std::string& path_label) {
    json j = family_to_json(spec);
    j["counts"] = to_decimal(table.counts);
    j["path"] = path_label;
    return j;
}

json table_to_json(const std::string& source, const WhitneyTable& table, const std::string& path_label) {
    return json{{"source", source}, {"counts", to_decimal(table.counts)}, {"path", path_label}};
}

json polynomial_to_json(const FamilySpec& spec, const RankPolynomial& poly) {
    json j = family_to_json(spec);
    j["coeffs"] = to_decimal(poly.coeffs());
    return j;
}

json report_to_json(const ConjectureReport& report) {
    json j = family_to_json(report.instance);
    j["unimodal"] = report.unimodal;
    j["log_concave"] = report.log_concave;
    j["strictly_log_concave"] = report.strictly_log_concave;
    if (report.first_violation) {
        const auto& v = *report.first_violation;
        j["first_violation"] = json{{"kind", v.kind},
                                    {"k", v.index},
                                    {"triple", json::array({to_decimal(v.triple[0]),
                                                            to_decimal(v.triple[1]),
                                                            to_decimal(v.triple[2])})}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

}  // namespace whitney
