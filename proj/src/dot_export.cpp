#include "whitney/dot_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace whitney {

namespace {

std::string quote(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir = BT;\n";
    out << "  node [shape = circle];\n";
    for (const auto& name : p.elements()) {
        out << "  " << quote(name) << ";\n";
    }
    for (const auto& [lo, hi] : p.covers()) {
        out << "  " << quote(p.element_name(lo)) << " -> " << quote(p.element_name(hi)) << ";\n";
    }
    std::map<int, std::vector<int>> by_height;
    auto h = p.heights();
    for (std::size_t i = 0; i < h.size(); ++i) by_height[h[i]].push_back(static_cast<int>(i));
    for (const auto& [height, members] : by_height) {
        out << "  { rank = same;";
        for (int i : members) out << " " << quote(p.element_name(i)) << ";";
        out << " }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace whitney
