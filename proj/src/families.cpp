#include "whitney/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace whitney {

namespace {

using CoverNames = std::vector<std::pair<std::string, std::string>>;

void append_fence_covers(CoverNames& covers, const std::string& prefix, unsigned n) {
    for (unsigned j = 1; 2 * j <= n; ++j) {
        covers.emplace_back(prefix + std::to_string(2 * j - 1), prefix + std::to_string(2 * j));
        if (2 * j + 1 <= n) {
            covers.emplace_back(prefix + std::to_string(2 * j + 1), prefix + std::to_string(2 * j));
        }
    }
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Fence>) return "fence";
            else if constexpr (std::is_same_v<T, Crown>) return "crown";
            else if constexpr (std::is_same_v<T, AsymmetricPeak>) return "ap";
            else return "fap";
        },
        spec);
}

std::string describe(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Fence>) {
                return "fence(" + std::to_string(s.n) + ")";
            } else if constexpr (std::is_same_v<T, Crown>) {
                return "crown(" + std::to_string(s.n) + ")";
            } else if constexpr (std::is_same_v<T, AsymmetricPeak>) {
                return "ap(" + std::to_string(s.mu) + "," + std::to_string(s.nu) + ")";
            } else {
                return "fap(" + std::to_string(s.w) + "," + std::to_string(s.x) + "," +
                       std::to_string(s.y) + "," + std::to_string(s.z) + ")";
            }
        },
        spec);
}

Poset fence(unsigned n) {
    std::vector<std::string> elements;
    elements.reserve(n);
    for (unsigned i = 1; i <= n; ++i) elements.push_back("z" + std::to_string(i));
    CoverNames covers;
    append_fence_covers(covers, "z", n);
    return Poset::from_covers(std::move(elements), covers);
}

Poset crown(unsigned n) {
    if (n < 2) throw std::invalid_argument("crown requires n >= 2");
    std::vector<std::string> elements;
    elements.reserve(2 * n);
    for (unsigned i = 0; i < 2 * n; ++i) elements.push_back("zeta" + std::to_string(i));
    CoverNames covers;
    for (unsigned h = 0; h < n; ++h) {
        covers.emplace_back(elements[2 * h], elements[(2 * h + 1) % (2 * n)]);
        covers.emplace_back(elements[2 * h], elements[(2 * h + 2 * n - 1) % (2 * n)]);
    }
    return Poset::from_covers(std::move(elements), covers);
}

Poset asymmetric_peak(unsigned mu, unsigned nu) {
    if (mu < 1 || nu < 1) throw std::invalid_argument("asymmetric peak requires mu, nu >= 1");
    std::vector<std::string> elements;
    for (unsigned i = 1; i <= mu; ++i) elements.push_back("a" + std::to_string(i));
    for (unsigned i = 1; i <= nu; ++i) elements.push_back("b" + std::to_string(i));
    elements.push_back("omega");
    CoverNames covers;
    for (unsigned i = 1; i < mu; ++i) {
        covers.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
    }
    for (unsigned i = 1; i < nu; ++i) {
        covers.emplace_back("b" + std::to_string(i), "b" + std::to_string(i + 1));
    }
    covers.emplace_back("a" + std::to_string(mu), "omega");
    covers.emplace_back("b" + std::to_string(nu), "omega");
    return Poset::from_covers(std::move(elements), covers);
}

Poset star_compose(const Poset& p1, const std::string& x1, const Poset& p2, const std::string& x2) {
    int i1 = p1.index_of(x1);
    if (i1 < 0) throw PosetError("attachment element not in first poset: " + x1);
    if (!p1.is_minimal(i1)) throw PosetError("attachment element is not minimal: " + x1);
    int i2 = p2.index_of(x2);
    if (i2 < 0) throw PosetError("attachment element not in second poset: " + x2);
    if (!p2.is_minimal(i2)) throw PosetError("attachment element is not minimal: " + x2);

    std::unordered_set<std::string> left(p1.elements().begin(), p1.elements().end());
    bool disjoint = std::none_of(p2.elements().begin(), p2.elements().end(),
                                 [&](const std::string& e) { return left.count(e) > 0; });
    std::string pre1 = disjoint ? "" : "1:";
    std::string pre2 = disjoint ? "" : "2:";

    std::vector<std::string> elements;
    elements.reserve(p1.size() + p2.size() + 1);
    for (const auto& e : p1.elements()) elements.push_back(pre1 + e);
    for (const auto& e : p2.elements()) elements.push_back(pre2 + e);
    std::string fresh = "x~";
    std::unordered_set<std::string> taken(elements.begin(), elements.end());
    while (taken.count(fresh) > 0) fresh += "~";
    elements.push_back(fresh);

    CoverNames covers;
    for (const auto& [lo, hi] : p1.covers()) {
        covers.emplace_back(pre1 + p1.element_name(lo), pre1 + p1.element_name(hi));
    }
    for (const auto& [lo, hi] : p2.covers()) {
        covers.emplace_back(pre2 + p2.element_name(lo), pre2 + p2.element_name(hi));
    }
    covers.emplace_back(pre1 + x1, fresh);
    covers.emplace_back(pre2 + x2, fresh);
    return Poset::from_covers(std::move(elements), covers);
}

Poset fap(unsigned w, unsigned x, unsigned y, unsigned z) {
    if (w < 3 || w % 2 == 0) throw std::invalid_argument("fap requires w odd and >= 3");
    if (z < 3 || z % 2 == 0) throw std::invalid_argument("fap requires z odd and >= 3");
    if (x < 1 || y < 1) throw std::invalid_argument("fap requires x, y >= 1");

    std::vector<std::string> elements;
    for (unsigned i = 1; i <= w; ++i) elements.push_back("a" + std::to_string(i));
    for (unsigned i = 1; i <= x; ++i) elements.push_back("b" + std::to_string(i));
    elements.push_back("omega");
    for (unsigned i = 1; i <= y; ++i) elements.push_back("c" + std::to_string(i));
    for (unsigned i = 1; i <= z; ++i) elements.push_back("d" + std::to_string(i));

    CoverNames covers;
    append_fence_covers(covers, "a", w);
    covers.emplace_back("a" + std::to_string(w), "b1");
    for (unsigned i = 1; i < x; ++i) {
        covers.emplace_back("b" + std::to_string(i), "b" + std::to_string(i + 1));
    }
    for (unsigned i = 1; i < y; ++i) {
        covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    }
    covers.emplace_back("b" + std::to_string(x), "omega");
    covers.emplace_back("c" + std::to_string(y), "omega");
    covers.emplace_back("d1", "c1");
    append_fence_covers(covers, "d", z);
    return Poset::from_covers(std::move(elements), covers);
}

Poset build_poset(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Poset {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Fence>) return fence(s.n);
            else if constexpr (std::is_same_v<T, Crown>) return crown(s.n);
            else if constexpr (std::is_same_v<T, AsymmetricPeak>) return asymmetric_peak(s.mu, s.nu);
            else return fap(s.w, s.x, s.y, s.z);
        },
        spec);
}

}  // namespace whitney
