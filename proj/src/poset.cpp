#include "whitney/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace whitney {

namespace {

// Reachability along directed edges adj, as a dense matrix.
std::vector<std::vector<bool>> reachability(std::size_t n, const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> stack = adj[s];
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (reach[s][static_cast<std::size_t>(v)]) continue;
            reach[s][static_cast<std::size_t>(v)] = true;
            for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
        }
    }
    return reach;
}

// Finds a directed cycle and renders it as "a -> b -> ... -> a", or returns
// an empty string when the graph is acyclic.
std::string find_cycle(std::size_t n, const std::vector<std::vector<int>>& adj,
                       const std::vector<std::string>& names) {
    enum { White, Grey, Black };
    std::vector<int> color(n, White);
    std::vector<int> parent(n, -1);

    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != White) continue;
        // iterative DFS keeping an explicit path
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[static_cast<std::size_t>(v)].size()) {
                int w = adj[static_cast<std::size_t>(v)][next++];
                if (color[w] == Grey) {
                    std::vector<int> path;
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        path.push_back(it->first);
                        if (it->first == w) break;
                    }
                    std::reverse(path.begin(), path.end());
                    std::string out;
                    for (int u : path) out += names[static_cast<std::size_t>(u)] + " -> ";
                    return out + names[static_cast<std::size_t>(w)];
                }
                if (color[w] == White) {
                    color[w] = Grey;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p;
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], static_cast<int>(i)).second) {
            throw PosetError("duplicate element identifier: " + elements[i]);
        }
    }
    p.elements_ = std::move(elements);
    const std::size_t n = p.elements_.size();

    std::vector<std::vector<int>> up(n);
    std::vector<Cover> raw;
    for (const auto& [lo, hi] : covers) {
        auto it_lo = index.find(lo);
        auto it_hi = index.find(hi);
        if (it_lo == index.end()) throw PosetError("unknown element in covers: " + lo);
        if (it_hi == index.end()) throw PosetError("unknown element in covers: " + hi);
        if (it_lo->second == it_hi->second) {
            throw PosetError("cover relation contains a cycle: " + lo + " -> " + hi);
        }
        Cover c{it_lo->second, it_hi->second};
        if (std::find(raw.begin(), raw.end(), c) == raw.end()) {
            raw.push_back(c);
            up[static_cast<std::size_t>(c.first)].push_back(c.second);
        }
    }

    if (std::string cycle = find_cycle(n, up, p.elements_); !cycle.empty()) {
        throw PosetError("cover relation contains a cycle: " + cycle);
    }

    // Transitive reduction: drop any pair implied through an intermediate.
    auto reach = reachability(n, up);
    p.lower_covers_.assign(n, {});
    p.upper_covers_.assign(n, {});
    for (const auto& [lo, hi] : raw) {
        bool redundant = false;
        for (int mid : up[static_cast<std::size_t>(lo)]) {
            if (mid != hi && reach[static_cast<std::size_t>(mid)][static_cast<std::size_t>(hi)]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            p.covers_.emplace_back(lo, hi);
            p.lower_covers_[static_cast<std::size_t>(hi)].push_back(lo);
            p.upper_covers_[static_cast<std::size_t>(lo)].push_back(hi);
        }
    }
    return p;
}

int Poset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::vector<std::vector<bool>> Poset::closure() const {
    std::vector<std::vector<int>> up(size());
    for (const auto& [lo, hi] : covers_) up[static_cast<std::size_t>(lo)].push_back(hi);
    return reachability(size(), up);
}

bool Poset::less(int lower, int upper) const {
    auto reach = closure();
    return reach[static_cast<std::size_t>(lower)][static_cast<std::size_t>(upper)];
}

bool Poset::is_minimal(int i) const { return lower_covers_[static_cast<std::size_t>(i)].empty(); }

std::vector<int> Poset::minimal_element_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (lower_covers_[i].empty()) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<std::string> Poset::minimal_elements() const {
    std::vector<std::string> out;
    for (int i : minimal_element_indices()) out.push_back(elements_[static_cast<std::size_t>(i)]);
    return out;
}

Poset Poset::induced(const std::vector<int>& keep) const {
    auto reach = closure();
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    std::vector<std::string> names;
    names.reserve(kept.size());
    for (int i : kept) names.push_back(elements_.at(static_cast<std::size_t>(i)));

    // Covers of the restricted order: a < b with no kept c in between.
    std::vector<std::pair<std::string, std::string>> covers;
    for (int a : kept) {
        for (int b : kept) {
            if (!reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            bool direct = true;
            for (int c : kept) {
                if (c == a || c == b) continue;
                if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) {
                    direct = false;
                    break;
                }
            }
            if (direct) {
                covers.emplace_back(elements_[static_cast<std::size_t>(a)],
                                    elements_[static_cast<std::size_t>(b)]);
            }
        }
    }
    return from_covers(std::move(names), covers);
}

Poset Poset::delete_element(const std::string& name) const {
    int x = index_of(name);
    if (x < 0) throw PosetError("element not in poset: " + name);
    std::vector<int> keep;
    for (std::size_t i = 0; i < size(); ++i) {
        if (static_cast<int>(i) != x) keep.push_back(static_cast<int>(i));
    }
    return induced(keep);
}

std::vector<int> Poset::heights() const {
    std::vector<int> h(size(), 0);
    // covers_ is acyclic; iterate to a fixed point (small posets, fine)
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lo, hi] : covers_) {
            int want = h[static_cast<std::size_t>(lo)] + 1;
            if (h[static_cast<std::size_t>(hi)] < want) {
                h[static_cast<std::size_t>(hi)] = want;
                changed = true;
            }
        }
    }
    return h;
}

}  // namespace whitney
