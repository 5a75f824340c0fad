#include "whitney/ideals.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

namespace whitney {

void for_each_ideal(const Poset& p, const std::function<void(IdealBits)>& visit,
                    const OracleLimits& limits) {
    const std::size_t n = p.size();
    if (n > 64) {
        throw OracleBoundExceeded("ideal enumeration supports at most 64 elements, poset has " +
                                  std::to_string(n));
    }
    if (n > limits.max_elements) {
        throw OracleBoundExceeded("poset has " + std::to_string(n) +
                                  " elements, above the enumeration bound of " +
                                  std::to_string(limits.max_elements));
    }

    std::vector<IdealBits> pred(n, 0);
    for (const auto& [lo, hi] : p.covers()) {
        pred[static_cast<std::size_t>(hi)] |= IdealBits{1} << lo;
    }

    // Breadth-first walk of the ideal lattice: extend each ideal by one
    // element whose lower covers are already inside. Output-sensitive.
    std::unordered_set<IdealBits> seen{0};
    std::deque<IdealBits> queue{0};
    while (!queue.empty()) {
        IdealBits ideal = queue.front();
        queue.pop_front();
        visit(ideal);
        for (std::size_t i = 0; i < n; ++i) {
            IdealBits bit = IdealBits{1} << i;
            if ((ideal & bit) != 0 || (pred[i] & ~ideal) != 0) continue;
            IdealBits grown = ideal | bit;
            if (seen.insert(grown).second) {
                if (seen.size() > limits.max_ideals) {
                    throw OracleBoundExceeded("ideal count exceeds the enumeration bound of " +
                                              std::to_string(limits.max_ideals));
                }
                queue.push_back(grown);
            }
        }
    }
}

std::vector<IdealBits> enumerate_ideals(const Poset& p, const OracleLimits& limits) {
    std::vector<IdealBits> out;
    for_each_ideal(p, [&](IdealBits ideal) { out.push_back(ideal); }, limits);
    return out;
}

WhitneyTable whitney_oracle(const Poset& p, const OracleLimits& limits) {
    WhitneyTable table;
    table.counts.assign(p.size() + 1, 0);
    table.source = "oracle";
    for_each_ideal(p, [&](IdealBits ideal) {
        table.counts[static_cast<std::size_t>(std::popcount(ideal))] += 1;
    }, limits);
    return table;
}

}  // namespace whitney
