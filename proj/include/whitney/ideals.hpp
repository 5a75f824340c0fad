#pragma once

#include "whitney/bigint.hpp"
#include "whitney/poset.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace whitney {

/// Raised when an enumeration would exceed the configured bounds.
class OracleBoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    std::size_t max_elements = 30;
    std::size_t max_ideals = 5'000'000;
};

/// An order ideal is reported as a bitmask over element indices.
using IdealBits = std::uint64_t;

struct WhitneyTable {
    std::vector<BigNat> counts;  // indexed by ideal cardinality, 0..|P|
    std::string source;          // family description or "oracle"

    BigNat total() const {
        BigNat t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
    bool operator==(const WhitneyTable& other) const { return counts == other.counts; }
};

/// Visits every order ideal of the poset exactly once (including the empty
/// ideal and the full poset), in breadth-first order from the empty ideal.
/// Refuses posets over 64 elements or outside the given limits.
void for_each_ideal(const Poset& p, const std::function<void(IdealBits)>& visit,
                    const OracleLimits& limits = {});

std::vector<IdealBits> enumerate_ideals(const Poset& p, const OracleLimits& limits = {});

/// Whitney numbers of the lattice of order ideals, counted by brute-force
/// enumeration: counts[k] = number of ideals of cardinality k.
WhitneyTable whitney_oracle(const Poset& p, const OracleLimits& limits = {});

}  // namespace whitney
