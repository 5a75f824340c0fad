#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace whitney {

// Exact arbitrary-precision arithmetic, backed by GMP.
// BigNat is used where values are counts (>= 0 by construction); the
// distinction is documentation, not a separate type.
using BigNat = mpz_class;
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline std::vector<std::string> to_decimal(const std::vector<BigNat>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

}  // namespace whitney
