#include "whitney/closed_forms.hpp"

#include "whitney/combinatorics.hpp"
#include "whitney/families.hpp"

#include <stdexcept>

namespace whitney {

namespace {

// Hypergeometric-form terms, with every rising factorial rewritten as a
// ratio of factorials and regrouped into guarded binomials:
//
//   odd:  (k-2j+1)_{j-1} (v+j-k+2)_{k-2j} / (j! (k-2j-1)!)
//             = C(k-j-1, j) C(v-j+1, k-2j)
//   even: (k-2j+1)_j (v+j-k+1)_{k-2j} / (j! (k-2j)!)
//             = C(k-j, j) C(v-j, k-2j)
//
// The binomial guards reproduce the truncation conventions exactly: the
// reciprocal factorial of a negative integer kills the first factor, and a
// rising factorial whose base has dropped to <= 0 straddles zero (its last
// factor stays >= 0 in range), which the second guard returns as 0. The
// unit tests pin this against the literal rational evaluation.
BigNat odd_term(unsigned v, long long k, long long j) {
    return binomial_guarded(k - j - 1, j) *
           binomial_guarded(static_cast<long long>(v) - j + 1, k - 2 * j);
}

BigNat even_term(unsigned v, long long k, long long j) {
    return binomial_guarded(k - j, j) *
           binomial_guarded(static_cast<long long>(v) - j, k - 2 * j);
}

// Extended rising factorial for the experimental crown formula. For m < 0
// the value is rational, 1/((a-|m|)...(a-1)); a zero factor there makes the
// whole term undefined and it is dropped.
bool extended_rising(long long a, long long m, Rational& out) {
    if (m >= 0) {
        out = Rational(rising_factorial(a, static_cast<unsigned long>(m)));
        return true;
    }
    BigInt den = 1;
    for (long long i = 1; i <= -m; ++i) den *= static_cast<long>(a - i);
    if (den == 0) return false;
    out = Rational(1) / Rational(den);
    return true;
}

}  // namespace

BigNat fence_whitney_odd(unsigned v, long long k, FormulaVariant variant) {
    const long long n = 2LL * v + 1;
    if (k < 0 || k > n) return 0;
    BigNat sum = binomial_guarded(static_cast<long long>(v) + 1, k);
    if (variant == FormulaVariant::hypergeometric_closed) {
        for (long long j = 1; 2 * j + 1 <= k; ++j) sum += odd_term(v, k, j);
    } else {
        for (long long j = 1; 2 * j + 1 <= k; ++j) {
            for (long long r = 1; r <= j; ++r) {
                sum += binomial_guarded(j - 1, r - 1) *
                       binomial_guarded(static_cast<long long>(v) - j + 1, r) *
                       binomial_guarded(static_cast<long long>(v) + 1 - (j + r), k - (2 * j + r));
            }
        }
    }
    return sum;
}

BigNat fence_whitney_even(unsigned v, long long k, FormulaVariant variant) {
    const long long n = 2LL * v;
    if (k < 0 || k > n) return 0;
    BigNat sum = 0;
    if (variant == FormulaVariant::hypergeometric_closed) {
        for (long long j = 0; 2 * j <= k; ++j) sum += even_term(v, k, j);
    } else {
        for (long long j = 0; 2 * j <= k; ++j) {
            for (long long r = 0; 2 * j + r <= k; ++r) {
                sum += binomial_guarded(j, r) *
                       binomial_guarded(static_cast<long long>(v) - j, r) *
                       binomial_guarded(static_cast<long long>(v) - (j + r), k - (2 * j + r));
            }
        }
    }
    return sum;
}

BigNat fence_whitney(long long n, long long k, FormulaVariant variant) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n % 2 == 1) return fence_whitney_odd(static_cast<unsigned>(n / 2), k, variant);
    return fence_whitney_even(static_cast<unsigned>(n / 2), k, variant);
}

BigNat fence_peak_class_count(unsigned v, long long k, long long j) {
    if (k < 0 || k > 2LL * v + 1 || j < 0) return 0;
    if (j == 0) {
        // ideals with no rank-1 element are subsets of the v+1 minimals
        return binomial_guarded(static_cast<long long>(v) + 1, k);
    }
    BigNat sum = 0;
    for (long long r = 1; r <= j; ++r) {
        sum += binomial_guarded(j - 1, r - 1) *
               binomial_guarded(static_cast<long long>(v) - j + 1, r) *
               binomial_guarded(static_cast<long long>(v) + 1 - (j + r), k - (2 * j + r));
    }
    return sum;
}

BigNat crown_whitney(unsigned n, long long k) {
    if (n < 2) throw std::invalid_argument("crown Whitney numbers require n >= 2");
    if (k < 0 || k > 2LL * n) return 0;
    BigNat value = fence_whitney(2LL * n, k) - fence_whitney(2LL * n - 4, k - 2);
    if (value < 0) throw std::logic_error("crown Whitney evaluation went negative");
    return value;
}

BigInt crown_whitney_closed(unsigned n, long long k) {
    if (n < 2) throw std::invalid_argument("crown Whitney numbers require n >= 2");
    if (k < 0 || k > 2LL * n) return 0;
    const long long nn = n;
    Rational sum(0);
    for (long long j = 0; 2 * j <= k; ++j) {
        Rational r1, r2;
        if (!extended_rising(k - 2 * j + 1, j - 2, r1)) continue;
        if (!extended_rising(nn + j - k + 1, k - 2 * j - 2, r2)) continue;
        BigInt bracket = rising_factorial(k - j - 1, 2) * rising_factorial(nn - j - 1, 2);
        BigInt sq = rising_factorial(k - 2 * j - 1, 2);
        bracket -= sq * sq;
        Rational term = r1 * r2 * Rational(bracket) *
                        reciprocal_factorial_term(j) * reciprocal_factorial_term(k - 2 * j);
        sum += term;
    }
    sum.canonicalize();
    if (sum.get_den() != 1) {
        throw std::logic_error("experimental crown evaluation produced a non-integer at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    }
    return sum.get_num();
}

std::vector<CrownClosedCell> crown_closed_disagreements(unsigned n_max) {
    std::vector<CrownClosedCell> out;
    for (unsigned n = 2; n <= n_max; ++n) {
        for (long long k = 0; k <= 2LL * n; ++k) {
            BigInt experimental = crown_whitney_closed(n, k);
            BigNat normative = crown_whitney(n, k);
            if (experimental != normative) {
                out.push_back({n, k, std::move(experimental), std::move(normative)});
            }
        }
    }
    return out;
}

BigNat ap_whitney(unsigned mu, unsigned nu, long long k) {
    if (mu < 1 || nu < 1) throw std::invalid_argument("asymmetric peak requires mu, nu >= 1");
    const long long top = static_cast<long long>(mu) + nu + 1;
    if (k < 0 || k > top) return 0;
    if (k == 0 || k == top) return 1;
    const long long lo = std::min(mu, nu);
    const long long hi = std::max(mu, nu);
    if (k <= lo) return static_cast<long>(k + 1);
    if (k <= hi) return static_cast<long>(lo + 1);
    return static_cast<long>(1 + static_cast<long long>(mu) + nu - k);
}

WhitneyTable fence_whitney_table(unsigned n, FormulaVariant variant) {
    WhitneyTable t;
    t.source = describe(FamilySpec(Fence{n}));
    t.counts.reserve(n + 1);
    for (long long k = 0; k <= n; ++k) t.counts.push_back(fence_whitney(n, k, variant));
    return t;
}

WhitneyTable crown_whitney_table(unsigned n) {
    WhitneyTable t;
    t.source = describe(FamilySpec(Crown{n}));
    t.counts.reserve(2 * n + 1);
    for (long long k = 0; k <= 2LL * n; ++k) t.counts.push_back(crown_whitney(n, k));
    return t;
}

WhitneyTable ap_whitney_table(unsigned mu, unsigned nu) {
    WhitneyTable t;
    t.source = describe(FamilySpec(AsymmetricPeak{mu, nu}));
    t.counts.reserve(mu + nu + 2);
    for (long long k = 0; k <= static_cast<long long>(mu) + nu + 1; ++k) {
        t.counts.push_back(ap_whitney(mu, nu, k));
    }
    return t;
}

}  // namespace whitney
