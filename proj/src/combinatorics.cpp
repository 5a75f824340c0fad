#include "whitney/combinatorics.hpp"

#include <vector>

namespace whitney {

namespace {

// Pascal rows grown on demand. Only the left half of each row is stored
// (symmetry). thread_local keeps the functions safe to call concurrently.
class PascalCache {
  public:
    const mpz_class& at(long long a, long long b) {
        if (b > a - b) b = a - b;
        while (static_cast<long long>(rows_.size()) <= a) grow_row();
        return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

  private:
    void grow_row() {
        const std::size_t a = rows_.size();
        std::vector<mpz_class> row(a / 2 + 1);
        row[0] = 1;
        for (std::size_t b = 1; b < row.size(); ++b) {
            row[b] = prev(a - 1, b - 1) + prev(a - 1, b);
        }
        rows_.push_back(std::move(row));
    }

    const mpz_class& prev(std::size_t a, std::size_t b) const {
        if (b > a - b) b = a - b;
        return rows_[a][b];
    }

    std::vector<std::vector<mpz_class>> rows_;
};

constexpr long long kPascalCacheLimit = 4096;

}  // namespace

BigNat binomial_guarded(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (a <= kPascalCacheLimit) {
        thread_local PascalCache cache;
        return cache.at(a, b);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigNat factorial(unsigned long m) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

BigInt rising_factorial(long long a, unsigned long m) {
    mpz_class r = 1;
    for (unsigned long j = 0; j < m; ++j) {
        r *= static_cast<long>(a + static_cast<long long>(j));
        if (r == 0) break;
    }
    return r;
}

Rational reciprocal_factorial_term(long long m) {
    if (m < 0) return Rational(0);
    Rational r(1, factorial(static_cast<unsigned long>(m)));
    r.canonicalize();
    return r;
}

BigNat composition_count(long long n, long long k, CompositionVariant variant) {
    switch (variant) {
        case CompositionVariant::positive: return binomial_guarded(n - 1, k - 1);
        case CompositionVariant::weak: return binomial_guarded(n + k - 1, k - 1);
        case CompositionVariant::bounded: return binomial_guarded(n + k, k);
    }
    return 0;
}

}  // namespace whitney
