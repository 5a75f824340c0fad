#pragma once

#include "whitney/bigint.hpp"

namespace whitney {

/// C(a,b) with out-of-range arguments mapped to 0: b < 0, b > a, or a < 0
/// all yield 0. This single guard is what truncates every formula sum in
/// the closed-form module.
BigNat binomial_guarded(long long a, long long b);

/// m! for m >= 0.
BigNat factorial(unsigned long m);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
BigInt rising_factorial(long long a, unsigned long m);

/// 1/m! for m >= 0; exactly 0 for m < 0. Multiplying a term by this is the
/// truncation convention for sums written with unbounded upper limits.
Rational reciprocal_factorial_term(long long m);

enum class CompositionVariant {
    positive,  // k-tuples of positive integers summing to n
    weak,      // k-tuples of non-negative integers summing to n
    bounded,   // k-tuples of non-negative integers with sum <= n
};

/// Number of k-tuples per the variant: C(n-1,k-1), C(n+k-1,k-1), C(n+k,k).
BigNat composition_count(long long n, long long k, CompositionVariant variant);

}  // namespace whitney
