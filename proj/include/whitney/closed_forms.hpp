#pragma once

#include "whitney/bigint.hpp"
#include "whitney/ideals.hpp"

#include <vector>

namespace whitney {

/// Two independent evaluation routes for the fence Whitney numbers.
/// binomial_sum is the double sum over block decompositions (j, r);
/// hypergeometric_closed is the single sum over j obtained from it by
/// Chu-Vandermonde summation. They must agree everywhere.
enum class FormulaVariant {
    binomial_sum,
    hypergeometric_closed,
};

/// f_{2v+1,k}: Whitney numbers of the ideal lattice of an odd fence.
/// Returns 0 for k outside [0, 2v+1].
BigNat fence_whitney_odd(unsigned v, long long k,
                         FormulaVariant variant = FormulaVariant::hypergeometric_closed);

/// f_{2v,k}: Whitney numbers of the ideal lattice of an even fence.
/// Returns 0 for k outside [0, 2v].
BigNat fence_whitney_even(unsigned v, long long k,
                          FormulaVariant variant = FormulaVariant::hypergeometric_closed);

/// f_{n,k} parity dispatcher; 0 for n < 0 or k outside [0, n].
BigNat fence_whitney(long long n, long long k,
                     FormulaVariant variant = FormulaVariant::hypergeometric_closed);

/// A(2v+1,k,j): number of k-element ideals of the odd fence Z_{2v+1} that
/// contain exactly j rank-1 elements. Summing over j gives f_{2v+1,k}.
BigNat fence_peak_class_count(unsigned v, long long k, long long j);

/// c_{n,k}: crown Whitney numbers via the normative fence identity
/// c_{n,k} = f_{2n,k} - f_{2n-4,k-2}. Requires n >= 2; 0 outside [0, 2n].
BigNat crown_whitney(unsigned n, long long k);

/// Experimental direct evaluation of the crown closed-form sum, using the
/// extension (a)_{-m} = 1/((a-m)...(a-1)) for the negative rising-factorial
/// indices the formula hits at small j, and dropping terms whose extended
/// denominator contains a zero factor. Known to disagree with crown_whitney
/// on boundary cells (it can even go negative); crown_whitney is
/// authoritative, and crown_closed_disagreements reports the mismatch set.
BigInt crown_whitney_closed(unsigned n, long long k);

struct CrownClosedCell {
    unsigned n = 0;
    long long k = 0;
    BigInt experimental;
    BigNat normative;
};

/// All cells with crown_whitney_closed(n,k) != crown_whitney(n,k) for
/// 2 <= n <= n_max, 0 <= k <= 2n.
std::vector<CrownClosedCell> crown_closed_disagreements(unsigned n_max);

/// Whitney numbers of the asymmetric peak AP_{mu,nu} (trapezoid shape).
/// Requires mu, nu >= 1; 0 outside [0, mu+nu+1].
BigNat ap_whitney(unsigned mu, unsigned nu, long long k);

WhitneyTable fence_whitney_table(unsigned n,
                                 FormulaVariant variant = FormulaVariant::hypergeometric_closed);
WhitneyTable crown_whitney_table(unsigned n);
WhitneyTable ap_whitney_table(unsigned mu, unsigned nu);

}  // namespace whitney
