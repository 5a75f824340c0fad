#pragma once

#include "whitney/bigint.hpp"
#include "whitney/ideals.hpp"

#include <cstddef>
#include <vector>

namespace whitney {

/// Rank polynomial of an ideal lattice: coefficient k counts the ideals of
/// cardinality k. Plain exact coefficient algebra; trailing zeros trimmed.
class RankPolynomial {
  public:
    RankPolynomial() = default;  // the zero polynomial
    explicit RankPolynomial(std::vector<BigNat> coeffs);

    static RankPolynomial one();
    static RankPolynomial from_table(const WhitneyTable& table);

    const std::vector<BigNat>& coeffs() const { return coeffs_; }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    BigNat coeff(std::size_t k) const;
    BigNat value_at_one() const;

    RankPolynomial shifted(unsigned s) const;  // multiply by X^s

    friend RankPolynomial operator+(const RankPolynomial& a, const RankPolynomial& b);
    friend RankPolynomial operator*(const RankPolynomial& a, const RankPolynomial& b);
    bool operator==(const RankPolynomial&) const = default;

  private:
    std::vector<BigNat> coeffs_;
};

/// Rank polynomial of the star composition, from the component polynomials:
/// R = R1 * R2 + X^3 * R1_del * R2_del, where the deleted polynomials belong
/// to the posets with their attachment elements removed.
RankPolynomial star_rank_polynomial(const RankPolynomial& r1, const RankPolynomial& r1_del,
                                    const RankPolynomial& r2, const RankPolynomial& r2_del);

/// 1 + X + ... + X^length: a chain's ideals are its prefixes.
RankPolynomial chain_rank_polynomial(unsigned length);

RankPolynomial fence_rank_polynomial(unsigned n);
RankPolynomial ap_rank_polynomial(unsigned mu, unsigned nu);

/// Rank polynomial of fap(w,x,y,z), assembled from closed-form component
/// polynomials by two star compositions: fence(w-2) * AP(x+1,y+1) * fence(z-2),
/// with the deleted variants supplied by the structural identities
/// fence(n) minus an end element = fence(n-1) and AP minus a chain bottom =
/// the smaller AP (or a chain when the deleted chain is exhausted).
RankPolynomial fap_rank_polynomial(unsigned w, unsigned x, unsigned y, unsigned z);

}  // namespace whitney
