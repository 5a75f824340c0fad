#include "whitney/rank_polynomial.hpp"

#include "whitney/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace whitney {

RankPolynomial::RankPolynomial(std::vector<BigNat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RankPolynomial RankPolynomial::one() { return RankPolynomial({BigNat(1)}); }

RankPolynomial RankPolynomial::from_table(const WhitneyTable& table) {
    return RankPolynomial(table.counts);
}

BigNat RankPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigNat(0);
}

BigNat RankPolynomial::value_at_one() const {
    BigNat sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

RankPolynomial RankPolynomial::shifted(unsigned s) const {
    if (coeffs_.empty()) return {};
    std::vector<BigNat> out(coeffs_.size() + s);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + s] = coeffs_[i];
    return RankPolynomial(std::move(out));
}

RankPolynomial operator+(const RankPolynomial& a, const RankPolynomial& b) {
    std::vector<BigNat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return RankPolynomial(std::move(out));
}

RankPolynomial operator*(const RankPolynomial& a, const RankPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigNat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RankPolynomial(std::move(out));
}

RankPolynomial star_rank_polynomial(const RankPolynomial& r1, const RankPolynomial& r1_del,
                                    const RankPolynomial& r2, const RankPolynomial& r2_del) {
    return r1 * r2 + (r1_del * r2_del).shifted(3);
}

RankPolynomial chain_rank_polynomial(unsigned length) {
    return RankPolynomial(std::vector<BigNat>(length + 1, BigNat(1)));
}

RankPolynomial fence_rank_polynomial(unsigned n) {
    return RankPolynomial::from_table(fence_whitney_table(n));
}

RankPolynomial ap_rank_polynomial(unsigned mu, unsigned nu) {
    return RankPolynomial::from_table(ap_whitney_table(mu, nu));
}

namespace {

// AP_{mu,nu} with the bottom of its mu-chain removed: the smaller peak for
// mu >= 2, otherwise the remaining nu-chain plus top, a chain of nu+1.
RankPolynomial ap_minus_chain_bottom(unsigned mu, unsigned nu) {
    return mu >= 2 ? ap_rank_polynomial(mu - 1, nu) : chain_rank_polynomial(nu + 1);
}

}  // namespace

RankPolynomial fap_rank_polynomial(unsigned w, unsigned x, unsigned y, unsigned z) {
    if (w < 3 || w % 2 == 0) throw std::invalid_argument("fap requires w odd and >= 3");
    if (z < 3 || z % 2 == 0) throw std::invalid_argument("fap requires z odd and >= 3");
    if (x < 1 || y < 1) throw std::invalid_argument("fap requires x, y >= 1");

    const RankPolynomial p1 = fence_rank_polynomial(w - 2);
    const RankPolynomial p1_del = fence_rank_polynomial(w - 3);
    const RankPolynomial p3 = fence_rank_polynomial(z - 2);
    const RankPolynomial p3_del = fence_rank_polynomial(z - 3);

    // Q = fence(w-2) star AP(x+1,y+1), glued at the fence end and the bottom
    // of the (x+1)-chain; the fresh element plays a_{w-1}.
    const RankPolynomial q = star_rank_polynomial(
        p1, p1_del, ap_rank_polynomial(x + 1, y + 1), ap_minus_chain_bottom(x + 1, y + 1));

    // Q minus the bottom of the (y+1)-chain recomposes as
    // fence(w-2) star AP(x+1,y), with deletions AP(x,y).
    const RankPolynomial q_del = star_rank_polynomial(
        p1, p1_del, ap_rank_polynomial(x + 1, y), ap_rank_polynomial(x, y));

    // Second composition glues fence(z-2); the fresh element plays d_2.
    return star_rank_polynomial(q, q_del, p3, p3_del);
}

}  // namespace whitney
