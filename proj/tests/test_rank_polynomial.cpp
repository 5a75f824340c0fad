#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "whitney/closed_forms.hpp"
#include "whitney/families.hpp"
#include "whitney/ideals.hpp"
#include "whitney/rank_polynomial.hpp"

#include <random>

using namespace whitney;
using testutil::nat_vec;

namespace {

RankPolynomial oracle_poly(const Poset& p) {
    return RankPolynomial::from_table(whitney_oracle(p));
}

}  // namespace

TEST_CASE("polynomial algebra") {
    RankPolynomial x_plus_1(nat_vec({1, 1}));
    CHECK((x_plus_1 * x_plus_1).coeffs() == nat_vec({1, 2, 1}));
    CHECK(x_plus_1.shifted(3).coeffs() == nat_vec({0, 0, 0, 1, 1}));
    CHECK((x_plus_1 * RankPolynomial::one()) == x_plus_1);
    CHECK((x_plus_1 + RankPolynomial()).coeffs() == x_plus_1.coeffs());
    CHECK(RankPolynomial(nat_vec({1, 2, 0, 0})).degree() == 1);  // trailing zeros trimmed
    CHECK(RankPolynomial().degree() == -1);
    CHECK(RankPolynomial(nat_vec({1, 2, 1})).coeff(5) == 0);

    CHECK(RankPolynomial::from_table(whitney_oracle(fence(3))).coeffs() == nat_vec({1, 2, 1, 1}));
    CHECK(RankPolynomial::from_table(WhitneyTable{nat_vec({1}), ""}).degree() == 0);
    CHECK(fence_rank_polynomial(5).degree() == 5);
    CHECK(fence_rank_polynomial(5).value_at_one() == 13);
}

TEST_CASE("chain rank polynomial matches a chain's ideal lattice") {
    CHECK(chain_rank_polynomial(0).coeffs() == nat_vec({1}));
    Poset chain = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain_rank_polynomial(3) == oracle_poly(chain));
}

TEST_CASE("star composition formula on singletons") {
    RankPolynomial point(nat_vec({1, 1}));
    RankPolynomial composed = star_rank_polynomial(point, RankPolynomial::one(), point,
                                                   RankPolynomial::one());
    CHECK(composed.coeffs() == nat_vec({1, 2, 1, 1}));
    CHECK(composed == oracle_poly(asymmetric_peak(1, 1)));
    // the same composition seen as growing a fence: Z_1 * Z_1 = Z_3
    CHECK(composed == fence_rank_polynomial(3));
}

TEST_CASE("star composition formula is the oracle's composition law") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p1 = testutil::random_poset(rng);
        Poset p2 = testutil::random_poset(rng);
        std::string x1 = testutil::pick_minimal(p1, rng);
        std::string x2 = testutil::pick_minimal(p2, rng);

        RankPolynomial expected = oracle_poly(star_compose(p1, x1, p2, x2));
        RankPolynomial composed = star_rank_polynomial(
            oracle_poly(p1), oracle_poly(p1.delete_element(x1)),
            oracle_poly(p2), oracle_poly(p2.delete_element(x2)));
        CHECK(composed == expected);
        CHECK(composed.degree() == oracle_poly(p1).degree() + oracle_poly(p2).degree() + 1);
        CHECK(composed.value_at_one() ==
              oracle_poly(p1).value_at_one() * oracle_poly(p2).value_at_one() +
                  oracle_poly(p1.delete_element(x1)).value_at_one() *
                      oracle_poly(p2.delete_element(x2)).value_at_one());
    }
}

TEST_CASE("fap rank polynomial equals the oracle") {
    CHECK(fap_rank_polynomial(3, 1, 1, 3) == oracle_poly(fap(3, 1, 1, 3)));
    CHECK(fap_rank_polynomial(5, 2, 3, 5) == oracle_poly(fap(5, 2, 3, 5)));
    CHECK(fap_rank_polynomial(3, 1, 2, 5) == oracle_poly(fap(3, 1, 2, 5)));
    CHECK(fap_rank_polynomial(7, 10, 6, 7).degree() == 31);
    CHECK_THROWS_AS(fap_rank_polynomial(4, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(fap_rank_polynomial(3, 0, 1, 3), std::invalid_argument);

    SUBCASE("the 31-element instance, with the element bound raised") {
        OracleLimits limits{.max_elements = 31, .max_ideals = 100'000};
        RankPolynomial big = fap_rank_polynomial(7, 10, 6, 7);
        CHECK(big == RankPolynomial::from_table(whitney_oracle(fap(7, 10, 6, 7), limits)));
        CHECK(big.value_at_one() == 39481);
    }
}

TEST_CASE("fap composition is association-order independent") {
    for (unsigned w : {3u, 5u}) {
        for (unsigned z : {3u, 5u}) {
            for (unsigned x = 1; x <= 3; ++x) {
                for (unsigned y = 1; y <= 3; ++y) {
                    // compose the peak with the trailing fence first
                    RankPolynomial s = star_rank_polynomial(
                        ap_rank_polynomial(x + 1, y + 1), ap_rank_polynomial(x + 1, y),
                        fence_rank_polynomial(z - 2), fence_rank_polynomial(z - 3));
                    RankPolynomial s_del = star_rank_polynomial(
                        ap_rank_polynomial(x, y + 1), ap_rank_polynomial(x, y),
                        fence_rank_polynomial(z - 2), fence_rank_polynomial(z - 3));
                    RankPolynomial other_order = star_rank_polynomial(
                        fence_rank_polynomial(w - 2), fence_rank_polynomial(w - 3), s, s_del);
                    CHECK(other_order == fap_rank_polynomial(w, x, y, z));
                }
            }
        }
    }
}
