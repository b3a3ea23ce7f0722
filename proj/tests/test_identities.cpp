#include <doctest.h>

#include "aperylab/identities.hpp"
#include "aperylab/mhs.hpp"

using namespace aperylab;

namespace {

// Weight-1 specialization written out directly, as an independent route:
// 3/4 sum C(2k,k)/(16^k(2k+1)) = sum (-1)^k/(2k+1)
//                                + (-1)^n/4 sum C(2k,k)/((-16)^k C(n+k,2k+1)(2k+1))
IdentityCheck weight1_direct(int n) {
    BigRational lhs(0), alt(0), corr(0);
    for (int k = 0; k < n; ++k) {
        const BigRational central(binomial(2ul * k, static_cast<unsigned long>(k)),
                                  pow_of_prime(2, 4ul * static_cast<unsigned long>(k)));
        lhs += BigRational(3, 4) * central / BigRational(2LL * k + 1);
        alt += BigRational((k & 1) ? -1 : 1) / BigRational(2LL * k + 1);
        corr += BigRational((k & 1) ? -1 : 1) * central /
                (BigRational(binomial(static_cast<unsigned long>(n + k), 2ul * k + 1),
                             mpz_class(1)) *
                 BigRational(2LL * k + 1));
    }
    const BigRational rhs =
        alt + BigRational((n & 1) ? -1 : 1, 4) * corr;
    return {lhs, rhs, lhs == rhs};
}

// Weight-2 specialization, same idea.
IdentityCheck weight2_direct(int n) {
    BigRational lhs(0), sq(0), corr(0);
    for (int k = 0; k < n; ++k) {
        const BigRational central =
            BigRational(binomial(2ul * k, static_cast<unsigned long>(k)),
                        pow_of_prime(2, 4ul * static_cast<unsigned long>(k))) *
            BigRational((k & 1) ? -1 : 1);  // C(2k,k)/(-16)^k
        const BigRational odd_sq = pow(BigRational(2LL * k + 1), -2);
        lhs += BigRational(5, 4) * central * odd_sq;
        sq += odd_sq;
        corr += central * odd_sq /
                BigRational(binomial(static_cast<unsigned long>(n + k), 2ul * k + 1),
                            mpz_class(1));
    }
    const BigRational rhs = sq + BigRational(1, 4) * corr;
    return {lhs, rhs, lhs == rhs};
}

}  // namespace

TEST_CASE("worked single-term evaluations") {
    auto c11 = leshchiner_odd(1, 1);
    CHECK(c11.equal);
    CHECK(c11.lhs == BigRational(3, 4));
    auto c13 = leshchiner_odd(1, 3);
    CHECK(c13.equal);
    CHECK(c13.lhs == BigRational(1));
    auto e12 = leshchiner_even(1, 2);
    CHECK(e12.equal);
    CHECK(e12.lhs == BigRational(5, 4));
    CHECK(leshchiner_odd(10, 5).equal);
    CHECK(leshchiner_even(7, 2).equal);
    CHECK(leshchiner_even(10, 4).equal);
    CHECK_THROWS_AS(leshchiner_odd(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(leshchiner_even(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(leshchiner_odd(0, 1), std::invalid_argument);
}

TEST_CASE("generic weights reproduce the direct specializations term-for-term") {
    for (int n = 1; n <= 40; ++n) {
        const auto gen1 = leshchiner_odd(n, 1);
        const auto dir1 = weight1_direct(n);
        CHECK(gen1.lhs == dir1.lhs);
        CHECK(gen1.rhs == dir1.rhs);
        const auto gen2 = leshchiner_even(n, 2);
        const auto dir2 = weight2_direct(n);
        CHECK(gen2.lhs == dir2.lhs);
        CHECK(gen2.rhs == dir2.rhs);
    }
}

TEST_CASE("weight-3 specialization matches the odd-square-weighted form") {
    // sum C(2k,k)/16^k (1/(2k+1)^3 - 3/4 Hbar_k(2)/(2k+1)) both sides, written directly
    ExactContext ex;
    for (int n = 1; n <= 40; ++n) {
        BigRational lhs(0), alt(0), corr(0);
        for (int k = 0; k < n; ++k) {
            const BigRational central(binomial(2ul * k, static_cast<unsigned long>(k)),
                                      pow_of_prime(2, 4ul * static_cast<unsigned long>(k)));
            const BigRational h2 = odd_mhs(ex, k, MhsIndex{2});
            lhs += central * (pow(BigRational(2LL * k + 1), -3) -
                              BigRational(3, 4) * h2 / BigRational(2LL * k + 1));
            alt += BigRational((k & 1) ? -1 : 1) * pow(BigRational(2LL * k + 1), -3);
            corr += BigRational((k & 1) ? -1 : 1) * central * h2 /
                    (BigRational(binomial(static_cast<unsigned long>(n + k), 2ul * k + 1),
                                 mpz_class(1)) *
                     BigRational(2LL * k + 1));
        }
        const BigRational rhs = alt - BigRational((n & 1) ? -1 : 1, 4) * corr;
        const auto gen = leshchiner_odd(n, 3);
        CHECK(gen.lhs == lhs);
        CHECK(gen.rhs == rhs);
        CHECK(gen.equal);
    }
}

TEST_CASE("product identity in three forms") {
    auto c0 = ccc_product(3, 0);
    CHECK(c0.all_equal);
    CHECK(c0.binomial_form == BigRational(1));
    auto c1 = ccc_product(3, 1);
    CHECK(c1.all_equal);
    CHECK(c1.binomial_form == BigRational(-48));
    CHECK(ccc_product(5, 4).all_equal);
    for (int n = 1; n <= 24; ++n)
        for (int k = 0; k <= n; ++k) CHECK(ccc_product(n, k).all_equal);
    CHECK_THROWS_AS(ccc_product(3, 4), std::invalid_argument);
}

TEST_CASE("inverse-binomial sums") {
    CHECK(inverse_binomial_sums(1).id1);
    CHECK(inverse_binomial_sums(1).id2);
    CHECK(inverse_binomial_sums(12).id1);
    CHECK(inverse_binomial_sums(12).id2);
    for (int n = 1; n <= 30; ++n) {
        const auto c = inverse_binomial_sums(n);
        CHECK(c.id1);
        CHECK(c.id2);
    }
}

TEST_CASE("series limits") {
    CHECK(series_limit(SeriesId::arctan_pi3, 1).partial == 1.0);
    for (SeriesId id : {SeriesId::arctan_pi3, SeriesId::zeta2_pi2_10, SeriesId::cube_7pi3_216,
                        SeriesId::h2_pi3_648}) {
        CHECK(series_limit(id, 60).abs_error < 1e-12);
        // error is monotone non-increasing beyond small term counts, down to
        // the double-precision noise floor
        double prev = series_limit(id, 5).abs_error;
        for (int t = 6; t <= 60; ++t) {
            const double cur = series_limit(id, t).abs_error;
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
    }
    CHECK(parse_series_id("zeta2_pi2_10") == SeriesId::zeta2_pi2_10);
    CHECK_THROWS_AS(parse_series_id("nope"), UnknownSeries);
    CHECK_THROWS_AS(series_limit(SeriesId::arctan_pi3, 0), std::invalid_argument);
}

TEST_CASE("alternating binomial probe has no identity attached") {
    // the displayed vanishing claim is false as written; the probe documents it
    CHECK(alternating_binomial_probe(3) == BigRational(28, 15));
    CHECK_FALSE(alternating_binomial_probe(3).is_zero());
    CHECK(alternating_binomial_probe(1) == BigRational(1));
}
