#include <doctest.h>

#include <random>

#include "aperylab/context.hpp"
#include "aperylab/padic.hpp"

using namespace aperylab;

namespace {

// Random straight-line rational with p-coprime denominators.
BigRational random_p_coprime(std::mt19937& rng, std::uint64_t p) {
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 50);
    long long d = den(rng);
    while (d % static_cast<long long>(p) == 0) d = den(rng);
    return BigRational(num(rng), d);
}

}  // namespace

TEST_CASE("from_rational matches the worked conversions") {
    auto z = PadicApprox::from_rational(BigRational(0), 7, 6);
    CHECK(z.is_exact_zero());

    auto a = PadicApprox::from_rational(BigRational(5, 3), 7, 2);
    CHECK(a.valuation() == 0);
    CHECK(a.unit() == 18);
    CHECK(a.rel_precision() == 2);

    auto b = PadicApprox::from_rational(BigRational(49, 20), 7, 6);
    CHECK(b.valuation() == 2);
    CHECK(b.unit() == 2281);
    CHECK(b.abs_precision() == 6);

    auto c = PadicApprox::from_rational(BigRational(3, 7), 7, 4);
    CHECK(c.valuation() == -1);
    CHECK(c.abs_precision() == 4);
}

TEST_CASE("field axioms at working precision") {
    std::mt19937 rng(11);
    const std::uint64_t p = 13;
    for (int i = 0; i < 200; ++i) {
        auto q = random_p_coprime(rng, p);
        if (q.is_zero()) continue;
        auto x = PadicApprox::from_rational(q, p, 6);
        auto one = x * x.inv();
        CHECK(one.valuation() == 0);
        CHECK(one.unit() == 1);
    }
}

TEST_CASE("forced cancellation reports an honest valuation") {
    auto a = PadicApprox::from_integer(1, 7, 6);
    auto b = PadicApprox::from_integer(1 + 2 * 343, 7, 6);
    auto d = a - b;  // -2 * 7^3
    CHECK(d.valuation() == 3);
    CHECK(d.abs_precision() == 6);
    // unit is -2 modulo 7^3
    CHECK(d.unit() == 343 - 2);

    auto q = PadicApprox::from_rational(BigRational(49, 20), 7, 6);
    auto z = q - q;
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_exact_zero());
    CHECK(z.abs_precision() == 6);
}

TEST_CASE("precision honesty for additive ops") {
    std::mt19937 rng(23);
    const std::uint64_t p = 11;
    std::uniform_int_distribution<long long> prec(2, 9);
    for (int i = 0; i < 300; ++i) {
        auto a = PadicApprox::from_rational(random_p_coprime(rng, p), p, prec(rng));
        auto b = PadicApprox::from_rational(random_p_coprime(rng, p), p, prec(rng));
        if (a.is_exact_zero() || b.is_exact_zero()) continue;
        const long long cap = std::min(a.abs_precision(), b.abs_precision());
        CHECK((a + b).abs_precision() <= cap);
        CHECK((a - b).abs_precision() <= cap);
    }
}

TEST_CASE("perturbation by p^j t is detected at exactly j") {
    const std::uint64_t p = 7;
    const long long n = 8;
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto q = random_p_coprime(rng, p);
        std::uniform_int_distribution<long long> jdist(0, n - 1);
        std::uniform_int_distribution<long long> tdist(1, 6);  // p-coprime
        const long long j = jdist(rng);
        const long long t = tdist(rng);
        auto x = PadicApprox::from_rational(q, p, n);
        auto y = PadicApprox::from_rational(
            q + BigRational(t) * BigRational(pow_of_prime(p, static_cast<unsigned long>(j)),
                                             mpz_class(1)),
            p, n);
        auto d = y - x;
        REQUIRE_FALSE(d.is_zero());
        CHECK(d.valuation() == j);
    }
}

TEST_CASE("multiplicative ops combine valuations and relative precision") {
    auto a = PadicApprox::from_parts(7, 2, 13, 4);   // 13*7^2 + O(7^6)
    auto b = PadicApprox::from_parts(7, -1, 5, 3);   // 5*7^-1 + O(7^2)
    auto c = a * b;
    CHECK(c.valuation() == 1);
    CHECK(c.rel_precision() == 3);
    CHECK(c.unit() == 65 % 343);

    auto i = b.inv();
    CHECK(i.valuation() == 1);
    CHECK((b * i).unit() == 1);

    auto sq = a.pow(3);
    CHECK(sq.valuation() == 6);
    CHECK(sq.rel_precision() == 4);
    CHECK(sq.unit() == mpz_class(13 * 13 * 13) % 2401);

    CHECK(a.pow(0).unit() == 1);
    CHECK(a.pow(0).valuation() == 0);
}

TEST_CASE("zero handling in arithmetic") {
    const std::uint64_t p = 5;
    auto ez = PadicApprox::exact_zero(p);
    auto zn = PadicApprox::zero_at_precision(p, 4);
    auto x = PadicApprox::from_integer(7, p, 6);

    CHECK((ez + x).unit() == x.unit());
    CHECK((x - ez).unit() == x.unit());
    CHECK((ez * x).is_exact_zero());
    CHECK((zn * x).is_zero());
    CHECK((zn * x).abs_precision() == 4);  // val(x) = 0
    CHECK((zn + x).abs_precision() == 4);
    CHECK((zn + zn).abs_precision() == 4);
    CHECK(zn.pow(3).abs_precision() == 12);
    CHECK_THROWS_AS(ez.inv(), DivisionByZero);
    CHECK_THROWS_AS(zn.inv(), DivisionByZero);
    // zero swallows a deeper value entirely
    auto deep = PadicApprox::from_rational(
        BigRational(pow_of_prime(p, 5), mpz_class(1)), p, 7);
    CHECK((zn + deep).is_zero());
    CHECK((zn + deep).abs_precision() == 4);
}

TEST_CASE("residue errors") {
    auto x = PadicApprox::from_rational(BigRational(3, 7), 7, 4);
    CHECK_THROWS_AS(x.residue(1), NotPIntegral);
    auto y = PadicApprox::from_integer(10, 7, 2);
    CHECK_THROWS_AS(y.residue(5), PrecisionExhausted);
    CHECK(y.residue(2) == 10);
    auto zn = PadicApprox::zero_at_precision(7, 3);
    CHECK(zn.residue(3) == 0);
    CHECK_THROWS_AS(zn.residue(4), PrecisionExhausted);
    CHECK(PadicApprox::exact_zero(7).residue(12) == 0);
}

TEST_CASE("operations across different primes are rejected") {
    auto a = PadicApprox::from_integer(1, 7, 4);
    auto b = PadicApprox::from_integer(1, 11, 4);
    CHECK_THROWS_AS(a + b, PrimeMismatch);
    CHECK_THROWS_AS(a * b, PrimeMismatch);
}

TEST_CASE("exact and padic engines agree on random straight-line programs") {
    std::mt19937 rng(2024);
    const std::uint64_t p = 13;
    const long long n = 8;
    std::uniform_int_distribution<int> opd(0, 3);
    for (int trial = 0; trial < 250; ++trial) {
        BigRational q = random_p_coprime(rng, p);
        auto x = PadicApprox::from_rational(q, p, n);
        for (int step = 0; step < 6; ++step) {
            const BigRational r = random_p_coprime(rng, p);
            const auto rp = PadicApprox::from_rational(r, p, n);
            switch (opd(rng)) {
                case 0: q = q + r; x = x + rp; break;
                case 1: q = q - r; x = x - rp; break;
                case 2: q = q * r; x = x * rp; break;
                default:
                    if (!r.is_zero() && padic_valuation(r, p) == Valuation::of(0)) {
                        q = q / r;
                        x = x / rp;
                    }
                    break;
            }
        }
        if (padic_valuation(q, p).at_least(0) && !q.is_zero()) {
            const long long e = std::min<long long>(3, x.abs_precision());
            if (e >= 1 && !x.is_zero())
                CHECK(residue_mod(q, p, e) == x.residue(e));
        }
    }
}

TEST_CASE("padic ring axioms hold modulo the tracked precision") {
    std::mt19937 rng(99);
    const std::uint64_t p = 7;
    for (int i = 0; i < 200; ++i) {
        auto a = PadicApprox::from_rational(random_p_coprime(rng, p), p, 6);
        auto b = PadicApprox::from_rational(random_p_coprime(rng, p), p, 6);
        auto c = PadicApprox::from_rational(random_p_coprime(rng, p), p, 6);
        auto l = (a + b) + c;
        auto r = a + (b + c);
        auto d = l - r;
        CHECK(d.is_zero());
        auto dl = a * (b + c) - (a * b + a * c);
        CHECK(dl.is_zero());
    }
}
