#include "aperylab/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "aperylab/errors.hpp"
#include "aperylab/mhs.hpp"

namespace aperylab {

namespace {

// Hbar_k({2}^j) for 0 <= k <= n, 0 <= j <= jmax, by the elementary-symmetric
// recurrence e[k][j] = e[k-1][j] + e[k-1][j-1]/(2k-1)^2.
std::vector<std::vector<BigRational>> odd_square_table(int n, int jmax) {
    std::vector<std::vector<BigRational>> e(
        static_cast<std::size_t>(n) + 1,
        std::vector<BigRational>(static_cast<std::size_t>(jmax) + 1, BigRational(0)));
    e[0][0] = BigRational(1);
    for (int k = 1; k <= n; ++k) {
        const BigRational w(mpz_class(1), mpz_class(2 * k - 1) * (2 * k - 1));
        e[static_cast<std::size_t>(k)][0] = BigRational(1);
        for (int j = 1; j <= jmax; ++j)
            e[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                e[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j)] +
                e[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j) - 1] * w;
    }
    return e;
}

BigRational central_over_16(int k) {
    // C(2k,k) / 16^k
    return BigRational(binomial(2ul * static_cast<unsigned long>(k),
                                static_cast<unsigned long>(k)),
                       pow_of_prime(2, 4ul * static_cast<unsigned long>(k)));
}

int parity_sign(int j) { return (j & 1) ? -1 : 1; }

}  // namespace

IdentityCheck leshchiner_odd(int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("r must be a positive odd integer");
    const int h = (r - 1) / 2;
    const auto e = odd_square_table(n, h);
    const int corr_sign = parity_sign(h);

    BigRational lhs(0), rhs(0), corr(0);
    for (int k = 0; k < n; ++k) {
        const BigRational t = central_over_16(k);
        const long long odd = 2LL * k + 1;
        BigRational inner(0);
        for (int j = 0; j <= h; ++j)
            inner += BigRational(parity_sign(j)) *
                     e[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                     pow(BigRational(odd), -(r - 2 * j));
        inner -= BigRational(corr_sign, 4) *
                 e[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] / BigRational(odd);
        lhs += t * inner;

        rhs += BigRational(parity_sign(k)) * pow(BigRational(odd), -r);
        corr += t / BigRational(binomial(static_cast<unsigned long>(n + k),
                                         2ul * static_cast<unsigned long>(k) + 1),
                                mpz_class(1)) *
                BigRational(parity_sign(n - k)) *
                e[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] / BigRational(odd);
    }
    rhs += BigRational(corr_sign, 4) * corr;
    return {lhs, rhs, lhs == rhs};
}

IdentityCheck leshchiner_even(int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 2 || r % 2 == 1) throw std::invalid_argument("r must be a positive even integer");
    const int h = r / 2 - 1;
    const auto e = odd_square_table(n, h);
    const int corr_sign = parity_sign(h);

    BigRational lhs(0), rhs(0), corr(0);
    for (int k = 0; k < n; ++k) {
        const BigRational t = central_over_16(k) * BigRational(parity_sign(k));  // C(2k,k)/(-16)^k
        const long long odd = 2LL * k + 1;
        BigRational inner(0);
        for (int j = 0; j <= h; ++j)
            inner += BigRational(parity_sign(j)) *
                     e[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                     pow(BigRational(odd), -(r - 2 * j));
        inner += BigRational(corr_sign, 4) *
                 e[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] *
                 pow(BigRational(odd), -2);
        lhs += t * inner;

        rhs += pow(BigRational(odd), -r);
        corr += t / BigRational(binomial(static_cast<unsigned long>(n + k),
                                         2ul * static_cast<unsigned long>(k) + 1),
                                mpz_class(1)) *
                e[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] *
                pow(BigRational(odd), -2);
    }
    rhs += BigRational(corr_sign, 4) * corr;
    return {lhs, rhs, lhs == rhs};
}

CccCheck ccc_product(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("need n >= 1 and 0 <= k <= n");
    const BigRational q(2LL * n + 1);

    mpz_class sixteen_k = pow_of_prime(2, 4ul * static_cast<unsigned long>(k));
    BigRational binform =
        BigRational(binomial(static_cast<unsigned long>(n + k), 2ul * static_cast<unsigned long>(k)),
                    binomial(2ul * static_cast<unsigned long>(k), static_cast<unsigned long>(k))) *
        BigRational((k & 1) ? -sixteen_k : sixteen_k, mpz_class(1));

    BigRational prodform(1);
    for (int j = 0; j < k; ++j)
        prodform *= BigRational(1) - q * q * pow(BigRational(2LL * j + 1), -2);

    const auto e = odd_square_table(k, k);
    BigRational mhsform(0);
    for (int j = 0; j <= k; ++j)
        mhsform += BigRational(parity_sign(j)) * pow(q, 2 * j) *
                   e[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];

    const bool all_equal = binform == prodform && prodform == mhsform;
    return {binform, prodform, mhsform, all_equal};
}

InverseBinomialCheck inverse_binomial_sums(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigRational s1(0), s2(0), alt(0);
    for (int k = 0; k <= n; ++k) {
        mpz_class sixteen_k = pow_of_prime(2, 4ul * static_cast<unsigned long>(k));
        const BigRational term =
            BigRational(binomial(static_cast<unsigned long>(n + k),
                                 2ul * static_cast<unsigned long>(k)),
                        binomial(2ul * static_cast<unsigned long>(k),
                                 static_cast<unsigned long>(k))) *
            BigRational((k & 1) ? -sixteen_k : sixteen_k, mpz_class(1));
        s1 += term / BigRational(2LL * k + 1);
        s2 += term * pow(BigRational(2LL * k + 1), -2);
        if (k < n) alt += BigRational(parity_sign(k)) / BigRational(2LL * k + 1);
    }
    const BigRational t1 =
        BigRational(2 * parity_sign(n)) * alt + pow(BigRational(2LL * n + 1), -1);
    const BigRational t2 = pow(BigRational(2LL * n + 1), -2);
    return {s1 == t1, s2 == t2};
}

SeriesLimit series_limit(SeriesId id, int terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    const double pi = std::numbers::pi;
    double target = 0.0;
    switch (id) {
        case SeriesId::arctan_pi3: target = pi / 3.0; break;
        case SeriesId::zeta2_pi2_10: target = pi * pi / 10.0; break;
        case SeriesId::cube_7pi3_216: target = 7.0 * pi * pi * pi / 216.0; break;
        case SeriesId::h2_pi3_648: target = pi * pi * pi / 648.0; break;
    }
    double partial = 0.0;
    double t = 1.0;       // C(2k,k)/16^k
    double hbar2 = 0.0;   // Hbar_k(2)
    for (int k = 0; k < terms; ++k) {
        const double odd = 2.0 * k + 1.0;
        switch (id) {
            case SeriesId::arctan_pi3: partial += t / odd; break;
            case SeriesId::zeta2_pi2_10: partial += ((k & 1) ? -t : t) / (odd * odd); break;
            case SeriesId::cube_7pi3_216: partial += t / (odd * odd * odd); break;
            case SeriesId::h2_pi3_648: partial += t * hbar2 / odd; break;
        }
        hbar2 += 1.0 / (odd * odd);
        t *= odd / (8.0 * (k + 1.0));
    }
    return {partial, target, std::fabs(partial - target)};
}

SeriesId parse_series_id(const std::string& name) {
    if (name == "arctan_pi3") return SeriesId::arctan_pi3;
    if (name == "zeta2_pi2_10") return SeriesId::zeta2_pi2_10;
    if (name == "cube_7pi3_216") return SeriesId::cube_7pi3_216;
    if (name == "h2_pi3_648") return SeriesId::h2_pi3_648;
    throw UnknownSeries(name);
}

std::string series_id_name(SeriesId id) {
    switch (id) {
        case SeriesId::arctan_pi3: return "arctan_pi3";
        case SeriesId::zeta2_pi2_10: return "zeta2_pi2_10";
        case SeriesId::cube_7pi3_216: return "cube_7pi3_216";
        case SeriesId::h2_pi3_648: return "h2_pi3_648";
    }
    return {};
}

BigRational alternating_binomial_probe(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigRational acc(0);
    for (int k = 0; k < n; ++k)
        acc += BigRational(binomial(static_cast<unsigned long>(n + k),
                                    2ul * static_cast<unsigned long>(k) + 1),
                           mpz_class(1)) *
               BigRational(parity_sign(k)) / BigRational(2LL * k + 1);
    return acc;
}

}  // namespace aperylab
