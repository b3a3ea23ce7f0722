#include "aperylab/bernoulli.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <string>

#include "aperylab/errors.hpp"

namespace aperylab {

namespace {

std::mutex exact_mutex;
std::deque<BigRational> exact_table;  // exact_table[m] = B_m

std::mutex modp_mutex;
std::map<std::uint64_t, std::vector<std::uint64_t>> modp_tables;

}  // namespace

BigRational bernoulli_exact(int m) {
    if (m < 0) throw IndexTooLarge("Bernoulli index must be non-negative");
    if (m > kBernoulliExactBound)
        throw IndexTooLarge("Bernoulli index " + std::to_string(m) + " exceeds bound " +
                            std::to_string(kBernoulliExactBound));
    std::lock_guard<std::mutex> lock(exact_mutex);
    if (exact_table.empty()) exact_table.emplace_back(1);
    for (int i = static_cast<int>(exact_table.size()); i <= m; ++i) {
        // B_i = -1/(i+1) * sum_{j=0}^{i-1} C(i+1, j) B_j
        BigRational acc(0);
        for (int j = 0; j < i; ++j) {
            if (j >= 3 && (j & 1)) continue;  // odd-index values vanish
            acc += BigRational(binomial(static_cast<unsigned long>(i) + 1,
                                        static_cast<unsigned long>(j)),
                               mpz_class(1)) *
                   exact_table[static_cast<std::size_t>(j)];
        }
        exact_table.push_back(acc / BigRational(-(static_cast<long long>(i) + 1)));
    }
    return exact_table[static_cast<std::size_t>(m)];
}

std::vector<std::uint64_t> bernoulli_mod_p_table(int max_m, std::uint64_t p) {
    if (max_m < 0) throw IndexTooLarge("Bernoulli index must be non-negative");
    if (static_cast<std::uint64_t>(max_m) + 1 >= p)
        throw NotPRegularRange("bernoulli_mod_p needs m + 1 < p (m = " + std::to_string(max_m) +
                               ", p = " + std::to_string(p) + ")");
    if (p >= (1ull << 31)) throw NotPRegularRange("prime too large for the mod-p triangle");

    // Akiyama-Tanigawa: start from a_j = 1/(j+1), transform rows in place;
    // after round i the row head equals B_i (B_1 = +1/2 convention).
    const int width = max_m + 1;
    std::vector<std::uint64_t> inv(static_cast<std::size_t>(width) + 1);
    inv[1] = 1;
    for (int i = 2; i <= width; ++i)
        inv[static_cast<std::size_t>(i)] =
            (p - (p / static_cast<std::uint64_t>(i)) *
                     inv[static_cast<std::size_t>(p % static_cast<std::uint64_t>(i))] % p) %
            p;

    std::vector<std::uint64_t> row(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) row[static_cast<std::size_t>(j)] = inv[static_cast<std::size_t>(j) + 1];

    std::vector<std::uint64_t> heads(static_cast<std::size_t>(width));
    heads[0] = row[0];
    for (int i = 1; i <= max_m; ++i) {
        for (int j = 0; j <= max_m - i; ++j) {
            std::uint64_t diff = (row[static_cast<std::size_t>(j)] + p -
                                  row[static_cast<std::size_t>(j) + 1]) % p;
            row[static_cast<std::size_t>(j)] = (static_cast<std::uint64_t>(j) + 1) * diff % p;
        }
        heads[static_cast<std::size_t>(i)] = row[0];
    }
    if (max_m >= 1) heads[1] = (p - heads[1]) % p;  // B_1 = -1/2 convention
    return heads;
}

std::uint64_t bernoulli_mod_p(int m, std::uint64_t p) {
    return bernoulli_mod_p_table(m, p)[static_cast<std::size_t>(m)];
}

std::uint64_t bernoulli_mod_p_cached(int m, std::uint64_t p) {
    if (m < 0 || static_cast<std::uint64_t>(m) + 1 >= p)
        throw NotPRegularRange("bernoulli_mod_p needs 0 <= m and m + 1 < p");
    std::lock_guard<std::mutex> lock(modp_mutex);
    auto it = modp_tables.find(p);
    if (it == modp_tables.end()) {
        int max_m = static_cast<int>(p) - 2;
        it = modp_tables.emplace(p, bernoulli_mod_p_table(max_m, p)).first;
    }
    return it->second[static_cast<std::size_t>(m)];
}

// Context Bernoulli hooks live here so context.hpp stays header-light.
ExactContext::Value ExactContext::bernoulli(int m) const { return bernoulli_exact(m); }

PadicContext::Value PadicContext::bernoulli(int m) const {
    std::uint64_t b = bernoulli_mod_p_cached(m, p_);
    if (b == 0) return PadicApprox::zero_at_precision(p_, 1);
    return PadicApprox::from_parts(p_, 0, mpz_class(static_cast<unsigned long>(b)), 1);
}

ExactContext::Value ExactContext::inv_pow(long long base, long long e) const {
    if (base == 0) throw DivisionByZero("inverse power of zero");
    mpz_class b(static_cast<long>(base));
    mpz_class be;
    mpz_pow_ui(be.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(mpz_class(1), be);
}

PadicContext::Value PadicContext::inv_pow(long long base, long long e) const {
    if (base == 0) throw DivisionByZero("inverse power of zero");
    mpz_class b(static_cast<long>(base));
    mpz_class be;
    mpz_pow_ui(be.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return PadicApprox::from_rational(BigRational(mpz_class(1), be), p_, prec_);
}

}  // namespace aperylab
