#pragma once

#include <cstdint>
#include <vector>

#include "aperylab/context.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

// Largest index served by the exact Bernoulli recurrence.
inline constexpr int kBernoulliExactBound = 200;

// Exact B_m under the B_1 = -1/2 convention, from the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1. Memoized; thread-safe.
BigRational bernoulli_exact(int m);

// B_m mod p by the Akiyama-Tanigawa triangle, entirely in Z/pZ and independent
// of every congruence this project verifies. Requires m + 1 < p.
std::uint64_t bernoulli_mod_p(int m, std::uint64_t p);

// One triangle pass yields every row head: returns B_0..B_max_m mod p.
std::vector<std::uint64_t> bernoulli_mod_p_table(int max_m, std::uint64_t p);

// As above, with a process-wide per-prime cache (the verification engine's
// fast path); table covers indices up to p - 3.
std::uint64_t bernoulli_mod_p_cached(int m, std::uint64_t p);

// sum_{k=1}^{n} k^m in the chosen context.
template <class Ctx>
typename Ctx::Value power_sum(const Ctx& ctx, long long n, int m) {
    auto acc = ctx.integer(0);
    for (long long k = 1; k <= n; ++k) acc += pow(ctx.integer(k), m);
    return acc;
}

}  // namespace aperylab
