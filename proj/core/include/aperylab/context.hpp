#pragma once

#include <cstdint>

#include "aperylab/padic.hpp"
#include "aperylab/rational.hpp"

namespace aperylab {

/*
 * Field contexts: the two interchangeable number engines every sum, identity
 * and congruence evaluator is written against. Values produced inside one
 * context are mutually comparable; the exact context is the ground truth, the
 * p-adic context is the fast path with explicit precision tracking.
 */

class ExactContext {
  public:
    using Value = BigRational;

    Value integer(long long n) const { return BigRational(n); }
    Value ratio(long long num, long long den) const { return BigRational(num, den); }
    // base^(-e) as an exact fraction.
    Value inv_pow(long long base, long long e) const;
    // Exact B_m (memoized, B_1 = -1/2 convention).
    Value bernoulli(int m) const;
};

class PadicContext {
  public:
    PadicContext(std::uint64_t p, long long abs_precision) : p_(p), prec_(abs_precision) {}

    using Value = PadicApprox;

    std::uint64_t prime() const { return p_; }
    long long precision() const { return prec_; }

    Value integer(long long n) const {
        return PadicApprox::from_integer(n, p_, prec_);
    }
    Value ratio(long long num, long long den) const {
        return PadicApprox::from_rational(BigRational(num, den), p_, prec_);
    }
    Value inv_pow(long long base, long long e) const;
    // B_m known modulo p (relative precision 1), from the triangle scheme.
    Value bernoulli(int m) const;

  private:
    std::uint64_t p_;
    long long prec_;
};

}  // namespace aperylab
