#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "aperylab/rational.hpp"

namespace aperylab {

/*
 * Truncated p-adic number: value u * p^v with the unit u known modulo p^k,
 * i.e. the whole value is known modulo p^N with absolute precision N = v + k.
 *
 * Precision rules, chosen so congruence checks are sound:
 *   - add/sub: result absolute precision = min of the operands'; the valuation
 *     is recomputed from the resulting residue, so cancellation turns into an
 *     honest "zero at precision N" value, never a fabricated valuation.
 *   - mul/inv/pow: valuations combine additively, units modularly, relative
 *     precision min(k_a, k_b).
 *   - a residue query deeper than the known precision raises PrecisionExhausted.
 *
 * Zero comes in two flavours: exact zero (infinite precision) and
 * zero-at-precision-N (all that is known is valuation >= N).
 */
class PadicApprox {
  public:
    static constexpr long long kInfinitePrecision = std::numeric_limits<long long>::max();

    static PadicApprox exact_zero(std::uint64_t p);
    static PadicApprox zero_at_precision(std::uint64_t p, long long n);
    // Unit form; requires p coprime to unit, k >= 1. Reduces unit into [1, p^k).
    static PadicApprox from_parts(std::uint64_t p, long long v, mpz_class unit, long long k);
    // Truncation of an exact rational to absolute precision n.
    static PadicApprox from_rational(const BigRational& q, std::uint64_t p, long long n);
    static PadicApprox from_integer(long long value, std::uint64_t p, long long n);

    std::uint64_t prime() const { return p_; }
    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    bool is_zero() const { return kind_ != Kind::NonZero; }

    // Valuation of a non-zero value; for zeros this is only a lower bound.
    long long valuation() const { return v_; }
    long long rel_precision() const { return k_; }
    long long abs_precision() const;
    const mpz_class& unit() const { return u_; }

    Valuation valuation_if_known() const;  // infinite only for exact zero

    PadicApprox operator-() const;
    friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);

    PadicApprox& operator+=(const PadicApprox& o) { return *this = *this + o; }
    PadicApprox& operator-=(const PadicApprox& o) { return *this = *this - o; }
    PadicApprox& operator*=(const PadicApprox& o) { return *this = *this * o; }

    PadicApprox inv() const;
    PadicApprox pow(long long e) const;

    // Residue modulo p^e of a p-integral value. NotPIntegral on negative
    // valuation, PrecisionExhausted when the value is not known that deep.
    mpz_class residue(long long e) const;

    std::string to_string() const;

  private:
    enum class Kind { NonZero, ZeroAtPrecision, ExactZero };

    PadicApprox(std::uint64_t p, Kind kind) : p_(p), kind_(kind) {}

    static PadicApprox make_from_residue(std::uint64_t p, long long v0,
                                         const mpz_class& residue, long long rel_window);

    std::uint64_t p_ = 2;
    Kind kind_ = Kind::ExactZero;
    long long v_ = 0;   // valuation (NonZero) or precision bound N (ZeroAtPrecision)
    long long k_ = 0;   // relative precision, >= 1 for NonZero
    mpz_class u_ = 0;   // unit in [1, p^k), p coprime
};

PadicApprox pow(const PadicApprox& base, long long e);

}  // namespace aperylab
