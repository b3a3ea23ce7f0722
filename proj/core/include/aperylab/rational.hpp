#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "aperylab/errors.hpp"

namespace aperylab {

// Exact arbitrary-precision fraction, always kept reduced with a positive
// denominator; zero is 0/1. This is the ground-truth number type: every
// congruence verdict the fast engine produces can be replayed against it.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
    BigRational(long long num, long long den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpq_class& q);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }

    // "num/den", or just "num" for integers.
    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;  // canonical by mpq invariants
};

// p-adic valuation result; infinite exactly for the zero value.
struct Valuation {
    bool is_infinite = false;
    long long v = 0;

    static Valuation infinite() { return {true, 0}; }
    static Valuation of(long long value) { return {false, value}; }
    bool at_least(long long e) const { return is_infinite || v >= e; }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.is_infinite == b.is_infinite && (a.is_infinite || a.v == b.v);
    }
};

// Reduced fraction with positive denominator equal to num/den.
BigRational rat_normalize(long long num, long long den);

// Exponent of p in q: exponent in the numerator minus exponent in the denominator.
Valuation padic_valuation(const BigRational& q, std::uint64_t p);
long long padic_valuation(const mpz_class& z, std::uint64_t p);  // z != 0

// Unique residue of a p-integral q modulo p^e, in [0, p^e).
mpz_class residue_mod(const BigRational& q, std::uint64_t p, long long e);

// p^e as an exact integer.
mpz_class pow_of_prime(std::uint64_t p, unsigned long e);

// C(n, k) by the multiplicative recurrence; 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

// base^e for signed e; negative e inverts (DivisionByZero on zero base).
BigRational pow(const BigRational& base, long long e);

}  // namespace aperylab
