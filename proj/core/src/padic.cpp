#include "aperylab/padic.hpp"

#include <utility>

namespace aperylab {

namespace {

void check_same_prime(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime() != b.prime()) throw PrimeMismatch();
}

}  // namespace

PadicApprox PadicApprox::exact_zero(std::uint64_t p) { return PadicApprox(p, Kind::ExactZero); }

PadicApprox PadicApprox::zero_at_precision(std::uint64_t p, long long n) {
    PadicApprox z(p, Kind::ZeroAtPrecision);
    z.v_ = n;
    return z;
}

PadicApprox PadicApprox::from_parts(std::uint64_t p, long long v, mpz_class unit, long long k) {
    if (k < 1) throw std::invalid_argument("relative precision must be >= 1");
    mpz_class m = pow_of_prime(p, static_cast<unsigned long>(k));
    unit %= m;
    if (sgn(unit) < 0) unit += m;
    if (sgn(unit) == 0) return zero_at_precision(p, v + k);
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("p-adic unit must be coprime to p");
    PadicApprox r(p, Kind::NonZero);
    r.v_ = v;
    r.k_ = k;
    r.u_ = std::move(unit);
    return r;
}

PadicApprox PadicApprox::from_rational(const BigRational& q, std::uint64_t p, long long n) {
    if (q.is_zero()) return exact_zero(p);
    mpz_class num = q.numerator(), den = q.denominator();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num_free, den_free;
    long long vnum = static_cast<long long>(
        mpz_remove(num_free.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    long long vden = static_cast<long long>(
        mpz_remove(den_free.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    long long v = vnum - vden;
    if (v >= n) return zero_at_precision(p, n);
    long long k = n - v;
    mpz_class m = pow_of_prime(p, static_cast<unsigned long>(k));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den_free.get_mpz_t(), m.get_mpz_t());
    mpz_class u = (num_free % m) * den_inv % m;
    if (sgn(u) < 0) u += m;
    return from_parts(p, v, std::move(u), k);
}

PadicApprox PadicApprox::from_integer(long long value, std::uint64_t p, long long n) {
    return from_rational(BigRational(value), p, n);
}

long long PadicApprox::abs_precision() const {
    switch (kind_) {
        case Kind::ExactZero: return kInfinitePrecision;
        case Kind::ZeroAtPrecision: return v_;
        case Kind::NonZero: return v_ + k_;
    }
    return 0;
}

Valuation PadicApprox::valuation_if_known() const {
    if (kind_ == Kind::ExactZero) return Valuation::infinite();
    return Valuation::of(v_);
}

PadicApprox PadicApprox::operator-() const {
    if (kind_ != Kind::NonZero) return *this;
    mpz_class m = pow_of_prime(p_, static_cast<unsigned long>(k_));
    return from_parts(p_, v_, m - u_, k_);
}

// Shared residue-normalisation: value residue * p^v0 known modulo p^(v0 + rel_window).
PadicApprox PadicApprox::make_from_residue(std::uint64_t p, long long v0,
                                           const mpz_class& residue, long long rel_window) {
    if (sgn(residue) == 0) return zero_at_precision(p, v0 + rel_window);
    mpz_class shifted;
    mpz_class pz(static_cast<unsigned long>(p));
    long long j = static_cast<long long>(
        mpz_remove(shifted.get_mpz_t(), residue.get_mpz_t(), pz.get_mpz_t()));
    return from_parts(p, v0 + j, std::move(shifted), rel_window - j);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const long long n = std::min(a.abs_precision(), b.abs_precision());
    if (a.is_zero() && b.is_zero()) return PadicApprox::zero_at_precision(a.p_, n);
    if (a.is_zero() || b.is_zero()) {
        const PadicApprox& x = a.is_zero() ? b : a;
        if (x.v_ >= n) return PadicApprox::zero_at_precision(a.p_, n);
        // Truncate the non-zero side to the joint precision.
        mpz_class m = pow_of_prime(a.p_, static_cast<unsigned long>(n - x.v_));
        return PadicApprox::from_parts(a.p_, x.v_, x.u_ % m, n - x.v_);
    }
    const long long v0 = std::min(a.v_, b.v_);  // always < n since k >= 1
    mpz_class m = pow_of_prime(a.p_, static_cast<unsigned long>(n - v0));
    mpz_class ra = a.u_, rb = b.u_;
    mpz_class pz(static_cast<unsigned long>(a.p_));
    if (a.v_ > v0) {
        mpz_class shift;
        mpz_pow_ui(shift.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(a.v_ - v0));
        ra *= shift;
    }
    if (b.v_ > v0) {
        mpz_class shift;
        mpz_pow_ui(shift.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(b.v_ - v0));
        rb *= shift;
    }
    mpz_class r = (ra + rb) % m;
    return PadicApprox::make_from_residue(a.p_, v0, r, n - v0);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicApprox::exact_zero(a.p_);
    if (a.is_zero() || b.is_zero()) {
        // val(a*b) >= bound(a) + bound(b), where bound is valuation or the zero precision.
        return PadicApprox::zero_at_precision(a.p_, a.v_ + b.v_);
    }
    const long long k = std::min(a.k_, b.k_);
    mpz_class m = pow_of_prime(a.p_, static_cast<unsigned long>(k));
    return PadicApprox::from_parts(a.p_, a.v_ + b.v_, a.u_ * b.u_ % m, k);
}

PadicApprox PadicApprox::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of p-adic zero");
    mpz_class m = pow_of_prime(p_, static_cast<unsigned long>(k_));
    mpz_class r;
    mpz_invert(r.get_mpz_t(), u_.get_mpz_t(), m.get_mpz_t());
    return from_parts(p_, -v_, std::move(r), k_);
}

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) { return a * b.inv(); }

PadicApprox PadicApprox::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    if (e == 0) return from_parts(p_, 0, 1, kind_ == Kind::NonZero ? k_ : 1);
    if (is_exact_zero()) return *this;
    if (kind_ == Kind::ZeroAtPrecision) return zero_at_precision(p_, v_ * e);
    mpz_class m = pow_of_prime(p_, static_cast<unsigned long>(k_));
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
    return from_parts(p_, v_ * e, std::move(r), k_);
}

mpz_class PadicApprox::residue(long long e) const {
    if (e < 0) throw std::invalid_argument("residue exponent must be non-negative");
    if (is_exact_zero()) return 0;
    if (kind_ == Kind::ZeroAtPrecision) {
        if (v_ < e) throw PrecisionExhausted(v_, e);
        return 0;
    }
    if (v_ < 0) throw NotPIntegral("p-adic residue of a value with negative valuation");
    if (abs_precision() < e) throw PrecisionExhausted(abs_precision(), e);
    if (v_ >= e) return 0;
    mpz_class m = pow_of_prime(p_, static_cast<unsigned long>(e));
    mpz_class shift = pow_of_prime(p_, static_cast<unsigned long>(v_));
    return u_ * shift % m;
}

std::string PadicApprox::to_string() const {
    const std::string ptag = std::to_string(p_);
    switch (kind_) {
        case Kind::ExactZero: return "0 (exact, p=" + ptag + ")";
        case Kind::ZeroAtPrecision: return "O(" + ptag + "^" + std::to_string(v_) + ")";
        case Kind::NonZero:
            return u_.get_str() + "*" + ptag + "^" + std::to_string(v_) + " + O(" + ptag + "^" +
                   std::to_string(v_ + k_) + ")";
    }
    return {};
}

PadicApprox pow(const PadicApprox& base, long long e) { return base.pow(e); }

}  // namespace aperylab
