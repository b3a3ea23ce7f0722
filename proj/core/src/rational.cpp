#include "aperylab/rational.hpp"

namespace aperylab {

BigRational::BigRational(long long num, long long den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(static_cast<long>(num), 1);
    v_ /= mpq_class(static_cast<long>(den), 1);
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw ZeroDenominator();
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
    v_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string BigRational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational rat_normalize(long long num, long long den) { return BigRational(num, den); }

long long padic_valuation(const mpz_class& z, std::uint64_t p) {
    mpz_class reduced;
    mpz_class pz(static_cast<unsigned long>(p));
    return static_cast<long long>(mpz_remove(reduced.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

Valuation padic_valuation(const BigRational& q, std::uint64_t p) {
    if (q.is_zero()) return Valuation::infinite();
    // The fraction is reduced, so at most one of the two parts carries p.
    long long vnum = padic_valuation(q.numerator(), p);
    if (vnum > 0) return Valuation::of(vnum);
    return Valuation::of(-padic_valuation(q.denominator(), p));
}

mpz_class pow_of_prime(std::uint64_t p, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return r;
}

mpz_class residue_mod(const BigRational& q, std::uint64_t p, long long e) {
    if (e < 0) throw std::invalid_argument("residue exponent must be non-negative");
    if (q.is_zero()) return 0;
    Valuation v = padic_valuation(q, p);
    if (!v.at_least(0))
        throw NotPIntegral("residue of " + q.to_string() + " requested at p = " +
                           std::to_string(p));
    mpz_class m = pow_of_prime(p, static_cast<unsigned long>(e));
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), q.denominator().get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotPIntegral("denominator not invertible modulo p^e");
    mpz_class r = (q.numerator() % m) * den_inv % m;
    if (sgn(r) < 0) r += m;
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class b(1);
    for (unsigned long i = 1; i <= k; ++i) {
        b *= mpz_class(static_cast<unsigned long>(n - k + i));
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), i);
    }
    return b;
}

BigRational pow(const BigRational& base, long long e) {
    if (e < 0) {
        if (base.is_zero()) throw DivisionByZero("inverse of zero rational");
        return pow(BigRational(1) / base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(num, den);
}

}  // namespace aperylab
