#pragma once

#include <stdexcept>
#include <string>

namespace aperylab {

// Error taxonomy shared by the arithmetic kernels and the verification engine.

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("rational with zero denominator") {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : std::domain_error(what) {}
};

// Requested a residue of a value with negative p-adic valuation.
struct NotPIntegral : std::domain_error {
    explicit NotPIntegral(const std::string& what = "value is not p-integral")
        : std::domain_error(what) {}
};

// A p-adic value is not known to enough absolute precision to answer the query.
struct PrecisionExhausted : std::runtime_error {
    long long available;
    long long required;
    PrecisionExhausted(long long avail, long long req)
        : std::runtime_error("p-adic precision exhausted: have O(p^" + std::to_string(avail) +
                             "), need p^" + std::to_string(req)),
          available(avail),
          required(req) {}
};

struct IndexTooLarge : std::out_of_range {
    explicit IndexTooLarge(const std::string& what) : std::out_of_range(what) {}
};

// bernoulli_mod_p needs every division by 1..m+1 to be invertible, i.e. m + 1 < p.
struct NotPRegularRange : std::domain_error {
    explicit NotPRegularRange(const std::string& what) : std::domain_error(what) {}
};

struct UnknownSeries : std::invalid_argument {
    explicit UnknownSeries(const std::string& name)
        : std::invalid_argument("unknown series id: " + name) {}
};

// Binary p-adic operation across two different primes.
struct PrimeMismatch : std::invalid_argument {
    PrimeMismatch() : std::invalid_argument("p-adic operands carry different primes") {}
};

}  // namespace aperylab
