#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "aperylab/context.hpp"

namespace aperylab {

// Composition (a_1,...,a_r) of positive integers indexing a multiple harmonic
// sum; possibly empty. weight = sum of entries, depth = r.
class MhsIndex {
  public:
    MhsIndex() = default;
    MhsIndex(std::initializer_list<int> exps) : exps_(exps) { validate(); }
    explicit MhsIndex(std::vector<int> exps) : exps_(std::move(exps)) { validate(); }

    // (value,...,value) with count entries; count 0 gives the empty index.
    static MhsIndex repeated(int value, int count) {
        return MhsIndex(std::vector<int>(static_cast<std::size_t>(count), value));
    }

    int depth() const { return static_cast<int>(exps_.size()); }
    int weight() const {
        int w = 0;
        for (int a : exps_) w += a;
        return w;
    }
    bool empty() const { return exps_.empty(); }
    const std::vector<int>& exponents() const { return exps_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(exps_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const MhsIndex& a, const MhsIndex& b) { return a.exps_ == b.exps_; }

  private:
    void validate() const {
        for (int a : exps_)
            if (a < 1) throw std::invalid_argument("MhsIndex entries must be >= 1");
    }

    std::vector<int> exps_;
};

/*
 * H_n(a_1,...,a_r) = sum over 0 < k_1 < ... < k_r <= n of prod k_i^(-a_i),
 * by the layered recurrence S_j(m) = S_j(m-1) + S_{j-1}(m-1) / m^{a_j}
 * (innermost exponent first), O(n*r) field operations and O(r) state.
 * Empty index gives 1; n < depth gives 0.
 */
template <class Ctx>
typename Ctx::Value mhs(const Ctx& ctx, long long n, const MhsIndex& idx) {
    const int r = idx.depth();
    std::vector<typename Ctx::Value> s(static_cast<std::size_t>(r) + 1, ctx.integer(0));
    s[0] = ctx.integer(1);
    for (long long m = 1; m <= n; ++m)
        for (int j = r; j >= 1; --j)
            s[static_cast<std::size_t>(j)] +=
                s[static_cast<std::size_t>(j - 1)] * ctx.inv_pow(m, idx[j - 1]);
    return s[static_cast<std::size_t>(r)];
}

// Odd-indexed variant: denominators (2k_i + 1) over 0 <= k_1 < ... < k_r < n.
template <class Ctx>
typename Ctx::Value odd_mhs(const Ctx& ctx, long long n, const MhsIndex& idx) {
    const int r = idx.depth();
    std::vector<typename Ctx::Value> s(static_cast<std::size_t>(r) + 1, ctx.integer(0));
    s[0] = ctx.integer(1);
    for (long long m = 0; m < n; ++m)
        for (int j = r; j >= 1; --j)
            s[static_cast<std::size_t>(j)] +=
                s[static_cast<std::size_t>(j - 1)] * ctx.inv_pow(2 * m + 1, idx[j - 1]);
    return s[static_cast<std::size_t>(r)];
}

namespace detail {

template <class Ctx>
void mhs_enumerate(const Ctx& ctx, const std::vector<long long>& denoms, const MhsIndex& idx,
                   int level, std::size_t start, typename Ctx::Value term,
                   typename Ctx::Value& acc) {
    if (level == idx.depth()) {
        acc += term;
        return;
    }
    for (std::size_t i = start; i < denoms.size(); ++i)
        mhs_enumerate(ctx, denoms, idx, level + 1, i + 1,
                      term * ctx.inv_pow(denoms[i], idx[level]), acc);
}

}  // namespace detail

// Direct enumeration over all strictly increasing tuples; test-scale oracle
// for both mhs (odd_variant = false) and odd_mhs (odd_variant = true).
template <class Ctx>
typename Ctx::Value mhs_bruteforce(const Ctx& ctx, long long n, const MhsIndex& idx,
                                   bool odd_variant) {
    std::vector<long long> denoms;
    if (odd_variant) {
        for (long long k = 0; k < n; ++k) denoms.push_back(2 * k + 1);
    } else {
        for (long long k = 1; k <= n; ++k) denoms.push_back(k);
    }
    auto acc = ctx.integer(0);
    detail::mhs_enumerate(ctx, denoms, idx, 0, 0, ctx.integer(1), acc);
    return acc;
}

}  // namespace aperylab
