#include <cstdint>
#include <string>
#include <vector>

#include "aperylab/bernoulli.hpp"
#include "aperylab/congruences.hpp"
#include "aperylab/mhs.hpp"

namespace aperylab {

namespace {

using std::uint64_t;

template <class L, class R>
void set_evals(CongruenceStatement& s, L lhs, R rhs) {
    s.lhs_exact = [lhs](const ExactContext& c, uint64_t p) { return lhs(c, p); };
    s.lhs_padic = [lhs](const PadicContext& c, uint64_t p) { return lhs(c, p); };
    s.rhs_exact = [rhs](const ExactContext& c, uint64_t p) { return rhs(c, p); };
    s.rhs_padic = [rhs](const PadicContext& c, uint64_t p) { return rhs(c, p); };
}

long long half(uint64_t p) { return static_cast<long long>((p - 1) / 2); }
long long quarter(uint64_t p) { return static_cast<long long>(p / 4); }

long long small_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

int sgn_pow(long long s) { return (s & 1) ? -1 : 1; }

// sum_{k=0}^{count-1} (-1)^k / (2k+1)
template <class Ctx>
typename Ctx::Value alternating_odd_sum(const Ctx& ctx, long long count) {
    auto acc = ctx.integer(0);
    for (long long k = 0; k < count; ++k) {
        auto t = ctx.inv_pow(2 * k + 1, 1);
        if (k & 1)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

// sum_{k=0}^{count-1} (-1)^k / (2k+1)^3
template <class Ctx>
typename Ctx::Value alternating_odd_cube_sum(const Ctx& ctx, long long count) {
    auto acc = ctx.integer(0);
    for (long long k = 0; k < count; ++k) {
        auto t = ctx.inv_pow(2 * k + 1, 3);
        if (k & 1)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

// C(p-1, (p-1)/2) as a product of p-units (p - k)/k.
template <class Ctx>
typename Ctx::Value central_binomial_mod(const Ctx& ctx, uint64_t p) {
    auto acc = ctx.integer(1);
    const long long n = half(p);
    for (long long k = 1; k <= n; ++k)
        acc *= ctx.ratio(static_cast<long long>(p) - k, k);
    return acc;
}

// Kinds of weighted central-binomial sums over k = 0..(p-3)/2. weight_sign
// +1 uses C(2k,k)/16^k, -1 uses C(2k,k)/(-16)^k; the functor maps
// (ctx, k, hbar2_k, hbar22_k) to the cofactor of the k-th term.
template <class Ctx, class F>
typename Ctx::Value central_sum(const Ctx& ctx, uint64_t p, int weight_sign, F cofactor) {
    const long long n = half(p);
    auto acc = ctx.integer(0);
    auto term = ctx.integer(1);                 // C(2k,k)/(+-16)^k
    auto hbar2 = ctx.integer(0);                // Hbar_k(2)
    auto hbar22 = ctx.integer(0);               // Hbar_k(2,2)
    for (long long k = 0; k < n; ++k) {
        acc += term * cofactor(ctx, k, hbar2, hbar22);
        auto inv_sq = ctx.inv_pow(2 * k + 1, 2);
        hbar22 += hbar2 * inv_sq;
        hbar2 += inv_sq;
        term *= ctx.ratio(weight_sign * (2 * k + 1), 8 * (k + 1));
    }
    return acc;
}

// sum over k of C(2k,k)/((-16)^k C(n+k,2k+1)) * Hbar_k(2)/(2k+1), n = (p-1)/2.
template <class Ctx>
typename Ctx::Value inverse_binomial_hbar2_sum(const Ctx& ctx, uint64_t p) {
    const long long n = half(p);
    auto acc = ctx.integer(0);
    auto term = ctx.ratio(1, n);  // k = 0: C(0,0)/C(n,1)
    auto hbar2 = ctx.integer(0);
    for (long long k = 0; k < n; ++k) {
        acc += term * hbar2 * ctx.inv_pow(2 * k + 1, 1);
        hbar2 += ctx.inv_pow(2 * k + 1, 2);
        if (k + 1 < n)
            term *= ctx.ratio(-(2 * k + 1) * (2 * k + 3), 4 * (n + k + 1) * (n - k - 1));
    }
    return acc;
}

void add_lit_full(std::vector<CongruenceStatement>& out) {
    // H_{p-1}(r) against Bernoulli multiples: mod p^3 for odd r, p^2 for even r.
    for (int r : {1, 3, 5}) {
        CongruenceStatement s;
        s.family = "lit_full_odd";
        s.params = "r=" + std::to_string(r);
        s.description = "H_{p-1}(" + std::to_string(r) + ") == -r(r+1)/(2(r+2)) p^2 B_{p-r-2} (mod p^3)";
        s.exponent = 3;
        s.requires_p_above = static_cast<uint64_t>(r) + 2;
        set_evals(
            s,
            [r](const auto& ctx, uint64_t p) {
                return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{r});
            },
            [r](const auto& ctx, uint64_t p) {
                auto b = ctx.bernoulli(static_cast<int>(p) - r - 2);
                auto psq = pow(ctx.integer(static_cast<long long>(p)), 2);
                return ctx.ratio(-static_cast<long long>(r) * (r + 1), 2LL * (r + 2)) * psq * b;
            });
        out.push_back(std::move(s));
    }
    for (int r : {2, 4, 6}) {
        CongruenceStatement s;
        s.family = "lit_full_even";
        s.params = "r=" + std::to_string(r);
        s.description = "H_{p-1}(" + std::to_string(r) + ") == r/(r+1) p B_{p-r-1} (mod p^2)";
        s.exponent = 2;
        s.requires_p_above = static_cast<uint64_t>(r) + 2;
        set_evals(
            s,
            [r](const auto& ctx, uint64_t p) {
                return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{r});
            },
            [r](const auto& ctx, uint64_t p) {
                auto b = ctx.bernoulli(static_cast<int>(p) - r - 1);
                return ctx.ratio(r, r + 1) * ctx.integer(static_cast<long long>(p)) * b;
            });
        out.push_back(std::move(s));
    }
}

void add_lit_double(std::vector<CongruenceStatement>& out) {
    // H_{p-1}(r,s) == (-1)^s/(r+s) C(r+s,s) B_{p-r-s} (mod p)
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) {
            CongruenceStatement st;
            st.family = "lit_double";
            st.params = "r=" + std::to_string(r) + ";s=" + std::to_string(s);
            st.description = "H_{p-1}(r,s) == (-1)^s/(r+s) C(r+s,s) B_{p-r-s} (mod p)";
            st.exponent = 1;
            st.requires_p_above = static_cast<uint64_t>(r + s);
            set_evals(
                st,
                [r, s](const auto& ctx, uint64_t p) {
                    return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{r, s});
                },
                [r, s](const auto& ctx, uint64_t p) {
                    auto b = ctx.bernoulli(static_cast<int>(p) - r - s);
                    return ctx.ratio(sgn_pow(s) * small_binom(r + s, s), r + s) * b;
                });
            out.push_back(std::move(st));
        }
}

void add_lit_triple(std::vector<CongruenceStatement>& out) {
    // H_{p-1}(r,s,t), odd weight w <= 7:
    //   == 1/(2w) ((-1)^r C(w,r) - (-1)^t C(w,t)) B_{p-w} (mod p)
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s)
            for (int t = 1; t <= 5; ++t) {
                const int w = r + s + t;
                if (w > 7 || w % 2 == 0) continue;
                CongruenceStatement st;
                st.family = "lit_triple";
                st.params = "r=" + std::to_string(r) + ";s=" + std::to_string(s) +
                            ";t=" + std::to_string(t);
                st.description =
                    "H_{p-1}(r,s,t) == ((-1)^r C(w,r) - (-1)^t C(w,t))/(2w) B_{p-w} (mod p)";
                st.exponent = 1;
                st.requires_p_above = static_cast<uint64_t>(w);
                set_evals(
                    st,
                    [r, s, t](const auto& ctx, uint64_t p) {
                        return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{r, s, t});
                    },
                    [r, t, w](const auto& ctx, uint64_t p) {
                        auto b = ctx.bernoulli(static_cast<int>(p) - w);
                        const long long c =
                            sgn_pow(r) * small_binom(w, r) - sgn_pow(t) * small_binom(w, t);
                        return ctx.ratio(c, 2LL * w) * b;
                    });
                out.push_back(std::move(st));
            }
}

void add_lit_h1_and_h12(std::vector<CongruenceStatement>& out) {
    {
        CongruenceStatement s;
        s.family = "lit_h1_235";
        s.description = "H_{p-1}(1) == -p/2 H_{p-1}(2) - p^2/6 H_{p-1}(3) (mod p^5)";
        s.exponent = 5;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{1});
            },
            [](const auto& ctx, uint64_t p) {
                const long long n = static_cast<long long>(p) - 1;
                auto pv = ctx.integer(static_cast<long long>(p));
                return ctx.ratio(-1, 2) * pv * mhs(ctx, n, MhsIndex{2}) +
                       ctx.ratio(-1, 6) * pow(pv, 2) * mhs(ctx, n, MhsIndex{3});
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "lit_h12";
        s.description = "H_{p-1}(1,2) == -3 H_{p-1}(1)/p^2 + 1/2 p^2 B_{p-5} (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{1, 2});
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                auto psq = pow(ctx.integer(pp), 2);
                return ctx.integer(-3) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(1, 2) * psq * ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
}

void add_lit_half(std::vector<CongruenceStatement>& out) {
    // H_{(p-1)/2}(r) for p > r + 4: odd r > 1 mod p, even r mod p^2.
    for (int r : {3, 5}) {
        CongruenceStatement s;
        s.family = "lit_half_odd";
        s.params = "r=" + std::to_string(r);
        s.description = "H_{(p-1)/2}(" + std::to_string(r) + ") == -(2^r-2)/r B_{p-r} (mod p)";
        s.exponent = 1;
        s.requires_p_above = static_cast<uint64_t>(r) + 4;
        set_evals(
            s,
            [r](const auto& ctx, uint64_t p) { return mhs(ctx, half(p), MhsIndex{r}); },
            [r](const auto& ctx, uint64_t p) {
                auto b = ctx.bernoulli(static_cast<int>(p) - r);
                return ctx.ratio(-((1LL << r) - 2), r) * b;
            });
        out.push_back(std::move(s));
    }
    for (int r : {2, 4, 6}) {
        CongruenceStatement s;
        s.family = "lit_half_even";
        s.params = "r=" + std::to_string(r);
        s.description = "H_{(p-1)/2}(" + std::to_string(r) +
                        ") == r(2^{r+1}-1)/(2(r+1)) p B_{p-r-1} (mod p^2)";
        s.exponent = 2;
        s.requires_p_above = static_cast<uint64_t>(r) + 4;
        set_evals(
            s,
            [r](const auto& ctx, uint64_t p) { return mhs(ctx, half(p), MhsIndex{r}); },
            [r](const auto& ctx, uint64_t p) {
                auto b = ctx.bernoulli(static_cast<int>(p) - r - 1);
                return ctx.ratio(r * ((1LL << (r + 1)) - 1), 2LL * (r + 1)) *
                       ctx.integer(static_cast<long long>(p)) * b;
            });
        out.push_back(std::move(s));
    }
}

void add_lemma_expansions(std::vector<CongruenceStatement>& out) {
    // Half-range to full-range expansion, truncated after a p-powers:
    // H_{p-1}(r) == H_n(r) + (-1)^r sum_{k=0}^{a} C(r-1+k,k) H_n(r+k) p^k (mod p^{a+1})
    for (int r = 1; r <= 4; ++r)
        for (int a = 1; a <= 4; ++a) {
            CongruenceStatement s;
            s.family = "lem_C1";
            s.params = "r=" + std::to_string(r) + ";a=" + std::to_string(a);
            s.description =
                "H_{p-1}(r) == H_{(p-1)/2}(r) + (-1)^r sum_k C(r-1+k,k) H_{(p-1)/2}(r+k) p^k "
                "(mod p^{a+1})";
            s.exponent = a + 1;
            s.requires_p_above = static_cast<uint64_t>(r) + 2;
            set_evals(
                s,
                [r](const auto& ctx, uint64_t p) {
                    return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{r});
                },
                [r, a](const auto& ctx, uint64_t p) {
                    const long long n = half(p);
                    auto acc = mhs(ctx, n, MhsIndex{r});
                    auto tail = ctx.integer(0);
                    auto pv = ctx.integer(static_cast<long long>(p));
                    for (int k = 0; k <= a; ++k)
                        tail += ctx.integer(small_binom(r - 1 + k, k)) *
                                mhs(ctx, n, MhsIndex{r + k}) * pow(pv, k);
                    if (r & 1)
                        acc -= tail;
                    else
                        acc += tail;
                    return acc;
                });
            out.push_back(std::move(s));
        }
    // Quarter-range variant:
    // H_n(r) == H_m(r) + (-2)^r sum_k C(r-1+k,k) H_n(r+k) p^k
    //                 - (-1)^r sum_k C(r-1+k,k) H_m(r+k)/2^k p^k   (mod p^{a+1})
    for (int r = 1; r <= 4; ++r)
        for (int a = 1; a <= 4; ++a) {
            CongruenceStatement s;
            s.family = "lem_C3";
            s.params = "r=" + std::to_string(r) + ";a=" + std::to_string(a);
            s.description =
                "H_{(p-1)/2}(r) == H_{[p/4]}(r) + (-2)^r sum_k C(r-1+k,k) H_{(p-1)/2}(r+k) p^k "
                "- (-1)^r sum_k C(r-1+k,k) H_{[p/4]}(r+k)/2^k p^k (mod p^{a+1})";
            s.exponent = a + 1;
            s.requires_p_above = static_cast<uint64_t>(r) + 2;
            set_evals(
                s,
                [r](const auto& ctx, uint64_t p) { return mhs(ctx, half(p), MhsIndex{r}); },
                [r, a](const auto& ctx, uint64_t p) {
                    const long long n = half(p);
                    const long long m = quarter(p);
                    auto pv = ctx.integer(static_cast<long long>(p));
                    auto acc = mhs(ctx, m, MhsIndex{r});
                    auto tail_n = ctx.integer(0);
                    auto tail_m = ctx.integer(0);
                    for (int k = 0; k <= a; ++k) {
                        auto pk = pow(pv, k);
                        auto c = ctx.integer(small_binom(r - 1 + k, k));
                        tail_n += c * mhs(ctx, n, MhsIndex{r + k}) * pk;
                        tail_m += c * mhs(ctx, m, MhsIndex{r + k}) * ctx.inv_pow(2, k) * pk;
                    }
                    acc += ctx.integer(sgn_pow(r) * (1LL << r)) * tail_n;
                    if (r & 1)
                        acc += tail_m;
                    else
                        acc -= tail_m;
                    return acc;
                });
            out.push_back(std::move(s));
        }
    // Half-range double sums of odd weight:
    // H_n(r,s) == B_{p-r-s}/(2(r+s)) ((-1)^s C(r+s,s) + 2^{r+s} - 2) (mod p)
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s) {
            const int w = r + s;
            if (w > 7 || w % 2 == 0) continue;
            CongruenceStatement st;
            st.family = "lem_C2";
            st.params = "r=" + std::to_string(r) + ";s=" + std::to_string(s);
            st.description =
                "H_{(p-1)/2}(r,s) == B_{p-r-s}/(2(r+s)) ((-1)^s C(r+s,s) + 2^{r+s} - 2) (mod p)";
            st.exponent = 1;
            st.requires_p_above = static_cast<uint64_t>(w);
            set_evals(
                st,
                [r, s](const auto& ctx, uint64_t p) {
                    return mhs(ctx, half(p), MhsIndex{r, s});
                },
                [s, w](const auto& ctx, uint64_t p) {
                    auto b = ctx.bernoulli(static_cast<int>(p) - w);
                    const long long c = sgn_pow(s) * small_binom(w, s) + (1LL << w) - 2;
                    return ctx.ratio(c, 2LL * w) * b;
                });
            out.push_back(std::move(st));
        }
}

void add_wmezzo_and_corollaries(std::vector<CongruenceStatement>& out) {
    {
        CongruenceStatement s;
        s.family = "thm_wmezzo";
        s.description =
            "H_{(p-1)/2}(2) + 7/6 p H_{(p-1)/2}(3) + 5/8 p^2 H_{(p-1)/2}(4) == 0 (mod p^4)";
        s.exponent = 4;
        s.requires_p_above = 4;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto pv = ctx.integer(static_cast<long long>(p));
                return mhs(ctx, n, MhsIndex{2}) + ctx.ratio(7, 6) * pv * mhs(ctx, n, MhsIndex{3}) +
                       ctx.ratio(5, 8) * pow(pv, 2) * mhs(ctx, n, MhsIndex{4});
            },
            [](const auto& ctx, uint64_t) { return ctx.integer(0); });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "cor_Hp2";
        s.description = "H_{p-1}(2) == -2 H_{p-1}(1)/p + 2/5 p^3 B_{p-5} (mod p^4)";
        s.exponent = 4;
        s.division_depth = 1;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{2});
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.integer(-2) * h1 * ctx.inv_pow(pp, 1) +
                       ctx.ratio(2, 5) * pow(ctx.integer(pp), 3) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "cor_H2";
        s.description = "H_{(p-1)/2}(2) == -7 H_{p-1}(1)/p + 17/10 p^3 B_{p-5} (mod p^4)";
        s.exponent = 4;
        s.division_depth = 1;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) { return mhs(ctx, half(p), MhsIndex{2}); },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.integer(-7) * h1 * ctx.inv_pow(pp, 1) +
                       ctx.ratio(17, 10) * pow(ctx.integer(pp), 3) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "cor_H3";
        s.description = "H_{(p-1)/2}(3) == 6 H_{p-1}(1)/p^2 - 81/10 p^2 B_{p-5} (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) { return mhs(ctx, half(p), MhsIndex{3}); },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.integer(6) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(-81, 10) * pow(ctx.integer(pp), 2) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "cor_H12_H13";
        s.description =
            "H_{(p-1)/2}(1,2) + p H_{(p-1)/2}(1,3) == -9/2 H_{p-1}(1)/p^2 - 49/20 p^2 B_{p-5} "
            "(mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                return mhs(ctx, n, MhsIndex{1, 2}) +
                       ctx.integer(static_cast<long long>(p)) * mhs(ctx, n, MhsIndex{1, 3});
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.ratio(-9, 2) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(-49, 20) * pow(ctx.integer(pp), 2) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
}

void add_alternating_theorems(std::vector<CongruenceStatement>& out) {
    // 2(-1)^{(p-1)/2} sum (-1)^k/(2k+1) against the odd-MHS tower (mod p^5) ...
    {
        CongruenceStatement s;
        s.family = "thm_alts";
        s.description =
            "2(-1)^{(p-1)/2} sum_{k<=(p-3)/2} (-1)^k/(2k+1) == Hbar(1) - p Hbar(2) - "
            "p^2 Hbar(2,1) + p^3 Hbar(2,2) + p^4 Hbar(2,2,1) at n=(p-1)/2 (mod p^5)";
        s.exponent = 5;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto lhs = ctx.integer(2) * alternating_odd_sum(ctx, n);
                return (n & 1) ? -lhs : lhs;
            },
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto pv = ctx.integer(static_cast<long long>(p));
                return odd_mhs(ctx, n, MhsIndex{1}) - pv * odd_mhs(ctx, n, MhsIndex{2}) -
                       pow(pv, 2) * odd_mhs(ctx, n, MhsIndex{2, 1}) +
                       pow(pv, 3) * odd_mhs(ctx, n, MhsIndex{2, 2}) +
                       pow(pv, 4) * odd_mhs(ctx, n, MhsIndex{2, 2, 1});
            });
        out.push_back(std::move(s));
    }
    // ... and against ordinary half-range sums plus a Bernoulli tail (mod p^5).
    {
        CongruenceStatement s;
        s.family = "thm_altsb";
        s.description =
            "2(-1)^{(p-1)/2} sum_{k<=(p-3)/2} (-1)^k/(2k+1) == -1/2 H_{(p-1)/2}(1) + "
            "11/16 H_{p-1}(1) - 57/1280 p^4 B_{p-5} (mod p^5)";
        s.exponent = 5;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto lhs = ctx.integer(2) * alternating_odd_sum(ctx, n);
                return (n & 1) ? -lhs : lhs;
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                const long long n = half(p);
                return ctx.ratio(-1, 2) * mhs(ctx, n, MhsIndex{1}) +
                       ctx.ratio(11, 16) * mhs(ctx, pp - 1, MhsIndex{1}) +
                       ctx.ratio(-57, 1280) * pow(ctx.integer(pp), 4) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    // Chain H(2,1,2) == 2 H(1,2,2) == 10 H(2,2,1) == -15/4 B_{p-5} (mod p),
    // checked as the three consecutive pairs plus the closing pair.
    for (int pair = 0; pair <= 3; ++pair) {
        CongruenceStatement s;
        s.family = "note_221";
        s.params = "pair=" + std::to_string(pair);
        s.description =
            "chain H_{(p-1)/2}(2,1,2) == 2H(1,2,2) == 10H(2,2,1) == -15/4 B_{p-5} (mod p), "
            "pair " + std::to_string(pair);
        s.exponent = 1;
        s.requires_p_above = 5;
        auto member = [](const auto& ctx, uint64_t p, int which) ->
            typename std::decay_t<decltype(ctx)>::Value {
            const long long n = half(p);
            switch (which) {
                case 0: return mhs(ctx, n, MhsIndex{2, 1, 2});
                case 1: return ctx.integer(2) * mhs(ctx, n, MhsIndex{1, 2, 2});
                case 2: return ctx.integer(10) * mhs(ctx, n, MhsIndex{2, 2, 1});
                default:
                    return ctx.ratio(-15, 4) * ctx.bernoulli(static_cast<int>(p) - 5);
            }
        };
        const int li = pair == 3 ? 0 : pair;
        const int ri = pair == 3 ? 3 : pair + 1;
        set_evals(
            s,
            [member, li](const auto& ctx, uint64_t p) { return member(ctx, p, li); },
            [member, ri](const auto& ctx, uint64_t p) { return member(ctx, p, ri); });
        out.push_back(std::move(s));
    }
    // Morley-type central binomial congruence, strengthened to mod p^6.
    {
        CongruenceStatement s;
        s.family = "morley6";
        s.description =
            "(-1)^{(p-1)/2} 4^{1-p} C(p-1,(p-1)/2) == 1 - 1/4 p H_{p-1}(1) - 1/80 p^5 B_{p-5} "
            "(mod p^6)";
        s.exponent = 6;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto v = central_binomial_mod(ctx, p) *
                         pow(ctx.integer(4), -(static_cast<long long>(p) - 1));
                return (n & 1) ? -v : v;
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.integer(1) - ctx.ratio(1, 4) * ctx.integer(pp) * h1 -
                       ctx.ratio(1, 80) * pow(ctx.integer(pp), 5) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
}

void add_main_theorems(std::vector<CongruenceStatement>& out) {
    {
        CongruenceStatement s;
        s.family = "mc1";
        s.description =
            "sum_{k<=(p-3)/2} C(2k,k)/(16^k(2k+1)) == (-1)^{(p-1)/2} (H_{p-1}(1)/12 + "
            "3/160 p^4 B_{p-5}) (mod p^5)";
        s.exponent = 5;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return central_sum(ctx, p, +1, [](const auto& c, long long k, const auto&, const auto&) {
                    return c.inv_pow(2 * k + 1, 1);
                });
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                const long long n = half(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                auto v = ctx.ratio(1, 12) * h1 +
                         ctx.ratio(3, 160) * pow(ctx.integer(pp), 4) *
                             ctx.bernoulli(static_cast<int>(p) - 5);
                return (n & 1) ? -v : v;
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "mc2";
        s.description =
            "sum_{k<=(p-3)/2} C(2k,k)/((-16)^k(2k+1)^2) == H_{p-1}(1)/(5p) + 7/200 p^3 B_{p-5} "
            "(mod p^4)";
        s.exponent = 4;
        s.division_depth = 1;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return central_sum(ctx, p, -1, [](const auto& c, long long k, const auto&, const auto&) {
                    return c.inv_pow(2 * k + 1, 2);
                });
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.ratio(1, 5) * h1 * ctx.inv_pow(pp, 1) +
                       ctx.ratio(7, 200) * pow(ctx.integer(pp), 3) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
}

void add_drafts(std::vector<CongruenceStatement>& out) {
    {
        CongruenceStatement s;
        s.family = "s4_sum3";
        s.status = StatementStatus::Draft;
        s.description =
            "(-1)^{(p-1)/2} sum_{k<(p-1)/2} (-1)^k/(2k+1)^3 == -3/32 H_{p-1}(1)/p^2 + "
            "21/1280 p^2 B_{p-5} (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto v = alternating_odd_cube_sum(ctx, n);
                return (n & 1) ? -v : v;
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.ratio(-3, 32) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(21, 1280) * pow(ctx.integer(pp), 2) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "s4_inner";
        s.status = StatementStatus::Draft;
        s.description =
            "sum_k C(2k,k) Hbar_k(2) / ((-16)^k C(n+k,2k+1) (2k+1)) == -9/8 H_{p-1}(1)/p^2 + "
            "9/320 p^2 B_{p-5} (mod p^3), n=(p-1)/2";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) { return inverse_binomial_hbar2_sum(ctx, p); },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.ratio(-9, 8) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(9, 320) * pow(ctx.integer(pp), 2) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "mc3e21";
        s.status = StatementStatus::Draft;
        s.description =
            "(-1)^{(p-1)/2} sum_k C(2k,k)/16^k (1/(2k+1)^3 - 3/4 Hbar_k(2)/(2k+1)) == "
            "3/16 H_{p-1}(1)/p^2 + 3/320 p^2 B_{p-5} (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto v = central_sum(
                    ctx, p, +1, [](const auto& c, long long k, const auto& hbar2, const auto&) {
                        return c.inv_pow(2 * k + 1, 3) -
                               c.ratio(3, 4) * hbar2 * c.inv_pow(2 * k + 1, 1);
                    });
                return (n & 1) ? -v : v;
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                return ctx.ratio(3, 16) * h1 * ctx.inv_pow(pp, 2) +
                       ctx.ratio(3, 320) * pow(ctx.integer(pp), 2) *
                           ctx.bernoulli(static_cast<int>(p) - 5);
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "claim_5_864";
        s.status = StatementStatus::Draft;
        s.description =
            "sum_k C(2k,k) Hbar_k(2,2)/(16^k(2k+1)) == (-1)^{(p-1)/2} 5/864 B_{p-5} (mod p)";
        s.exponent = 1;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return central_sum(
                    ctx, p, +1, [](const auto& c, long long k, const auto&, const auto& hbar22) {
                        return hbar22 * c.inv_pow(2 * k + 1, 1);
                    });
            },
            [](const auto& ctx, uint64_t p) {
                const long long n = half(p);
                auto v = ctx.ratio(5, 864) * ctx.bernoulli(static_cast<int>(p) - 5);
                return (n & 1) ? -v : v;
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "mc21_h2";
        s.status = StatementStatus::Draft;
        s.description =
            "sum_k C(2k,k) Hbar_k(2)/(16^k(2k+1)) == (-1)^{(p-1)/2} (H_{p-1}(1)/(12p^2) + "
            "53/2160 p^2 B_{p-5}) (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return central_sum(
                    ctx, p, +1, [](const auto& c, long long k, const auto& hbar2, const auto&) {
                        return hbar2 * c.inv_pow(2 * k + 1, 1);
                    });
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                const long long n = half(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                auto v = ctx.ratio(1, 12) * h1 * ctx.inv_pow(pp, 2) +
                         ctx.ratio(53, 2160) * pow(ctx.integer(pp), 2) *
                             ctx.bernoulli(static_cast<int>(p) - 5);
                return (n & 1) ? -v : v;
            });
        out.push_back(std::move(s));
    }
    {
        CongruenceStatement s;
        s.family = "mc21_cube";
        s.status = StatementStatus::Draft;
        s.description =
            "sum_k C(2k,k)/(16^k(2k+1)^3) == (-1)^{(p-1)/2} (H_{p-1}(1)/(4p^2) + "
            "1/36 p^2 B_{p-5}) (mod p^3)";
        s.exponent = 3;
        s.division_depth = 2;
        s.requires_p_above = 5;
        set_evals(
            s,
            [](const auto& ctx, uint64_t p) {
                return central_sum(ctx, p, +1, [](const auto& c, long long k, const auto&, const auto&) {
                    return c.inv_pow(2 * k + 1, 3);
                });
            },
            [](const auto& ctx, uint64_t p) {
                const long long pp = static_cast<long long>(p);
                const long long n = half(p);
                auto h1 = mhs(ctx, pp - 1, MhsIndex{1});
                auto v = ctx.ratio(1, 4) * h1 * ctx.inv_pow(pp, 2) +
                         ctx.ratio(1, 36) * pow(ctx.integer(pp), 2) *
                             ctx.bernoulli(static_cast<int>(p) - 5);
                return (n & 1) ? -v : v;
            });
        out.push_back(std::move(s));
    }
}

std::vector<CongruenceStatement> build_registry() {
    std::vector<CongruenceStatement> out;
    add_lit_full(out);
    add_lit_double(out);
    add_lit_triple(out);
    add_lit_h1_and_h12(out);
    add_lit_half(out);
    add_lemma_expansions(out);
    add_wmezzo_and_corollaries(out);
    add_alternating_theorems(out);
    add_main_theorems(out);
    add_drafts(out);
    return out;
}

}  // namespace

const std::vector<CongruenceStatement>& registry() {
    static const std::vector<CongruenceStatement> reg = build_registry();
    return reg;
}

std::vector<std::string> registry_families() {
    std::vector<std::string> out;
    for (const auto& s : registry())
        if (out.empty() || out.back() != s.family) out.push_back(s.family);
    return out;
}

bool registry_has_family(const std::string& family) {
    for (const auto& s : registry())
        if (s.family == family) return true;
    return false;
}

}  // namespace aperylab
