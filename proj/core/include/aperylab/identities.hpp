#pragma once

#include <string>

#include "aperylab/rational.hpp"

namespace aperylab {

// Exact-arithmetic verification of the finite central-binomial identities.
// These hold for every n, so a single counterexample means a bug.

struct IdentityCheck {
    BigRational lhs;
    BigRational rhs;
    bool equal = false;
};

// Finite Leshchiner-type identity for odd weight r >= 1:
// sum_k C(2k,k)/16^k * (alternating odd-MHS tower) against the alternating
// (2k+1)-power sum plus the inverse-binomial correction term.
IdentityCheck leshchiner_odd(int n, int r);

// Even-weight companion (r >= 2 even), with (-16)^k weights and the
// correction term attached to (2k+1)^2.
IdentityCheck leshchiner_even(int n, int r);

struct CccCheck {
    BigRational binomial_form;
    BigRational product_form;
    BigRational mhs_form;
    bool all_equal = false;
};

// (-16)^k C(n+k,2k) / C(2k,k)  =  prod_{j<k} (1 - q^2/(2j+1)^2)
//                              =  sum_j (-1)^j q^(2j) Hbar_k({2}^j),
// with q = 2n + 1, checked as an algebraic identity for every n, 0 <= k <= n.
CccCheck ccc_product(int n, int k);

struct InverseBinomialCheck {
    bool id1 = false;  // weight-1 inverse-binomial sum
    bool id2 = false;  // weight-2 inverse-binomial sum
};

// sum_{k=0}^{n} (-16)^k C(n+k,2k) / ((2k+1)   C(2k,k)) = 2(-1)^n sum_{k<n} (-1)^k/(2k+1) + 1/(2n+1)
// sum_{k=0}^{n} (-16)^k C(n+k,2k) / ((2k+1)^2 C(2k,k)) = 1/(2n+1)^2
InverseBinomialCheck inverse_binomial_sums(int n);

enum class SeriesId { arctan_pi3, zeta2_pi2_10, cube_7pi3_216, h2_pi3_648 };

struct SeriesLimit {
    double partial = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
};

// Floating partial sum of the stated series against its closed form.
SeriesLimit series_limit(SeriesId id, int terms);

SeriesId parse_series_id(const std::string& name);  // UnknownSeries on bad input
std::string series_id_name(SeriesId id);

// Investigative helper, no pass/fail contract attached:
// sum_{k=0}^{n-1} C(n+k, 2k+1) (-1)^k / (2k+1), evaluated exactly.
BigRational alternating_binomial_probe(int n);

}  // namespace aperylab
