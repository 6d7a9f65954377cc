#ifndef E6M_WEIGHTS_HPP
#define E6M_WEIGHTS_HPP

#include "e6m/parabolic.hpp"
#include "e6m/root_system.hpp"

#include <vector>

namespace e6m {

// Weights are stored rho-shifted throughout: a weight is the integer label
// vector m with m_i = (Lambda+rho, alpha_i^vee). The all-ones vector is rho
// itself. The unshifted Lambda (labels m_i - 1) appears only in display code.

// Harish-Chandra parameter m_beta = (Lambda+rho, beta) = sum_i c_i(beta) m_i.
inline Int hc_param(const Vec& labels, const Vec& beta) { return beta.dot(labels); }

// Signature {n_1,n_3,n_4,n_5,n_6; c} of an ER. c may be a half-integer and is
// stored exactly as 2c; the conformal weight d = c + 11/2 likewise as 2d.
struct SignatureChi {
  Vec n;      // labels at the compact simple positions
  Int two_c = 0;
  Int two_d = 0;

  std::string c_string() const { return half_string(two_c); }
  std::string d_string() const { return half_string(two_d); }

  friend bool operator==(const SignatureChi& a, const SignatureChi& b) {
    return a.two_c == b.two_c && vec_equal(a.n, b.n);
  }
};

// (two_c, n) lexicographic: the canonical vertex order.
bool signature_less(const SignatureChi& a, const SignatureChi& b);

struct BggDatum {
  int root_index = -1;  // into rs.positive_roots
  Int m = 0;
};

// All noncompact positive beta with m_beta > 0, in the root ordering. Each
// pair (beta, m) is the datum of one intertwining differential operator.
std::vector<BggDatum> bgg_reducibilities(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split);

// Labels of s_beta(Lambda+rho): m'_j = m_j - m_beta <beta, alpha_j^vee>.
// Involution; negates hc_param along beta.
Vec shifted_reflect(const Vec& labels, const Vec& beta, const RootSystem& rs);

SignatureChi to_signature(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split);

// true iff every compact-position label is > 0 (strict) or >= 0 (non-strict).
bool is_m_dominant(const Vec& labels, const ParabolicSplit& split, bool strict);

}  // namespace e6m

#endif
