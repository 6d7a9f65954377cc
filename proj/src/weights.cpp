#include "e6m/weights.hpp"

namespace e6m {

bool signature_less(const SignatureChi& a, const SignatureChi& b) {
  if (a.two_c != b.two_c) return a.two_c < b.two_c;
  return lex_less(a.n, b.n);
}

std::vector<BggDatum> bgg_reducibilities(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split) {
  std::vector<BggDatum> out;
  for (int idx : split.noncompact_indices) {
    const Int m = hc_param(labels, rs.positive_roots[static_cast<std::size_t>(idx)]);
    if (m > 0) out.push_back({idx, m});
  }
  return out;
}

Vec shifted_reflect(const Vec& labels, const Vec& beta, const RootSystem& rs) {
  const Int m = hc_param(labels, beta);
  return labels - m * (rs.cartan.entries() * beta);
}

SignatureChi to_signature(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split) {
  SignatureChi sig;
  const std::vector<int> positions = compact_simple_positions(split);
  sig.n.resize(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t k = 0; k < positions.size(); ++k) {
    sig.n[static_cast<Eigen::Index>(k)] = labels[positions[k]];
  }
  sig.two_c = -hc_param(labels, rs.highest_root);
  // d - c is half the highest-root parameter of rho: height(highest) = 11 for E6.
  sig.two_d = sig.two_c + height(rs.highest_root);
  return sig;
}

bool is_m_dominant(const Vec& labels, const ParabolicSplit& split, bool strict) {
  for (int i : compact_simple_positions(split)) {
    if (strict ? labels[i] <= 0 : labels[i] < 0) return false;
  }
  return true;
}

}  // namespace e6m
