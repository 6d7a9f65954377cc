#include "e6m/parabolic.hpp"

#include <algorithm>

namespace e6m {

bool ParabolicSplit::is_marked(int simple_index) const {
  return std::binary_search(marker.begin(), marker.end(), simple_index);
}

bool ParabolicSplit::is_noncompact(const Vec& positive_root) const {
  for (int m : marker) {
    if (positive_root[m] <= 0) return false;
  }
  return true;
}

ParabolicSplit split_roots(const RootSystem& rs, std::vector<int> marker) {
  if (marker.empty()) {
    throw std::invalid_argument("split_roots: empty marker selects no parabolic");
  }
  std::sort(marker.begin(), marker.end());
  marker.erase(std::unique(marker.begin(), marker.end()), marker.end());
  for (int m : marker) {
    if (m < 0 || m >= rs.rank()) {
      throw std::invalid_argument("split_roots: marker index " + std::to_string(m + 1) + " out of range");
    }
  }

  ParabolicSplit split;
  split.rank = rs.rank();
  split.marker = std::move(marker);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const Vec& root = rs.positive_roots[k];
    if (split.is_noncompact(root)) {
      split.noncompact_indices.push_back(static_cast<int>(k));
      split.noncompact_roots.push_back(root);
    } else {
      split.compact_indices.push_back(static_cast<int>(k));
      split.compact_roots.push_back(root);
    }
  }
  return split;
}

std::vector<int> compact_simple_positions(const ParabolicSplit& split) {
  std::vector<int> out;
  for (int i = 0; i < split.rank; ++i) {
    if (!split.is_marked(i)) out.push_back(i);
  }
  return out;
}

RealFormProfile e6_minus14_profile() {
  RealFormProfile p;
  p.algebra = "E6(-14)";
  p.maximal_compact = "so(10) (+) so(2)";
  p.dim_p = 32;
  p.dim_n0 = 30;
  p.split_rank = 2;
  p.m0 = "so(6) (+) so(2)";
  p.levi = "su(5,1)";
  p.dim_nilradical = 21;
  p.dim_a = 1;
  return p;
}

}  // namespace e6m
