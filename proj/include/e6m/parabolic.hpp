#ifndef E6M_PARABOLIC_HPP
#define E6M_PARABOLIC_HPP

#include "e6m/root_system.hpp"

#include <string>
#include <vector>

namespace e6m {

// Compact/noncompact split of the positive roots relative to a parabolic
// chosen by a set of marked simple roots: a positive root is noncompact iff
// its coefficient at every marked index is > 0.
struct ParabolicSplit {
  int rank = 0;
  std::vector<int> marker;  // 0-based, sorted, nonempty
  std::vector<int> compact_indices;     // into rs.positive_roots, ascending
  std::vector<int> noncompact_indices;  // into rs.positive_roots, ascending
  std::vector<Vec> compact_roots;
  std::vector<Vec> noncompact_roots;

  bool is_marked(int simple_index) const;
  bool is_noncompact(const Vec& positive_root) const;
};

ParabolicSplit split_roots(const RootSystem& rs, std::vector<int> marker);

// Simple-root indices outside the marker, ascending (0-based). These are the
// signature slots: (1,3,4,5,6) in display indices for the E6 split at {2}.
std::vector<int> compact_simple_positions(const ParabolicSplit& split);

// Real-form data for E6(-14) attached to the split at display index 2.
// Documented constants for display only; nothing here is computed.
struct RealFormProfile {
  std::string algebra;
  std::string maximal_compact;
  int dim_p = 0;
  int dim_n0 = 0;
  int split_rank = 0;
  std::string m0;
  std::string levi;
  int dim_nilradical = 0;
  int dim_a = 0;
};

RealFormProfile e6_minus14_profile();

}  // namespace e6m

#endif
