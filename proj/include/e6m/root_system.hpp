#ifndef E6M_ROOT_SYSTEM_HPP
#define E6M_ROOT_SYSTEM_HPP

#include "e6m/types.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e6m {

// Symmetric simply-laced Cartan matrix: 2 on the diagonal, 0 or -1 off it.
// This is the ADE scope; symmetrizable matrices are not accepted.
class CartanMatrix {
 public:
  explicit CartanMatrix(Mat entries);

  int rank() const { return static_cast<int>(a_.rows()); }
  const Mat& entries() const { return a_; }
  Int at(int i, int j) const { return a_(i, j); }

  // Chain diagram (type A of the given rank).
  static CartanMatrix chain(int rank);
  // Simple roots 0..rank-1 with the given undirected bonds (0-based).
  static CartanMatrix from_edges(int rank, const std::vector<std::pair<int, int>>& edges);
  // E6 with the branch node at index 1 (display index 2) attached to index 3
  // (display index 4); the chain is 1-3-4-5-6 in display indices.
  static CartanMatrix e6();

 private:
  Mat a_;
};

struct RootSystem {
  CartanMatrix cartan;
  // Sorted by (height, lexicographic coefficients): deterministic ordering.
  std::vector<Vec> positive_roots;
  // Positive root of maximal height; unique for connected diagrams.
  Vec highest_root;
  bool highest_root_unique = true;

  int rank() const { return cartan.rank(); }
  // Index into positive_roots, or -1.
  int index_of(const Vec& v) const;
  bool is_positive_root(const Vec& v) const { return index_of(v) >= 0; }
  bool is_root(const Vec& v) const;

  VecMap<int> index;  // filled by generate_positive_roots
};

inline Int height(const Vec& root) { return root.sum(); }

// Root-string closure from the simple roots: beta + alpha_i is a root iff
// q = p - <beta, alpha_i^vee> > 0 where p is the depth of the string
// beta, beta - alpha_i, ... inside the root set. Iterates by height.
RootSystem generate_positive_roots(const CartanMatrix& cartan);

// <beta, gamma^vee> = 2(beta,gamma)/(gamma,gamma). With every root of norm 2
// this is the plain bilinear form beta^T A gamma. gamma must have norm 2.
Int pairing(const RootSystem& rs, const Vec& beta, const Vec& gamma);

// s_gamma(beta) = beta - <beta,gamma^vee> gamma. The result must land in the
// root set again; anything else signals a generation bug.
Vec reflect_root(const RootSystem& rs, const Vec& beta, const Vec& gamma);

Int root_norm(const RootSystem& rs, const Vec& v);

// Compact name of a positive root, e.g. (0,1,1,2,1,0) -> "25,4" meaning
// alpha_2+...+alpha_5 + alpha_4. Groups are maximal runs of consecutive
// display indices, consumed greedily from the lowest index.
std::string compact_name(const Vec& coeffs);

// Inverse of compact_name on valid tokens; accepts any comma-separated list
// of single indices "k" and runs "ij" (i < j), 1-based display indices.
Vec expand_name(std::string_view token, int rank);

}  // namespace e6m

#endif
