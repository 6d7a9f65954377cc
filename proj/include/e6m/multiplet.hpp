#ifndef E6M_MULTIPLET_HPP
#define E6M_MULTIPLET_HPP

#include "e6m/weights.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace e6m {

struct MultipletEdge {
  int from = -1;
  int to = -1;
  int root = -1;  // index into rs.positive_roots (always noncompact)
  Int m = 0;      // BGG parameter, > 0
};

enum VertexFlag : unsigned {
  kFlagFiniteDimSubrep = 1u << 0,  // origin of a strictly dominant multiplet
  kFlagTrivialIrrep = 1u << 1,     // ... with all labels 1 (conformal weight 0)
  kFlagHoloDS = 1u << 2,           // all noncompact parameters < 0
  kFlagHoloDSLimit = 1u << 3,      // all <= 0 with at least one 0
  kFlagLimit = 1u << 4,            // some compact-position label is 0
  kFlagSelfKS = 1u << 5,           // c = 0, Knapp-Stein partner of itself
};

std::vector<std::string> flag_names(unsigned flags);

// Multiplet graph: vertices are the M-dominant weights in the Weyl orbit of
// the input that are connected to it by BGG arrows along noncompact roots.
// Vertex ids follow the canonical order (two_c ascending, then n-tuple
// lexicographic), stable across runs.
struct MultipletGraph {
  Vec input_labels;
  bool strict_dominance = true;
  std::vector<Vec> vertices;
  std::vector<SignatureChi> signatures;        // parallel to vertices
  std::vector<MultipletEdge> edges;            // sorted by (from, to, root)
  std::vector<std::size_t> reduced_edges;      // indices into edges, ascending
  std::vector<std::pair<int, int>> ks_pairs;   // (two_c <= 0 member, partner)
  int origin = -1;
  // M-dominant orbit weights outside the connected component, reported
  // rather than silently dropped.
  std::vector<Vec> excluded_dominant;
  // Optional display names attached by corpus matching; empty if unmatched.
  std::vector<std::string> names;

  int self_paired_count() const;
  bool is_reduced_edge(std::size_t edge_index) const;
};

// Closure of {w0} under shifted reflections in the simple roots. Throws when
// the closure exceeds cap elements. Result is sorted lexicographically.
std::vector<Vec> weyl_orbit(const Vec& w0, const RootSystem& rs, std::size_t cap = 1000000);

// Labels >= 0 with at least one > 0. Dominance is strict exactly when every
// input label is > 0 (reduced multiplets sit on chamber walls and admit
// zero compact labels).
MultipletGraph build_multiplet(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split);

// Reflection in the highest root: the Knapp-Stein partner. Changes only
// the label at the branch position in E6 and negates c.
Vec ks_partner(const Vec& labels, const RootSystem& rs);

// Keeps an edge iff no directed path of length >= 2 joins its endpoints.
// The edge set must be acyclic; unique for DAGs. Returns ascending indices.
std::vector<std::size_t> transitive_reduction(int vertex_count, const std::vector<MultipletEdge>& edges);

// Reduced edges along the highest root: Knapp-Stein operators that degenerate
// to differential operators.
std::vector<MultipletEdge> degenerate_ks_edges(const MultipletGraph& g, const RootSystem& rs);

// Relabels vertices and edge roots by a diagram automorphism (0-based
// position permutation) and re-canonicalizes. For symmetric input this is a
// graph automorphism.
MultipletGraph conjugate_multiplet(const MultipletGraph& g, const RootSystem& rs, const ParabolicSplit& split,
                                   const std::vector<int>& perm);

// The E6 conjugation 1<->6, 3<->5 (0-based permutation vector).
std::vector<int> e6_conjugation();

unsigned classify_vertex(const MultipletGraph& g, int v, const RootSystem& rs, const ParabolicSplit& split);

// Structural equality of canonical forms: vertices, edges, reduced set,
// KS pairs and origin all coincide.
bool same_canonical_graph(const MultipletGraph& a, const MultipletGraph& b);

}  // namespace e6m

#endif
