#include "e6m/multiplet.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace e6m {

std::vector<std::string> flag_names(unsigned flags) {
  std::vector<std::string> out;
  if (flags & kFlagFiniteDimSubrep) out.push_back("finite-dim-subrep");
  if (flags & kFlagTrivialIrrep) out.push_back("trivial-irrep");
  if (flags & kFlagHoloDS) out.push_back("holo-discrete-series");
  if (flags & kFlagHoloDSLimit) out.push_back("holo-discrete-series-limit");
  if (flags & kFlagLimit) out.push_back("limit");
  if (flags & kFlagSelfKS) out.push_back("self-ks");
  return out;
}

int MultipletGraph::self_paired_count() const {
  int n = 0;
  for (auto [a, b] : ks_pairs) {
    if (a == b) ++n;
  }
  return n;
}

bool MultipletGraph::is_reduced_edge(std::size_t edge_index) const {
  return std::binary_search(reduced_edges.begin(), reduced_edges.end(), edge_index);
}

std::vector<Vec> weyl_orbit(const Vec& w0, const RootSystem& rs, std::size_t cap) {
  const int n = rs.rank();
  if (w0.size() != n) throw std::invalid_argument("weyl_orbit: label vector length does not match the rank");
  VecSet seen;
  seen.insert(w0);
  std::deque<Vec> queue{w0};
  while (!queue.empty()) {
    Vec w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (w[i] == 0) continue;  // wall fixed point
      Vec image = w - w[i] * rs.cartan.entries().col(i);
      if (seen.insert(image).second) {
        if (seen.size() > cap) {
          throw std::runtime_error("weyl_orbit: orbit of " + format_vec(w0) + " exceeds cap " + std::to_string(cap));
        }
        queue.push_back(std::move(image));
      }
    }
  }
  std::vector<Vec> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end(), lex_less);
  return orbit;
}

Vec ks_partner(const Vec& labels, const RootSystem& rs) {
  return shifted_reflect(labels, rs.highest_root, rs);
}

std::vector<std::size_t> transitive_reduction(int vertex_count, const std::vector<MultipletEdge>& edges) {
  // Kahn topological order; a leftover vertex means a cycle.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(vertex_count));
  std::vector<int> indeg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& e : edges) {
    succ[static_cast<std::size_t>(e.from)].push_back(e.to);
    ++indeg[static_cast<std::size_t>(e.to)];
  }
  std::deque<int> ready;
  for (int v = 0; v < vertex_count; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(vertex_count));
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)]) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(topo.size()) != vertex_count) {
    throw internal_error("transitive_reduction: edge relation has a cycle");
  }

  // reach[v] = vertices reachable from v by paths of length >= 1,
  // accumulated in reverse topological order.
  const std::size_t words = (static_cast<std::size_t>(vertex_count) + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(vertex_count) * words, 0);
  auto set_bit = [&](int v, int w) { reach[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(w) / 64] |= 1ull << (w % 64); };
  auto get_bit = [&](int v, int w) {
    return (reach[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1ull;
  };
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    for (int w : succ[static_cast<std::size_t>(v)]) {
      set_bit(v, w);
      for (std::size_t k = 0; k < words; ++k) {
        reach[static_cast<std::size_t>(v) * words + k] |= reach[static_cast<std::size_t>(w) * words + k];
      }
    }
  }

  std::vector<std::size_t> kept;
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const auto& e = edges[idx];
    bool composite = false;
    for (int w : succ[static_cast<std::size_t>(e.from)]) {
      if (w != e.to && get_bit(w, e.to)) {
        composite = true;
        break;
      }
    }
    if (!composite) kept.push_back(idx);
  }
  return kept;
}

MultipletGraph build_multiplet(const Vec& labels, const RootSystem& rs, const ParabolicSplit& split) {
  const int n = rs.rank();
  if (labels.size() != n) throw std::invalid_argument("build_multiplet: label vector length does not match the rank");
  bool any_positive = false;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) throw std::invalid_argument("build_multiplet: labels must be >= 0, got " + format_vec(labels));
    if (labels[i] > 0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("build_multiplet: all-zero labels rejected");

  MultipletGraph g;
  g.input_labels = labels;
  g.strict_dominance = (labels.array() > 0).all();

  const std::vector<Vec> orbit = weyl_orbit(labels, rs);
  std::vector<Vec> dominant;
  for (const Vec& w : orbit) {
    if (is_m_dominant(w, split, g.strict_dominance)) dominant.push_back(w);
  }

  VecMap<int> id;
  for (std::size_t k = 0; k < dominant.size(); ++k) id.emplace(dominant[k], static_cast<int>(k));

  // Precompute A*beta per noncompact root: the reflection step in label space.
  std::vector<Vec> steps;
  steps.reserve(split.noncompact_roots.size());
  for (const Vec& beta : split.noncompact_roots) steps.push_back(rs.cartan.entries() * beta);

  struct RawEdge {
    int from, to, root;
    Int m;
  };
  std::vector<RawEdge> raw;
  std::vector<std::vector<int>> adj(dominant.size());  // undirected, for the component
  for (std::size_t u = 0; u < dominant.size(); ++u) {
    const Vec& w = dominant[u];
    for (std::size_t r = 0; r < split.noncompact_roots.size(); ++r) {
      const Int m = hc_param(w, split.noncompact_roots[r]);
      if (m <= 0) continue;
      Vec image = w - m * steps[r];
      auto it = id.find(image);
      if (it == id.end()) continue;
      raw.push_back({static_cast<int>(u), it->second, split.noncompact_indices[r], m});
      adj[u].push_back(it->second);
      adj[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(u));
    }
  }

  // Connected component (undirected) of the input weight.
  const int start = id.at(labels);
  std::vector<char> in_component(dominant.size(), 0);
  std::deque<int> queue{start};
  in_component[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!in_component[static_cast<std::size_t>(w)]) {
        in_component[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<int> members;
  for (std::size_t k = 0; k < dominant.size(); ++k) {
    if (in_component[k]) {
      members.push_back(static_cast<int>(k));
    } else {
      g.excluded_dominant.push_back(dominant[k]);
    }
  }

  // Canonical order: two_c ascending, then n-tuple lexicographic.
  std::vector<SignatureChi> sigs;
  sigs.reserve(members.size());
  for (int k : members) sigs.push_back(to_signature(dominant[static_cast<std::size_t>(k)], rs, split));
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return signature_less(sigs[a], sigs[b]); });

  std::vector<int> new_id(dominant.size(), -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t old = order[pos];
    new_id[static_cast<std::size_t>(members[old])] = static_cast<int>(pos);
    g.vertices.push_back(dominant[static_cast<std::size_t>(members[old])]);
    g.signatures.push_back(sigs[old]);
  }
  g.origin = new_id[static_cast<std::size_t>(start)];

  for (const auto& e : raw) {
    const int from = new_id[static_cast<std::size_t>(e.from)];
    const int to = new_id[static_cast<std::size_t>(e.to)];
    if (from < 0 || to < 0) continue;
    g.edges.push_back({from, to, e.root, e.m});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const MultipletEdge& a, const MultipletEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.root < b.root;
  });

  g.reduced_edges = transitive_reduction(static_cast<int>(g.vertices.size()), g.edges);

  // Knapp-Stein partner pairs; reflection in the highest root keeps the
  // compact labels, so partners stay M-dominant and inside the component.
  std::vector<char> paired(g.vertices.size(), 0);
  VecMap<int> vertex_id;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) vertex_id.emplace(g.vertices[k], static_cast<int>(k));
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    if (paired[k]) continue;
    const Vec partner = ks_partner(g.vertices[k], rs);
    auto it = vertex_id.find(partner);
    if (it == vertex_id.end()) {
      throw internal_error("build_multiplet: Knapp-Stein partner of " + format_vec(g.vertices[k]) +
                           " is not a multiplet member");
    }
    const int a = static_cast<int>(k);
    const int b = it->second;
    paired[k] = 1;
    paired[static_cast<std::size_t>(b)] = 1;
    // store as (c <= 0 side, other); the canonical order makes that min(a,b)
    g.ks_pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.ks_pairs.begin(), g.ks_pairs.end());

  return g;
}

std::vector<MultipletEdge> degenerate_ks_edges(const MultipletGraph& g, const RootSystem& rs) {
  const int top = rs.index_of(rs.highest_root);
  std::vector<MultipletEdge> out;
  for (std::size_t idx : g.reduced_edges) {
    if (g.edges[idx].root == top) out.push_back(g.edges[idx]);
  }
  return out;
}

std::vector<int> e6_conjugation() { return {5, 1, 4, 3, 2, 0}; }

MultipletGraph conjugate_multiplet(const MultipletGraph& g, const RootSystem& rs, const ParabolicSplit& split,
                                   const std::vector<int>& perm) {
  const int n = rs.rank();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("conjugate_multiplet: permutation length does not match the rank");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rs.cartan.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != rs.cartan.at(i, j)) {
        throw std::invalid_argument("conjugate_multiplet: permutation is not a diagram automorphism");
      }
    }
  }
  auto apply = [&](const Vec& v) {
    Vec out(n);
    for (int i = 0; i < n; ++i) out[perm[static_cast<std::size_t>(i)]] = v[i];
    return out;
  };

  MultipletGraph out;
  out.input_labels = apply(g.input_labels);
  out.strict_dominance = g.strict_dominance;

  std::vector<SignatureChi> sigs;
  for (const Vec& v : g.vertices) sigs.push_back(to_signature(apply(v), rs, split));
  std::vector<std::size_t> order(g.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return signature_less(sigs[a], sigs[b]); });
  std::vector<int> new_id(g.vertices.size(), -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_id[order[pos]] = static_cast<int>(pos);
    out.vertices.push_back(apply(g.vertices[order[pos]]));
    out.signatures.push_back(sigs[order[pos]]);
  }
  out.origin = new_id[static_cast<std::size_t>(g.origin)];

  for (const auto& e : g.edges) {
    const Vec root = apply(rs.positive_roots[static_cast<std::size_t>(e.root)]);
    const int root_index = rs.index_of(root);
    if (root_index < 0) throw internal_error("conjugate_multiplet: permuted root left the root set");
    out.edges.push_back({new_id[static_cast<std::size_t>(e.from)], new_id[static_cast<std::size_t>(e.to)],
                         root_index, e.m});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const MultipletEdge& a, const MultipletEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.root < b.root;
  });
  out.reduced_edges = transitive_reduction(static_cast<int>(out.vertices.size()), out.edges);

  for (auto [a, b] : g.ks_pairs) {
    const int pa = new_id[static_cast<std::size_t>(a)];
    const int pb = new_id[static_cast<std::size_t>(b)];
    out.ks_pairs.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(out.ks_pairs.begin(), out.ks_pairs.end());

  for (const Vec& v : g.excluded_dominant) out.excluded_dominant.push_back(apply(v));
  std::sort(out.excluded_dominant.begin(), out.excluded_dominant.end(), lex_less);
  return out;
}

unsigned classify_vertex(const MultipletGraph& g, int v, const RootSystem& rs, const ParabolicSplit& split) {
  if (v < 0 || v >= static_cast<int>(g.vertices.size())) {
    throw std::invalid_argument("classify_vertex: vertex id out of range");
  }
  const Vec& labels = g.vertices[static_cast<std::size_t>(v)];
  const SignatureChi& sig = g.signatures[static_cast<std::size_t>(v)];
  unsigned flags = 0;

  if (v == g.origin && g.strict_dominance) {
    flags |= kFlagFiniteDimSubrep;
    if ((labels.array() == 1).all()) flags |= kFlagTrivialIrrep;
  }

  bool all_negative = true, all_nonpositive = true;
  for (const Vec& beta : split.noncompact_roots) {
    const Int m = hc_param(labels, beta);
    if (m >= 0) all_negative = false;
    if (m > 0) all_nonpositive = false;
  }
  if (all_negative) {
    flags |= kFlagHoloDS;
  } else if (all_nonpositive) {
    flags |= kFlagHoloDSLimit;
  }

  if ((sig.n.array() == 0).any()) flags |= kFlagLimit;
  if (sig.two_c == 0) flags |= kFlagSelfKS;
  return flags;
}

bool same_canonical_graph(const MultipletGraph& a, const MultipletGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.reduced_edges.size() != b.reduced_edges.size() || a.ks_pairs != b.ks_pairs || a.origin != b.origin) {
    return false;
  }
  for (std::size_t k = 0; k < a.vertices.size(); ++k) {
    if (!vec_equal(a.vertices[k], b.vertices[k])) return false;
  }
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    const auto& ea = a.edges[k];
    const auto& eb = b.edges[k];
    if (ea.from != eb.from || ea.to != eb.to || ea.root != eb.root || ea.m != eb.m) return false;
  }
  return a.reduced_edges == b.reduced_edges;
}

}  // namespace e6m
