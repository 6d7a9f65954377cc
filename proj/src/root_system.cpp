#include "e6m/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace e6m {

CartanMatrix::CartanMatrix(Mat entries) : a_(std::move(entries)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) {
    throw std::invalid_argument("Cartan matrix must be square and nonempty");
  }
  const int n = static_cast<int>(a_.rows());
  for (int i = 0; i < n; ++i) {
    if (a_(i, i) != 2) {
      throw std::invalid_argument("Cartan matrix diagonal entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 1) + ") is " + std::to_string(a_(i, i)) + ", expected 2");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_(i, j) != 0 && a_(i, j) != -1) {
        throw std::invalid_argument("Cartan matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is " + std::to_string(a_(i, j)) + ", expected 0 or -1 (simply-laced scope)");
      }
      if (a_(i, j) != a_(j, i)) {
        throw std::invalid_argument("Cartan matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
}

CartanMatrix CartanMatrix::from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  Mat a = Mat::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) a(i, i) = 2;
  for (auto [i, j] : edges) {
    a(i, j) = -1;
    a(j, i) = -1;
  }
  return CartanMatrix(std::move(a));
}

CartanMatrix CartanMatrix::chain(int rank) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  return from_edges(rank, edges);
}

CartanMatrix CartanMatrix::e6() {
  // Display indices: bonds 1-3, 3-4, 4-5, 5-6 and the branch 2-4.
  return from_edges(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
}

int RootSystem::index_of(const Vec& v) const {
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Vec& v) const {
  if (is_positive_root(v)) return true;
  Vec neg = -v;
  return is_positive_root(neg);
}

RootSystem generate_positive_roots(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  std::vector<Vec> roots;
  VecSet known;

  std::vector<Vec> layer;
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
    roots.push_back(std::move(e));
  }

  while (!layer.empty()) {
    std::vector<Vec> next;
    for (const Vec& beta : layer) {
      const Vec pairings = cartan.entries() * beta;  // <beta, alpha_i^vee> per i
      for (int i = 0; i < n; ++i) {
        Vec down = beta;
        down[i] -= 1;
        Int p = 0;
        while (known.count(down)) {
          ++p;
          down[i] -= 1;
        }
        const Int q = p - pairings[i];
        if (q <= 0) continue;
        Vec up = beta;
        up[i] += 1;
        if (known.insert(up).second) {
          roots.push_back(up);
          next.push_back(std::move(up));
        }
      }
    }
    layer = std::move(next);
  }

  std::sort(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) {
    const Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  RootSystem rs{cartan, {}, Vec(), true, {}};
  rs.positive_roots = std::move(roots);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    rs.index.emplace(rs.positive_roots[k], static_cast<int>(k));
  }
  rs.highest_root = rs.positive_roots.back();
  const Int top = height(rs.highest_root);
  std::size_t at_top = 0;
  for (const Vec& r : rs.positive_roots) {
    if (height(r) == top) ++at_top;
  }
  rs.highest_root_unique = (at_top == 1);
  return rs;
}

Int root_norm(const RootSystem& rs, const Vec& v) {
  return v.dot(rs.cartan.entries() * v);
}

Int pairing(const RootSystem& rs, const Vec& beta, const Vec& gamma) {
  if (gamma.size() != rs.rank() || beta.size() != rs.rank()) {
    throw std::invalid_argument("pairing: vector length does not match the rank");
  }
  const Int norm = root_norm(rs, gamma);
  if (norm != 2) {
    throw std::invalid_argument("pairing: gamma is not a root (norm " + std::to_string(norm) + ", expected 2)");
  }
  return beta.dot(rs.cartan.entries() * gamma);
}

Vec reflect_root(const RootSystem& rs, const Vec& beta, const Vec& gamma) {
  Vec image = beta - pairing(rs, beta, gamma) * gamma;
  if (!rs.is_root(image)) {
    throw internal_error("reflect_root: image " + format_vec(image) + " of " + format_vec(beta) +
                         " under s_" + compact_name(gamma.cwiseAbs()) + " is not a root");
  }
  return image;
}

std::string compact_name(const Vec& coeffs) {
  Vec rest = coeffs;
  std::string out;
  const int n = static_cast<int>(rest.size());
  while (true) {
    int start = -1;
    for (int i = 0; i < n; ++i) {
      if (rest[i] > 0) {
        start = i;
        break;
      }
    }
    if (start < 0) break;
    int stop = start;
    while (stop + 1 < n && rest[stop + 1] > 0) ++stop;
    for (int i = start; i <= stop; ++i) rest[i] -= 1;
    if (!out.empty()) out += ',';
    out += std::to_string(start + 1);
    if (stop > start) out += std::to_string(stop + 1);
  }
  return out.empty() ? "0" : out;
}

Vec expand_name(std::string_view token, int rank) {
  Vec v = Vec::Zero(rank);
  if (token == "0") return v;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t comma = token.find(',', pos);
    std::string_view group =
        token.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (group.empty() || group.size() > 2 ||
        !std::all_of(group.begin(), group.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("bad group '" + std::string(group) + "' in root name '" + std::string(token) + "'");
    }
    const int lo = group[0] - '0';
    const int hi = group.size() == 2 ? group[1] - '0' : lo;
    if (lo < 1 || hi > rank || lo > hi || (group.size() == 2 && lo == hi)) {
      throw std::invalid_argument("index range '" + std::string(group) + "' out of bounds in root name '" +
                                  std::string(token) + "'");
    }
    for (int i = lo; i <= hi; ++i) v[i - 1] += 1;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return v;
}

}  // namespace e6m
