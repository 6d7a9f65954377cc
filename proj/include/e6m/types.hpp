#ifndef E6M_TYPES_HPP
#define E6M_TYPES_HPP

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace e6m {

// All arithmetic is exact. 64-bit signed integers leave ample headroom:
// root coefficients are bounded by 3 and weight labels stay small multiples
// of the input labels.
using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec make_vec(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

inline bool vec_equal(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

// Lexicographic order on coefficient vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    // FNV-1a over the coefficients
    std::uint64_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      std::uint64_t x = static_cast<std::uint64_t>(v[i]);
      for (int k = 0; k < 8; ++k) {
        h ^= (x >> (8 * k)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

struct VecEqual {
  bool operator()(const Vec& a, const Vec& b) const noexcept { return vec_equal(a, b); }
};

using VecSet = std::unordered_set<Vec, VecHash, VecEqual>;
template <class T>
using VecMap = std::unordered_map<Vec, T, VecHash, VecEqual>;

// Signals a broken internal invariant (e.g. a reflection leaving the root
// set); distinct from std::invalid_argument, which reports bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

std::string format_vec(const Vec& v, char open = '(', char close = ')');

// Parses "1,2,3" into a vector; with expected_size >= 0 the length is checked.
Vec parse_vec(std::string_view text, Eigen::Index expected_size = -1);

// Exact rendering of twice/2, e.g. -11 -> "-11/2", 10 -> "5".
std::string half_string(Int twice);

}  // namespace e6m

#endif
