#include "e6m/types.hpp"

#include <charconv>
#include <sstream>

namespace e6m {

std::string format_vec(const Vec& v, char open, char close) {
  std::ostringstream os;
  os << open;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << close;
  return os.str();
}

Vec parse_vec(std::string_view text, Eigen::Index expected_size) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("bad integer '" + std::string(piece) + "' in vector '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (expected_size >= 0 && static_cast<Eigen::Index>(out.size()) != expected_size) {
    throw std::invalid_argument("expected " + std::to_string(expected_size) + " entries in vector '" +
                                std::string(text) + "', got " + std::to_string(out.size()));
  }
  Vec v(static_cast<Eigen::Index>(out.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = out[static_cast<std::size_t>(i)];
  return v;
}

std::string half_string(Int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace e6m
