#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdrlab/graph.hpp"

namespace rdrlab {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void graph6_put_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  detail::graph6_put_order(out, n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  std::size_t p = 0;
  auto byte = [&]() -> int {
    if (p >= line.size()) throw Graph6Error("truncated graph6 line");
    const int c = static_cast<unsigned char>(line[p++]);
    if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range: " + std::to_string(c));
    return c - 63;
  };
  long long n = 0;
  if (line.empty()) throw Graph6Error("empty graph6 line");
  if (line[0] != '~') {
    n = byte();
  } else {
    ++p;
    int groups = 3;
    if (p < line.size() && line[p] == '~') {
      ++p;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | byte();
  }
  if (n > 100000) throw Graph6Error("graph6 order too large");
  const long long pairs = n * (n - 1) / 2;
  const std::size_t needed = p + static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() < needed) throw Graph6Error("truncated graph6 bit stream");
  if (line.size() > needed) throw Graph6Error("trailing bytes after graph6 bit stream");
  std::vector<Edge> edges;
  int acc = 0, left = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = byte();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) edges.emplace_back(i, j);
    }
  if (left > 0 && (acc & ((1 << left) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  return build_graph(static_cast<int>(n), edges);
}

}  // namespace rdrlab
