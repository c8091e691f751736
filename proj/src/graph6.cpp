#include "lapgirth/graph6.hpp"

#include <algorithm>

namespace lapgirth {

namespace {

constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw Graph6Error("invalid graph6 character", pos);
  }
  return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error("8-byte size header not supported", 0);
    }
    if (text.size() < 4) throw Graph6Error("truncated size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text, i);
    if (n < 63) throw Graph6Error("non-canonical extended size header", 1);
    pos = 4;
  } else {
    n = decode_byte(text, 0);
    pos = 1;
  }
  if (n < 1 || n > Graph::kMaxVertices) {
    throw Graph6Error("vertex count " + std::to_string(n) + " outside 1..64", 0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Graph6Error("expected " + std::to_string(bytes) + " data bytes, found " +
                          std::to_string(text.size() - pos),
                      std::min(text.size(), pos + bytes));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = decode_byte(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = decode_byte(text, pos + k / 6);
    if ((byte >> (5 - k % 6)) & 1) {
      throw Graph6Error("nonzero padding bit", pos + k / 6);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

}  // namespace lapgirth
