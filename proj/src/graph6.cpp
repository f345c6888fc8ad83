#include "oddgirth/graph6.hpp"

#include <vector>

#include "oddgirth/error.hpp"

namespace oddgirth {
namespace {

constexpr int kBias = 63;

std::size_t body_length(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 line", 0);
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw ParseError("multi-byte graph6 size header not supported", 0);
  }
  if (header < kBias || header > 126) {
    throw ParseError("invalid graph6 size header", 0);
  }
  const std::size_t n = header - kBias;
  const std::size_t expected = 1 + body_length(n);

  for (std::size_t i = 1; i < text.size() && i < expected; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("non-printable graph6 byte", i);
  }
  if (text.size() < expected) throw ParseError("graph6 body truncated", text.size());
  if (text.size() > expected) throw ParseError("trailing bytes after graph6 body", expected);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const auto c = static_cast<unsigned>(static_cast<unsigned char>(text[1 + bit / 6]) - kBias);
    const bool set = (c >> (5 - bit % 6)) & 1u;
    ++bit;
    return set;
  };
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (next_bit()) edges.emplace_back(i, j);
    }
  }
  while (bit % 6 != 0) {
    const std::size_t at = 1 + bit / 6;
    if (next_bit()) throw ParseError("non-zero graph6 padding bits", at);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeLimitError("graph6 encoding supports n <= 62, got n = " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + kBias));
  unsigned group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace oddgirth
