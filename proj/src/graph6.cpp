#include <string>

#include "twodist/errors.hpp"
#include "twodist/graph.hpp"

namespace twodist {

namespace {
constexpr int kMaxShortOrder = 62;
}

Graph parse_graph6(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("graph6: truncated input (empty)");
  const auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: truncated input (empty)");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: invalid character at offset " + std::to_string(i));
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxShortOrder) throw ParseError("graph6: long form headers (n > 62) are not supported");
  if (n == 0) throw ParseError("graph6: graph has no nodes");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw ParseError("graph6: truncated bit stream");
  if (text.size() - 1 > bytes) throw ParseError("graph6: trailing data after bit stream");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kMaxShortOrder) throw std::invalid_argument("encode_graph6: n > 62 needs the long form");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace twodist
