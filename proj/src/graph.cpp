#include "twodist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be positive");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("Graph: node id out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("Graph: loop edge at node " + std::to_string(u));
    if (!adj_[index(u, v)]) {
      adj_[index(u, v)] = adj_[index(v, u)] = 1;
      ++edge_count_;
    }
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[index(v, u)];
  return d;
}

std::optional<int> Graph::regular_degree() const {
  const int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Complete: return "Complete";
    case ClassTag::Null: return "Null";
    case ClassTag::Cluster: return "Cluster";
    case ClassTag::CompleteMultipartite: return "CompleteMultipartite";
    case ClassTag::General: return "General";
  }
  return "General";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits a line into integer tokens; nullopt if any token is not an integer.
std::optional<std::vector<long>> integer_tokens(std::string_view line) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    long value = 0;
    const auto* first = line.data() + pos;
    const auto* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    out.push_back(value);
    pos = end;
  }
  return out;
}

// Connected component sizes, descending.
std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<int> sizes;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int u = 0; u < g.n(); ++u)
        if (comp[u] < 0 && g.has_edge(u, v)) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// True iff g has no induced path on three nodes.
bool p3_free(const Graph& g) {
  const int n = g.n();
  for (int c = 0; c < n; ++c)
    for (int u = 0; u < n; ++u) {
      if (u == c || !g.has_edge(c, u)) continue;
      for (int w = u + 1; w < n; ++w)
        if (w != c && g.has_edge(c, w) && !g.has_edge(u, w)) return false;
    }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = integer_tokens(line);
    if (!tokens) throw ParseError("malformed line '" + std::string(line) + "'", line_no);
    if (!n) {
      if (tokens->size() != 1) throw ParseError("expected node count", line_no);
      if ((*tokens)[0] < 1 || (*tokens)[0] > 100000) throw ParseError("node count out of range", line_no);
      n = static_cast<int>((*tokens)[0]);
      continue;
    }
    if (tokens->size() != 2) throw ParseError("expected 'u v'", line_no);
    const long u = (*tokens)[0], v = (*tokens)[1];
    if (u < 0 || v < 0 || u >= *n || v >= *n)
      throw ParseError("node id out of range in '" + std::string(line) + "'", line_no);
    if (u == v) throw ParseError("loop edge at node " + std::to_string(u), line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!n) throw ParseError("empty input: missing node count");
  return Graph(*n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges);
}

GraphClass classify(const Graph& g) {
  const int n = g.n();
  const std::size_t all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  GraphClass c;
  if (g.edge_count() == all_pairs) {
    c.tag = ClassTag::Complete;
    c.partition = {n};
    c.is_cluster = c.is_multipartite = true;
    return c;
  }
  if (g.edge_count() == 0) {
    c.tag = ClassTag::Null;
    c.partition = {n};
    c.is_cluster = c.is_multipartite = true;
    return c;
  }
  const Graph gc = complement(g);
  c.is_cluster = p3_free(g);
  c.is_multipartite = p3_free(gc);
  if (c.is_cluster) {
    c.tag = ClassTag::Cluster;
    c.partition = component_sizes(g);
  } else if (c.is_multipartite) {
    c.tag = ClassTag::CompleteMultipartite;
    c.partition = component_sizes(gc);
  }
  return c;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v && g.has_edge(u, v)) a(u, v) = 1.0;
  return a;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) { return complement(null_graph(n)); }

Graph null_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph cluster_graph(std::span<const int> clique_sizes) {
  std::vector<Edge> edges;
  int offset = 0;
  for (int size : clique_sizes) {
    if (size < 1) throw std::invalid_argument("cluster_graph: clique sizes must be positive");
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) edges.emplace_back(offset + i, offset + j);
    offset += size;
  }
  return Graph(offset, edges);
}

Graph complete_multipartite_graph(std::span<const int> part_sizes) {
  return complement(cluster_graph(part_sizes));
}

Graph bow_tie_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {2, 4}}); }

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace twodist
