#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twodist/matrix.hpp"

namespace twodist {

using Edge = std::pair<int, int>;

// Simple undirected graph on nodes {0..n-1}. Immutable after construction.
class Graph {
 public:
  // Throws std::invalid_argument on n < 1, out-of-range ids or loops.
  // Duplicate edges (in either orientation) are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const noexcept { return n_; }
  bool has_edge(int u, int v) const { return adj_[index(u, v)] != 0; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  int degree(int v) const;
  // Degree k when every node has degree k.
  std::optional<int> regular_degree() const;

  bool operator==(const Graph& o) const = default;

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;
};

enum class ClassTag { Complete, Null, Cluster, CompleteMultipartite, General };

std::string_view to_string(ClassTag tag);

struct GraphClass {
  ClassTag tag = ClassTag::General;
  // Clique sizes for cluster graphs, independent-set sizes for complete
  // multipartite graphs; sorted descending. Complete and Null report [n].
  std::vector<int> partition;
  bool is_cluster = false;
  bool is_multipartite = false;

  bool operator==(const GraphClass&) const = default;
};

// Edge-list text: first token n, then one "u v" pair per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text);

// graph6, short form only (n <= 62). Surrounding whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

Graph complement(const Graph& g);
GraphClass classify(const Graph& g);
Matrix adjacency_matrix(const Graph& g);

// Generators used by tests, the sweep and the CLI.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph null_graph(int n);
// Disjoint union of cliques with the given sizes.
Graph cluster_graph(std::span<const int> clique_sizes);
Graph complete_multipartite_graph(std::span<const int> part_sizes);
// Node 0 joined to two disjoint edges {1,3} and {2,4}.
Graph bow_tie_graph();
// Labelled graph whose edge set is the bit pattern of mask over the pairs
// (0,1), (0,2), (1,2), (0,3), ... in graph6 order.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace twodist
