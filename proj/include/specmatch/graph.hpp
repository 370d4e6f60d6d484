#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specmatch {

/// Simple undirected graph on vertex indices 0..n-1. Adjacency is kept as
/// sorted neighbor lists; no self-loops, no parallel edges. Instances are
/// immutable after construction, so they can be shared freely across
/// threads. All construction operators return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Graph from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints are rejected.
  Graph(int n, std::span<const std::pair<int, int>> edge_list);
  Graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;  // 0 when the graph is empty
  int max_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// Complement within the same vertex set: uv is an edge iff u != v and uv
/// is not an edge of g.
Graph complement(const Graph& g);

/// Disjoint union plus all edges between the two vertex classes. Vertices
/// of g2 are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

/// Vertex-disjoint union, g2 indices shifted by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct VertexDeletion {
  Graph graph;
  /// original_index[w] is the vertex of the input graph that became w.
  std::vector<int> original_index;
};

/// Induced subgraph on the vertices outside `removed`, reindexed
/// order-preservingly. The index map names original vertices so witnesses
/// survive the reindexing. Throws std::out_of_range on a bad index.
VertexDeletion delete_vertices(const Graph& g, std::span<const int> removed);

/// Number of degree-zero vertices.
int isolated_count(const Graph& g);

/// True iff n <= 1 or every vertex is reachable from vertex 0.
bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Two-coloring by component search. Component roots (smallest unvisited
/// index) go to the left class, so isolated vertices land there. Returns
/// nothing when some component has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Error raised by parse_graph6; byte_offset points at the offending byte
/// within the line (after any ">>graph6<<" header has been stripped).
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t byte_offset);
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decode one graph6 line. Accepts an optional ">>graph6<<" header. The
/// layout is the standard one: size byte(s) N(n) followed by
/// ceil(n(n-1)/2 / 6) data bytes holding the upper triangle in column-major
/// order x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte (value =
/// byte - 63, most significant bit first), padding bits zero.
Graph parse_graph6(std::string_view line);

/// Encode to graph6, inverse of parse_graph6. Supports the one-byte size
/// form (n <= 62) and the multi-byte forms beyond that.
std::string write_graph6(const Graph& g);

}  // namespace specmatch
