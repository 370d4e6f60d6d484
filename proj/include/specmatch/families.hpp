#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "specmatch/graph.hpp"

namespace specmatch {

/// Bipartite family parameters: Y side is delta-regular toward X, X side
/// carries constant degree d = delta*(x_size + k)/x_size, and
/// |Y| = |X| + k. validate() throws std::domain_error naming the violated
/// requirement (positivity, delta <= x_size, divisibility).
struct FamilyBSpec {
  int delta = 1;
  int k = 1;
  int x_size = 1;

  int x_degree() const;
  void validate() const;
};

/// K_{p,q} with the p side on vertices 0..p-1.
Graph complete_bipartite(int p, int q);

struct FamilyBResult {
  Graph graph;
  bool connected = false;
  int x_degree = 0;
};

/// Round-robin biregular construction: edge l (0 <= l < delta*(x_size+k))
/// joins y_{l / delta} to x_{l mod x_size}. X occupies vertices
/// 0..x_size-1, Y the rest. The defining degree and size properties are
/// re-verified on the result before it is returned.
FamilyBResult family_b(const FamilyBSpec& spec);

/// Smallest legal x_size for given (delta, k); always delta itself, since
/// delta divides delta*(delta + k).
int family_b_minimal_x(int delta, int k);

/// (delta+1) isolated vertices joined to an arbitrary graph H on delta
/// vertices (given by its edge list). The isolated class occupies vertices
/// 0..delta, H the rest. Removing the H class isolates delta+1 vertices,
/// so the result never has a fractional perfect matching; that witness is
/// re-checked on the constructed graph.
Graph join_exception(int delta, std::span<const std::pair<int, int>> h_edges);

/// Structural membership test against the bipartite family above: some
/// orientation of the two-coloring has |Y| = |X| + k, constant Y degree
/// delta and constant X degree. For disconnected graphs the two-coloring
/// is not unique, so a false answer is conservative there.
bool matches_family_b(const Graph& g, int delta, int k);

/// Erdos-Renyi G(n, p) drawn with the SplitMix64 generator documented in
/// prng.hpp: pairs (u, v), u < v, are visited in lexicographic order and
/// edge uv is kept iff the next draw in [0, 1) is < p. Identical seeds
/// give identical graphs on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace specmatch
