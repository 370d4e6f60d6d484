#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specmatch/graph.hpp"

namespace specmatch {

/// Half-integer stored as twice its value. Optimal fractional matchings
/// are always half-integral, so this representation is exact.
struct HalfInt {
  int twice = 0;

  double value() const { return twice / 2.0; }
  /// "3" for whole values, "7/2" otherwise.
  std::string str() const;
  auto operator<=>(const HalfInt&) const = default;
};

/// Edge weights in {0, 1/2, 1}, keyed by (u, v) with u < v and stored as
/// twice the weight. The ordered map keeps serialization deterministic.
struct FractionalMatching {
  std::map<std::pair<int, int>, int> twice_weight;

  HalfInt total() const;
};

struct MatchingCheck {
  bool valid = false;
  HalfInt total;
  std::string diagnostic;  // empty when valid
};

struct BipartiteMatching {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

/// Maximizer of i(G - S) - |S| over vertex subsets, where i counts
/// isolated vertices. value >= 0 always (S = empty set gives i(G)), and
/// n - value equals twice the fractional matching number.
struct DeficiencyWitness {
  std::vector<int> set_s;
  std::vector<int> isolated_t;
  int value = 0;
};

/// Bipartite double cover: vertices v and v+n for each v, and edges
/// (u, v+n), (v, u+n) for each edge uv of g. Always bipartite.
Graph double_cover(const Graph& g);

/// Maximum matching of a bipartite graph by repeated augmenting-path
/// search, vertices scanned in index order so results are deterministic.
/// Throws std::invalid_argument on non-bipartite input.
BipartiteMatching max_matching_bipartite(const Graph& g);

/// Fractional matching number, computed exactly as half the maximum
/// matching size of the bipartite double cover.
HalfInt fractional_matching_number(const Graph& g);

/// An optimal fractional matching, folded back from a maximum matching of
/// the double cover; weights land in {0, 1/2, 1}.
FractionalMatching fractional_matching_witness(const Graph& g);

/// Validates edge keys against g, weight range, and per-vertex loads
/// (sum of incident weights <= 1). Returns the total either way.
MatchingCheck verify_fractional_matching(const Graph& g,
                                         const FractionalMatching& f);

/// The all-halves assignment on sub_edges. Requires every edge to exist in
/// g and the chosen subgraph to have maximum degree <= 2, which makes the
/// result a valid fractional matching of total |sub_edges|/2.
FractionalMatching half_characteristic_witness(
    const Graph& g, std::span<const std::pair<int, int>> sub_edges);

/// Exhaustive maximizer of i(G - S) - |S| over all 2^n subsets. Ties break
/// to the lexicographically smallest subset bit-string (vertex 0 first, a
/// vertex left out of S beats one put in). Throws std::domain_error when
/// n exceeds subset_cap.
DeficiencyWitness deficiency_bruteforce(const Graph& g, int subset_cap = 20);

/// True iff twice the fractional matching number equals the vertex count.
bool has_fractional_perfect_matching(const Graph& g);

}  // namespace specmatch
