#include "specmatch/fracmatch.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace specmatch {

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInt FractionalMatching::total() const {
  int sum = 0;
  for (const auto& [edge, w2] : twice_weight) sum += w2;
  return HalfInt{sum};
}

Graph double_cover(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  return Graph(2 * n, edges);
}

namespace {

bool try_augment(const Graph& g, int u, std::vector<int>& match,
                 std::vector<char>& visited) {
  for (int v : g.neighbors(u)) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match[v] == -1 || try_augment(g, match[v], match, visited)) {
      match[v] = u;
      match[u] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteMatching max_matching_bipartite(const Graph& g) {
  auto classes = bipartition(g);
  if (!classes)
    throw std::invalid_argument(
        "maximum matching requires a bipartite graph (odd cycle found)");
  const int n = g.vertex_count();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<char> visited(static_cast<std::size_t>(n));
  for (int u : classes->left) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(g, u, match, visited);
  }
  BipartiteMatching out;
  for (int u = 0; u < n; ++u)
    if (match[u] > u) out.edges.emplace_back(u, match[u]);
  out.size = static_cast<int>(out.edges.size());
  return out;
}

HalfInt fractional_matching_number(const Graph& g) {
  if (g.vertex_count() == 0) return HalfInt{0};
  return HalfInt{max_matching_bipartite(double_cover(g)).size};
}

FractionalMatching fractional_matching_witness(const Graph& g) {
  const int n = g.vertex_count();
  FractionalMatching f;
  if (n == 0) return f;
  for (auto [x, y] : max_matching_bipartite(double_cover(g)).edges) {
    // Cover edges run between the low and high copy, so x < n <= y.
    int u = x;
    int v = y - n;
    f.twice_weight[{std::min(u, v), std::max(u, v)}] += 1;
  }
  return f;
}

MatchingCheck verify_fractional_matching(const Graph& g,
                                         const FractionalMatching& f) {
  MatchingCheck out;
  out.valid = true;
  std::vector<int> twice_load(static_cast<std::size_t>(g.vertex_count()), 0);
  int sum = 0;
  for (const auto& [edge, w2] : f.twice_weight) {
    auto [u, v] = edge;
    sum += w2;
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
        u >= v || !g.has_edge(u, v)) {
      out.valid = false;
      if (out.diagnostic.empty())
        out.diagnostic = "edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") is not an edge of the graph";
      continue;
    }
    if (w2 < 0 || w2 > 2) {
      out.valid = false;
      if (out.diagnostic.empty())
        out.diagnostic = "weight " + std::to_string(w2) + "/2 on edge (" +
                         std::to_string(u) + ", " + std::to_string(v) +
                         ") is outside [0, 1]";
      continue;
    }
    twice_load[u] += w2;
    twice_load[v] += w2;
  }
  for (int v = 0; v < g.vertex_count() && out.valid; ++v) {
    if (twice_load[v] > 2) {
      out.valid = false;
      out.diagnostic = "vertex " + std::to_string(v) + " carries load " +
                       HalfInt{twice_load[v]}.str() + " > 1";
    }
  }
  out.total = HalfInt{sum};
  return out;
}

FractionalMatching half_characteristic_witness(
    const Graph& g, std::span<const std::pair<int, int>> sub_edges) {
  std::vector<int> sub_degree(static_cast<std::size_t>(g.vertex_count()), 0);
  FractionalMatching f;
  for (auto [u, v] : sub_edges) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) +
                                  ") is not an edge of the graph");
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (f.twice_weight.contains(key))
      throw std::invalid_argument("duplicate edge in subgraph list");
    f.twice_weight[key] = 1;
    ++sub_degree[u];
    ++sub_degree[v];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (sub_degree[v] > 2)
      throw std::domain_error(
          "subgraph maximum degree exceeds 2 at vertex " + std::to_string(v));
  return f;
}

DeficiencyWitness deficiency_bruteforce(const Graph& g, int subset_cap) {
  const int n = g.vertex_count();
  if (subset_cap < 0 || subset_cap > 62)
    throw std::domain_error("subset cap must lie in [0, 62]");
  if (n > subset_cap)
    throw std::domain_error("graph has " + std::to_string(n) +
                            " vertices, over the 2^n subset cap of " +
                            std::to_string(subset_cap));

  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << u;

  // Lexicographic order on subset bit-strings reads vertex 0 first, and a
  // 0-bit (vertex absent) sorts before a 1-bit. Comparing bit-reversed
  // masks as integers realizes exactly that order.
  auto bitstring_rank = [n](std::uint64_t mask) {
    std::uint64_t rank = 0;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) rank |= std::uint64_t{1} << (n - 1 - v);
    return rank;
  };

  std::uint64_t best_mask = 0;
  int best_value = isolated_count(g);
  std::uint64_t best_rank = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < limit; ++s) {
    int value = -std::popcount(s);
    for (int v = 0; v < n; ++v) {
      if (s & (std::uint64_t{1} << v)) continue;
      if ((nbr[v] & ~s) == 0) ++value;
    }
    if (value < best_value) continue;
    if (value == best_value) {
      std::uint64_t rank = bitstring_rank(s);
      if (rank >= best_rank) continue;
      best_rank = rank;
    } else {
      best_value = value;
      best_rank = bitstring_rank(s);
    }
    best_mask = s;
  }

  DeficiencyWitness out;
  out.value = best_value;
  for (int v = 0; v < n; ++v) {
    if (best_mask & (std::uint64_t{1} << v))
      out.set_s.push_back(v);
    else if ((nbr[v] & ~best_mask) == 0)
      out.isolated_t.push_back(v);
  }
  return out;
}

bool has_fractional_perfect_matching(const Graph& g) {
  return fractional_matching_number(g).twice == g.vertex_count();
}

}  // namespace specmatch
