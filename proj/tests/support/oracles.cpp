#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace testsupport {

using specmatch::Graph;
using specmatch::HalfInt;

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

int matching_rec(const Graph& g, std::uint32_t used,
                 std::unordered_map<std::uint32_t, int>& memo) {
  const int n = g.vertex_count();
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (!(used & (1u << v))) {
      u = v;
      break;
    }
  }
  if (u < 0) return 0;
  auto it = memo.find(used);
  if (it != memo.end()) return it->second;
  // u is either left unmatched or matched to a free neighbor.
  int best = matching_rec(g, used | (1u << u), memo);
  for (int v : g.neighbors(u)) {
    if (used & (1u << v)) continue;
    best = std::max(
        best, 1 + matching_rec(g, used | (1u << u) | (1u << v), memo));
  }
  memo.emplace(used, best);
  return best;
}

}  // namespace

int oracle_max_matching(const Graph& g) {
  if (g.vertex_count() > 24)
    throw std::invalid_argument("oracle_max_matching handles n <= 24");
  std::unordered_map<std::uint32_t, int> memo;
  return matching_rec(g, 0, memo);
}

int oracle_max_deficiency(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("oracle_max_deficiency handles n <= 20");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int inside = 0;
    int isolated = 0;
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) {
        ++inside;
        continue;
      }
      bool cut_off = true;
      for (int w : g.neighbors(v)) {
        if (!(s & (1u << w))) {
          cut_off = false;
          break;
        }
      }
      if (cut_off) ++isolated;
    }
    best = std::max(best, isolated - inside);
  }
  return best;
}

HalfInt oracle_mu_f(const Graph& g) {
  return HalfInt{g.vertex_count() - oracle_max_deficiency(g)};
}

}  // namespace testsupport
