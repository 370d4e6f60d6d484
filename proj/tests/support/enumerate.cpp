#include "support/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace testsupport {

using specmatch::Graph;

namespace {

struct CanonicalSearch {
  int n;
  std::vector<std::vector<char>> adj;  // dense adjacency
  std::string best;                    // best full code found so far
  std::string current;                 // code along the current branch
  std::vector<int> perm;
  std::vector<char> used;

  explicit CanonicalSearch(const Graph& g)
      : n(g.vertex_count()),
        adj(n, std::vector<char>(n, 0)),
        perm(n, -1),
        used(n, 0) {
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  }

  // Invariant on entry: with L = current.size(), state == 0 means current
  // equals best's first L characters; state == 1 means current is already
  // lexicographically greater than them (so any completion beats best).
  // Returns whether best was replaced somewhere in this subtree; the caller
  // then resets its state to 0, because the new best extends its prefix.
  bool descend(int depth, int state) {
    if (depth == n) {
      if (state == 1) {
        best = current;
        return true;
      }
      return false;
    }
    bool replaced = false;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t mark = current.size();
      int next_state = state;
      bool prune = false;
      for (int i = 0; i < depth && !prune; ++i) {
        const char bit = adj[perm[i]][v] ? '1' : '0';
        current.push_back(bit);
        if (next_state == 0) {
          const char ref = best[current.size() - 1];
          if (bit < ref) prune = true;
          if (bit > ref) next_state = 1;
        }
      }
      if (!prune) {
        used[v] = 1;
        perm[depth] = v;
        if (descend(depth + 1, next_state)) {
          state = 0;
          replaced = true;
        }
        used[v] = 0;
      }
      current.resize(mark);
    }
    return replaced;
  }
};

}  // namespace

std::string canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  CanonicalSearch search(g);
  // Seed with the identity ordering so pruning has a real code to beat.
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < v; ++i)
      search.best.push_back(search.adj[i][v] ? '1' : '0');
  search.descend(0, 0);
  return search.best;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  std::vector<Graph> level = {Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& g : level) {
      const int old_n = g.vertex_count();
      std::vector<std::pair<int, int>> base = g.edges();
      for (unsigned mask = 0; mask < (1u << old_n); ++mask) {
        std::vector<std::pair<int, int>> edges = base;
        for (int v = 0; v < old_n; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, old_n);
        Graph extended(old_n + 1, edges);
        if (seen.insert(canonical_code(extended)).second)
          next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_graphs(n))
    if (specmatch::is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace testsupport
