#include "specmatch/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "specmatch/prng.hpp"

namespace specmatch {

int FamilyBSpec::x_degree() const {
  validate();
  return delta * (x_size + k) / x_size;
}

void FamilyBSpec::validate() const {
  if (delta < 1) throw std::domain_error("family spec: delta must be >= 1");
  if (k < 1) throw std::domain_error("family spec: k must be >= 1");
  if (x_size < 1)
    throw std::domain_error("family spec: x_size must be >= 1");
  if (delta > x_size)
    throw std::domain_error(
        "family spec: delta must be <= x_size for a simple round-robin "
        "construction");
  if ((static_cast<long long>(delta) * (x_size + k)) % x_size != 0)
    throw std::domain_error(
        "family spec: x_size must divide delta*(x_size+k) so the X side "
        "degree is constant");
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::domain_error("side sizes must be >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  return Graph(p + q, edges);
}

FamilyBResult family_b(const FamilyBSpec& spec) {
  spec.validate();
  const int m = spec.x_size;
  const int y_size = m + spec.k;
  const long long edge_total = static_cast<long long>(spec.delta) * y_size;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_total));
  for (long long l = 0; l < edge_total; ++l) {
    int y = static_cast<int>(l / spec.delta);
    int x = static_cast<int>(l % m);
    edges.emplace_back(x, m + y);
  }
  FamilyBResult out;
  out.graph = Graph(m + y_size, edges);
  out.connected = is_connected(out.graph);
  out.x_degree = spec.x_degree();

  if (out.graph.edge_count() != edge_total)
    throw std::logic_error("family construction collapsed parallel edges");
  for (int x = 0; x < m; ++x)
    if (out.graph.degree(x) != out.x_degree)
      throw std::logic_error("family construction broke X regularity");
  for (int y = m; y < m + y_size; ++y)
    if (out.graph.degree(y) != spec.delta)
      throw std::logic_error("family construction broke Y regularity");
  return out;
}

int family_b_minimal_x(int delta, int k) {
  if (delta < 1 || k < 1)
    throw std::domain_error("delta and k must be >= 1");
  for (int m = delta; ; ++m) {
    if ((static_cast<long long>(delta) * (m + k)) % m == 0) return m;
  }
}

Graph join_exception(int delta,
                     std::span<const std::pair<int, int>> h_edges) {
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  Graph h(delta, h_edges);
  Graph g = join(Graph(delta + 1), h);

  std::vector<int> h_class(static_cast<std::size_t>(delta));
  for (int i = 0; i < delta; ++i) h_class[i] = delta + 1 + i;
  auto rest = delete_vertices(g, h_class);
  if (isolated_count(rest.graph) != delta + 1)
    throw std::logic_error("join construction lost its deficiency witness");
  return g;
}

bool matches_family_b(const Graph& g, int delta, int k) {
  if (delta < 1 || k < 1) return false;
  auto classes = bipartition(g);
  if (!classes) return false;
  auto sides_match = [&](const std::vector<int>& x,
                         const std::vector<int>& y) {
    if (x.empty() || y.size() != x.size() + static_cast<std::size_t>(k))
      return false;
    for (int v : y)
      if (g.degree(v) != delta) return false;
    int d = g.degree(x.front());
    for (int v : x)
      if (g.degree(v) != d) return false;
    return true;
  };
  return sides_match(classes->left, classes->right) ||
         sides_match(classes->right, classes->left);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::domain_error("vertex count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace specmatch
