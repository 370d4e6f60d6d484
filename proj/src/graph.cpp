#include "specmatch/graph.hpp"

#include <algorithm>
#include <queue>

namespace specmatch {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) : Graph(n) {
  for (auto [u, v] : edge_list) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
    : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(),
                                                    edge_list.size())) {}

int Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj_) twice += nbrs.size();
  return static_cast<int>(twice / 2);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, vertex_count());
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) p.degrees.push_back(g.degree(v));
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    const auto& nbrs = g.neighbors(u);
    std::size_t i = 0;
    for (int v = u + 1; v < n; ++v) {
      while (i < nbrs.size() && nbrs[i] < v) ++i;
      if (i < nbrs.size() && nbrs[i] == v) continue;
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
  return Graph(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph(n1 + g2.vertex_count(), edges);
}

VertexDeletion delete_vertices(const Graph& g, std::span<const int> removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v : removed) {
    check_vertex(v, n);
    gone[v] = 1;
  }
  VertexDeletion out;
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    new_index[v] = static_cast<int>(out.original_index.size());
    out.original_index.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) edges.emplace_back(new_index[u], new_index[v]);
  out.graph = Graph(static_cast<int>(out.original_index.size()), edges);
  return out;
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++count;
  return count;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::queue<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? out.left : out.right).push_back(v);
  return out;
}

Graph6ParseError::Graph6ParseError(const std::string& what,
                                   std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " +
                         std::to_string(byte_offset) + ")"),
      byte_offset_(byte_offset) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int data_value(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw Graph6ParseError(
        "byte " + std::to_string(static_cast<int>(c)) +
            " outside the printable graph6 range [63, 126]",
        i);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw Graph6ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (data_value(line, 0) < 63) {
    n = data_value(line, 0);
    pos = 1;
  } else if (line.size() >= 2 && data_value(line, 1) < 63) {
    // 126 n1 n2 n3 : 18-bit size
    if (line.size() < 4)
      throw Graph6ParseError("truncated multi-byte size prefix", line.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | data_value(line, i);
    pos = 4;
  } else {
    // 126 126 n1..n6 : 36-bit size
    if (line.size() < 8)
      throw Graph6ParseError("truncated multi-byte size prefix", line.size());
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | data_value(line, i);
    pos = 8;
  }
  if (n > 100000)
    throw Graph6ParseError("vertex count " + std::to_string(n) +
                               " beyond supported size",
                           0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < need)
    throw Graph6ParseError("data too short: need " + std::to_string(need) +
                               " bytes for n=" + std::to_string(n),
                           line.size());
  if (line.size() - pos > need)
    throw Graph6ParseError("trailing bytes after graph data", pos + need);

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int current = -1;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (bit % 6 == 0) current = data_value(line, pos + bit / 6);
      if (current & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
    }
  }
  if (bits > 0) {
    int current_byte = data_value(line, pos + (bits - 1) / 6);
    int pad = static_cast<int>(6 - bits % 6) % 6;
    if (current_byte & ((1 << pad) - 1))
      throw Graph6ParseError("trailing padding bits nonzero",
                             pos + (bits - 1) / 6);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int current = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      current = (current << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((current << (6 - filled)) + 63));
  return out;
}

}  // namespace specmatch
