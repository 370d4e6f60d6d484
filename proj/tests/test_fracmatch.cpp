#include <utility>
#include <vector>

#include <doctest.h>

#include "specmatch/families.hpp"
#include "specmatch/fracmatch.hpp"
#include "specmatch/graph.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace specmatch;
using testsupport::canonical_code;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::enumerate_graphs;
using testsupport::oracle_max_deficiency;
using testsupport::oracle_max_matching;
using testsupport::oracle_mu_f;
using testsupport::path_graph;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  return Graph(10, edges);
}

}  // namespace

TEST_SUITE("fracmatch") {

TEST_CASE("half-integer formatting and ordering") {
  CHECK(HalfInt{6}.str() == "3");
  CHECK(HalfInt{7}.str() == "7/2");
  CHECK(HalfInt{0}.str() == "0");
  CHECK(HalfInt{1}.str() == "1/2");
  CHECK(HalfInt{7}.value() == doctest::Approx(3.5));
  CHECK(HalfInt{4} < HalfInt{5});
  CHECK(HalfInt{4} == HalfInt{4});
}

TEST_CASE("double cover structure") {
  // Cover of a triangle is a hexagon.
  CHECK(canonical_code(double_cover(complete_graph(3))) ==
        canonical_code(cycle_graph(6)));
  // Cover of a bipartite graph is two disjoint copies.
  const Graph p3_cover = double_cover(path_graph(3));
  CHECK(p3_cover.vertex_count() == 6);
  CHECK(p3_cover.edge_count() == 4);
  CHECK(canonical_code(p3_cover) ==
        canonical_code(disjoint_union(path_graph(3), path_graph(3))));
  const auto sides = bipartition(double_cover(petersen()));
  CHECK(sides.has_value());
}

TEST_CASE("bipartite maximum matching") {
  CHECK(max_matching_bipartite(complete_bipartite(2, 3)).size == 2);
  CHECK(max_matching_bipartite(cycle_graph(6)).size == 3);
  CHECK(max_matching_bipartite(parse_graph6("D?{")).size == 1);  // a star
  CHECK(max_matching_bipartite(Graph(4)).size == 0);
  CHECK_THROWS_AS(max_matching_bipartite(complete_graph(3)),
                  std::invalid_argument);

  // Reported edges form a matching of the reported size.
  const auto m = max_matching_bipartite(complete_bipartite(3, 4));
  CHECK(m.size == 3);
  REQUIRE(m.edges.size() == 3);
  std::vector<int> seen;
  for (const auto& [u, v] : m.edges) {
    CHECK(u < v);
    seen.push_back(u);
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

  // Agrees with the independent branching oracle on every bipartite graph
  // with up to 7 vertices.
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!bipartition(g)) continue;
      CHECK(max_matching_bipartite(g).size == oracle_max_matching(g));
    }
  }
}

TEST_CASE("fractional matching numbers of named graphs") {
  CHECK(fractional_matching_number(cycle_graph(5)) == HalfInt{5});
  CHECK(fractional_matching_number(cycle_graph(7)) == HalfInt{7});
  CHECK(fractional_matching_number(complete_graph(4)) == HalfInt{4});
  CHECK(fractional_matching_number(path_graph(4)) == HalfInt{4});
  CHECK(fractional_matching_number(parse_graph6("D?{")) == HalfInt{2});
  CHECK(fractional_matching_number(complete_bipartite(2, 3)) == HalfInt{4});
  CHECK(fractional_matching_number(petersen()) == HalfInt{10});
  CHECK(fractional_matching_number(Graph()) == HalfInt{0});
  CHECK(fractional_matching_number(Graph(3)) == HalfInt{0});
}

TEST_CASE("matching number matches the deficiency identity everywhere") {
  // Exhaustive on all graphs with up to 6 vertices...
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const HalfInt mu = fractional_matching_number(g);
      CHECK(mu == oracle_mu_f(g));
      const auto witness = fractional_matching_witness(g);
      const auto check = verify_fractional_matching(g, witness);
      CHECK(check.valid);
      CHECK(check.total == mu);
    }
  }
  // ...and on random graphs up to 14.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7 + trial % 8;
    const Graph g = random_graph(n, 0.1 + 0.09 * (trial % 9),
                                 0x4000 + static_cast<std::uint64_t>(trial));
    const HalfInt mu = fractional_matching_number(g);
    CHECK(mu == oracle_mu_f(g));
    const auto check = verify_fractional_matching(
        g, fractional_matching_witness(g));
    CHECK(check.valid);
    CHECK(check.total == mu);
  }
}

TEST_CASE("verification rejects malformed assignments") {
  const Graph p3 = path_graph(3);

  FractionalMatching overload;
  overload.twice_weight[{0, 1}] = 2;
  overload.twice_weight[{1, 2}] = 1;
  const auto c1 = verify_fractional_matching(p3, overload);
  CHECK_FALSE(c1.valid);
  CHECK(c1.diagnostic.find("vertex 1") != std::string::npos);

  FractionalMatching non_edge;
  non_edge.twice_weight[{0, 2}] = 1;
  CHECK_FALSE(verify_fractional_matching(p3, non_edge).valid);

  FractionalMatching out_of_range;
  out_of_range.twice_weight[{0, 7}] = 1;
  CHECK_FALSE(verify_fractional_matching(p3, out_of_range).valid);

  FractionalMatching bad_weight;
  bad_weight.twice_weight[{0, 1}] = 3;
  CHECK_FALSE(verify_fractional_matching(p3, bad_weight).valid);

  FractionalMatching ok;
  ok.twice_weight[{0, 1}] = 1;
  ok.twice_weight[{1, 2}] = 1;
  const auto c2 = verify_fractional_matching(p3, ok);
  CHECK(c2.valid);
  CHECK(c2.total == HalfInt{2});
}

TEST_CASE("half-characteristic witnesses") {
  const Graph c5 = cycle_graph(5);
  const auto all = c5.edges();
  const auto f = half_characteristic_witness(c5, all);
  CHECK(verify_fractional_matching(c5, f).valid);
  CHECK(f.total() == HalfInt{5});

  const Graph star = parse_graph6("D?{");
  CHECK_THROWS_AS(half_characteristic_witness(star, star.edges()),
                  std::domain_error);

  const std::vector<std::pair<int, int>> missing = {{0, 2}};
  CHECK_THROWS_AS(half_characteristic_witness(c5, missing),
                  std::invalid_argument);
  const std::vector<std::pair<int, int>> doubled = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(half_characteristic_witness(c5, doubled),
                  std::invalid_argument);
}

TEST_CASE("deficiency maximizer") {
  // Star: deleting the hub isolates the leaves.
  const auto star = deficiency_bruteforce(complete_bipartite(1, 3));
  CHECK(star.value == 2);
  CHECK(star.set_s == std::vector<int>{0});
  CHECK(star.isolated_t == std::vector<int>{1, 2, 3});

  const auto k23 = deficiency_bruteforce(complete_bipartite(2, 3));
  CHECK(k23.value == 1);
  CHECK(k23.set_s == std::vector<int>{0, 1});
  CHECK(k23.isolated_t == std::vector<int>{2, 3, 4});

  // Ties break toward the lexicographically smallest set: the empty set
  // already attains deficiency 0 on a perfectly matchable graph.
  const auto c4 = deficiency_bruteforce(cycle_graph(4));
  CHECK(c4.value == 0);
  CHECK(c4.set_s.empty());
  CHECK(c4.isolated_t.empty());

  // Isolated vertices count themselves: S empty isolates them all.
  const auto e3 = deficiency_bruteforce(Graph(3));
  CHECK(e3.value == 3);
  CHECK(e3.set_s.empty());
  CHECK(e3.isolated_t == std::vector<int>{0, 1, 2});

  // Agrees with the independent subset scan everywhere small.
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      CHECK(deficiency_bruteforce(g).value == oracle_max_deficiency(g));

  CHECK_THROWS_AS(deficiency_bruteforce(random_graph(21, 0.5, 1), 20),
                  std::domain_error);
  CHECK_THROWS_AS(deficiency_bruteforce(path_graph(3), 63),
                  std::domain_error);
  CHECK_NOTHROW(deficiency_bruteforce(path_graph(3), 3));
}

TEST_CASE("fractional perfect matchings") {
  CHECK(has_fractional_perfect_matching(cycle_graph(5)));
  CHECK(has_fractional_perfect_matching(cycle_graph(4)));
  CHECK(has_fractional_perfect_matching(complete_graph(7)));
  CHECK(has_fractional_perfect_matching(Graph()));
  CHECK_FALSE(has_fractional_perfect_matching(Graph(1)));
  CHECK_FALSE(has_fractional_perfect_matching(complete_bipartite(1, 3)));
  CHECK_FALSE(has_fractional_perfect_matching(complete_bipartite(2, 3)));
  CHECK(has_fractional_perfect_matching(
      disjoint_union(complete_graph(3), complete_graph(3))));

  // Equivalent to zero deficiency on every small graph.
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      CHECK(has_fractional_perfect_matching(g) ==
            (oracle_max_deficiency(g) == 0));
}

}  // TEST_SUITE
