// Independent brute-force oracles and tiny graph factories for the test
// suites.  These deliberately share no code with the library under test.
#pragma once

#include "specmatch/fracmatch.hpp"
#include "specmatch/graph.hpp"

namespace testsupport {

specmatch::Graph path_graph(int n);
specmatch::Graph cycle_graph(int n);
specmatch::Graph complete_graph(int n);

// Maximum matching size of any graph by memoized branching (n <= 24).
int oracle_max_matching(const specmatch::Graph& g);

// max over every vertex subset S of (isolated vertices of G - S) - |S|
// (n <= 20); always >= 0 because S may be empty.
int oracle_max_deficiency(const specmatch::Graph& g);

// Fractional matching number from the deficiency identity
// 2 mu_f = n - max deficiency.
specmatch::HalfInt oracle_mu_f(const specmatch::Graph& g);

}  // namespace testsupport
