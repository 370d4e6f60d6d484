// Exhaustive generation of pairwise non-isomorphic graphs, used to drive
// whole-corpus checks in the unit and acceptance suites.
#pragma once

#include <string>
#include <vector>

#include "specmatch/graph.hpp"

namespace testsupport {

// Lexicographically maximal upper-triangle bit string over all vertex
// orderings ('0'/'1' chars, column appended per placed vertex).  Two graphs
// are isomorphic iff their codes are equal.
std::string canonical_code(const specmatch::Graph& g);

// All non-isomorphic graphs on exactly n >= 1 vertices, built by vertex
// addition with canonical deduplication.
std::vector<specmatch::Graph> enumerate_graphs(int n);

// The connected ones, in the same order.
std::vector<specmatch::Graph> enumerate_connected(int n);

}  // namespace testsupport
