#pragma once

#include <string>
#include <vector>

#include "walkctl/graph.hpp"

namespace walkctl {

/// graph6 string of a canonical relabelling of g: the lexicographically least
/// graph6 over the leaves of an individualisation-refinement search tree.
/// Isomorphic graphs give identical strings.
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices,
/// canonically labelled and sorted by graph6. Built by vertex extension of
/// the (n-1)-vertex classes; intended for n <= 9.
std::vector<Graph> enumerate_graphs(int n);

/// Same as enumerate_graphs, for every order 1..max_n, concatenated.
std::vector<Graph> enumerate_graphs_up_to(int max_n);

} // namespace walkctl
