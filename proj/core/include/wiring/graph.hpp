#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wiring/cells.hpp"

namespace wiring {

// Iterative neighborhood refinement (colors stable under the map
// color -> (color, sorted neighbor colors)), with canonical color ids.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

// Canonical form via refinement with backtracking individualization: the
// lexicographically least relabelled adjacency encoding over the search tree.
// Equal strings exactly characterize isomorphic graphs.
std::string canonical_certificate(const Graph& g);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

bool graphs_isomorphic(const Graph& a, const Graph& b);

struct AutomorphismInfo {
  std::uint64_t order = 0;
  std::map<int, int> element_orders;  // permutation order -> count
};

// Order of the automorphism group of the graph, computed by color-pruned
// backtracking over vertex bijections.
AutomorphismInfo graph_automorphisms(const Graph& g);

}  // namespace wiring
