#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wiring/iso.hpp"

namespace wiring {

struct HasseEdge {
  int n_upper = 0;
  std::string cert_upper;  // hex
  int n_lower = 0;
  std::string cert_lower;  // hex
};

struct HasseOptions {
  // Refuses level pairs whose deletion-subset count exceeds this bound.
  std::uint64_t subset_budget = 2'000'000;
};

// Containment order between the catalogued classes: (A,B) related when some
// subset deletion of A's representative is simplicial and isomorphic to B.
// Only covering edges (transitive reduction over the provided levels) are
// returned, sorted.  Near-pencil records participate like any other class.
std::vector<HasseEdge> hasse_edges(const std::vector<std::vector<ArrangementRecord>>& catalogues,
                                   const HasseOptions& opts = {});

std::string print_hasse(const std::vector<HasseEdge>& edges);

}  // namespace wiring
