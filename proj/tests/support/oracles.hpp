#pragma once

// Test-side oracles, implemented from the definitions rather than the
// incremental production code, so the two can check each other.

#include <random>
#include <vector>

#include "wiring/cells.hpp"
#include "wiring/fragment.hpp"
#include "wiring/sequence.hpp"

namespace oracles {

// Definitional recomputation of every fragment counter from the move list:
// eps by scanning for the last junction through each row, v/s by walking each
// gap's cell history, d/u by scanning sigma.
wiring::FragmentState recompute_state(int n, const std::vector<wiring::MovePair>& moves);

// Exhaustive isomorphism test by backtracking over vertex bijections.
// Intended for graphs with at most ~12 vertices.
bool brute_isomorphic(const wiring::Graph& a, const wiring::Graph& b);

// Exhaustive automorphism count over vertex bijections.
unsigned long long brute_automorphism_count(const wiring::Graph& g);

// Uniform-ish random complete allowable sequence: random legal moves until
// the reversal (a wiring with no legal move is complete, so this never
// stalls).
wiring::AllowableSequence random_complete_sequence(int n, std::mt19937& rng);

// All completions of a fragment under unrestricted extension.
std::vector<wiring::AllowableSequence> all_completions(wiring::WiringFragment& f);

// True when at least one completion is a simplicial wiring (checked through
// the cell complex, not the fragment counters).
bool has_simplicial_completion(wiring::WiringFragment& f);

// All compositions of a positive integer.
std::vector<std::vector<int>> compositions(int total);

}  // namespace oracles
