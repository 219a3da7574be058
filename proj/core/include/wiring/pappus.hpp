#pragma once

#include <array>
#include <optional>
#include <string>

#include "wiring/cells.hpp"
#include "wiring/sequence.hpp"

namespace wiring {

// Combinatorial witness that stretchability would contradict Pappus' theorem:
// triples (x,y,z) on line1 and (u,v,w) on line2, all six connecting lines
// present in the arrangement, and exactly two of the three cross vertices
// p1 = <x,v> ^ <y,u>,  p2 = <x,w> ^ <z,u>,  p3 = <z,v> ^ <y,w>
// on a common arrangement line.  Vertices are junction indices, lines labels.
struct PappusWitness {
  int line1 = 0;
  int line2 = 0;
  std::array<int, 3> triple1{};        // x, y, z on line1
  std::array<int, 3> triple2{};        // u, v, w on line2
  std::array<int, 6> connecting{};     // <x,v>, <y,u>, <x,w>, <z,u>, <z,v>, <y,w>
  std::array<int, 3> cross_vertices{}; // p1, p2, p3
  int violating_line = 0;              // contains exactly two of the cross vertices

  std::string to_text() const;
  friend bool operator==(const PappusWitness&, const PappusWitness&) = default;
};

// Deterministic search: line pairs by label, triples lexicographic in cycle
// position, first witness returned.  A witness certifies unstretchability;
// absence decides nothing.
std::optional<PappusWitness> pappus_obstruction(const AllowableSequence& seq);
std::optional<PappusWitness> pappus_obstruction(const CellComplex& complex);

// Asserts every incidence a witness claims, against the complex.
bool verify_witness(const CellComplex& complex, const PappusWitness& witness);

}  // namespace wiring
