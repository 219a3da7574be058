#pragma once

#include <string>
#include <vector>

#include "wiring/sequence.hpp"

namespace wiring {

// Cell decomposition of the real projective plane induced by a complete
// wiring.  Vertices are the junctions; each line's vertices form one closed
// cycle of edges (a line through exactly two vertices contributes two parallel
// edges, a line through one vertex contributes a loop).  Faces are traced from
// the diagram strips with the antipodal boundary identification: right row i
// glues to left row n+1-i, right gap g to left gap (n-g) mod n.
struct CellVertex {
  MovePair move;
  std::vector<int> lines;  // sorted labels through this vertex

  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct CellEdge {
  int v1 = 0;
  int v2 = 0;  // v1 == v2 for the loop of a one-vertex line
  int line = 0;
};

struct CellFace {
  std::vector<int> vertices;  // sorted, distinct
  std::vector<int> edges;     // sorted, distinct
};

struct CellComplex {
  int n = 0;
  std::vector<CellVertex> vertices;
  std::vector<CellEdge> edges;
  std::vector<CellFace> faces;
  std::vector<std::vector<int>> line_cycles;  // per label 1..n (index 0 unused)

  int f0() const { return static_cast<int>(vertices.size()); }
  int f1() const { return static_cast<int>(edges.size()); }
  int f2() const { return static_cast<int>(faces.size()); }
};

CellComplex cell_complex(const AllowableSequence& seq);

struct InvariantVector {
  int n = 0;
  int f0 = 0;
  int f1 = 0;
  int f2 = 0;
  std::vector<int> t;  // t[k] = vertices on exactly k lines, k from 2
  std::vector<int> r;  // r[k] = lines with exactly k vertices, k from 2

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  friend auto operator<=>(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariants(const CellComplex& c);

// Compact text form "f0,f1,f2|t2,t3,...|r2,r3,..." used in catalogues.
std::string print_invariants(const InvariantVector& iv);
InvariantVector parse_invariants(const std::string& text, int n);

bool is_simplicial(const CellComplex& c);

// Simple graph on the arrangement vertices, two vertices adjacent when they
// are consecutive on a common line.  Parallel edges of the complex collapse.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;           // v1 < v2, sorted, unique
  std::vector<std::vector<int>> adjacency;          // sorted neighbor lists

  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);
};

// Requires a complete simplicial wiring (precondition of the isomorphism
// reduction to graphs).
Graph triangulation_graph(const AllowableSequence& seq);
Graph triangulation_graph(const CellComplex& c);

}  // namespace wiring
