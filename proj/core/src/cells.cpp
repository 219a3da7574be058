#include "wiring/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wiring {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace

CellComplex cell_complex(const AllowableSequence& seq) {
  auto report = validate_sequence(seq);
  if (!report.ok) {
    throw std::invalid_argument("cell_complex: input is not a complete allowable sequence (" +
                                report.message + ")");
  }
  const int n = seq.n;
  const int m = static_cast<int>(seq.moves.size());

  CellComplex c;
  c.n = n;
  c.vertices.resize(static_cast<std::size_t>(m));
  c.line_cycles.assign(static_cast<std::size_t>(n) + 1, {});

  // Replay to collect the lines through each junction and each line's
  // junction order.
  auto sigma = identity_sigma(n);
  for (int t = 0; t < m; ++t) {
    const MovePair p = seq.moves[static_cast<std::size_t>(t)];
    CellVertex& vertex = c.vertices[static_cast<std::size_t>(t)];
    vertex.move = p;
    for (int row = p.a; row <= p.b; ++row) {
      const int label = sigma[static_cast<std::size_t>(row)];
      vertex.lines.push_back(label);
      c.line_cycles[static_cast<std::size_t>(label)].push_back(t);
    }
    std::sort(vertex.lines.begin(), vertex.lines.end());
    std::reverse(sigma.begin() + p.a, sigma.begin() + p.b + 1);
  }

  // One edge per consecutive pair of a line's junction cycle.  edge_at[l][k]
  // is the edge from the k-th junction of line l to the next (cyclically).
  std::vector<std::vector<int>> edge_at(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) {
    const auto& cyc = c.line_cycles[static_cast<std::size_t>(l)];
    auto& ids = edge_at[static_cast<std::size_t>(l)];
    if (cyc.empty()) throw std::logic_error("cell_complex: line without junctions");
    const std::size_t count = cyc.size() == 1 ? 1 : cyc.size();
    for (std::size_t k = 0; k < count; ++k) {
      const int v1 = cyc[k];
      const int v2 = cyc[(k + 1) % cyc.size()];
      ids.push_back(static_cast<int>(c.edges.size()));
      c.edges.push_back({v1, v2, l});
    }
  }

  // Strips: (slice t, affine gap g) for t = 0..m, g = 0..n; g = 0 below row 1,
  // g = n above row n.  A junction (a,b) at step t+1 blocks strips a..b-1.
  const int strips_per_slice = n + 1;
  auto strip_id = [strips_per_slice](int t, int g) { return t * strips_per_slice + g; };
  UnionFind uf(static_cast<std::size_t>((m + 1) * strips_per_slice));
  for (int t = 1; t <= m; ++t) {
    const MovePair p = seq.moves[static_cast<std::size_t>(t - 1)];
    for (int g = 0; g <= n; ++g) {
      if (g >= p.a && g <= p.b - 1) continue;
      uf.unite(strip_id(t - 1, g), strip_id(t, g));
    }
  }
  for (int g = 0; g <= n; ++g) uf.unite(strip_id(m, g), strip_id(0, n - g));

  // Face-vertex incidence: a junction lies on the boundary of the strips it
  // touches on both sides.
  std::map<int, std::set<int>> face_vertices;
  for (int t = 1; t <= m; ++t) {
    const MovePair p = seq.moves[static_cast<std::size_t>(t - 1)];
    for (int g = p.a - 1; g <= p.b; ++g) {
      face_vertices[uf.find(strip_id(t - 1, g))].insert(t - 1);
      face_vertices[uf.find(strip_id(t, g))].insert(t - 1);
    }
  }

  // Face-edge incidence: each strip is bounded by the wire segments above and
  // below it; a segment of line l during slice t belongs to the edge leaving
  // l's most recent junction (cyclically, before the first junction it is the
  // wrap-around edge).
  std::vector<std::vector<int>> seg_index(static_cast<std::size_t>(n) + 1,
                                          std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
  for (int l = 1; l <= n; ++l) {
    const auto& cyc = c.line_cycles[static_cast<std::size_t>(l)];
    const std::size_t cyclen = cyc.size();
    // seg_index[l][t] = index into edge_at[l] of the edge the line travels on
    // during slice t.  Before the first junction the line is on the edge
    // arriving from its last junction (the wrap edge).
    std::size_t k = 0;
    for (int t = 0; t <= m; ++t) {
      while (k < cyclen && cyc[k] < t) ++k;
      // k = number of junctions of l strictly before slice t; the line is on
      // the edge leaving junction k-1 (mod cycle), i.e. edge (k-1 mod len).
      const std::size_t edge_count = edge_at[static_cast<std::size_t>(l)].size();
      const std::size_t idx = (k + edge_count - 1) % edge_count;
      seg_index[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = static_cast<int>(idx);
    }
  }

  std::map<int, std::set<int>> face_edges;
  sigma = identity_sigma(n);
  for (int t = 0; t <= m; ++t) {
    for (int g = 0; g <= n; ++g) {
      const int face = uf.find(strip_id(t, g));
      if (g >= 1) {
        const int l = sigma[static_cast<std::size_t>(g)];
        face_edges[face].insert(
            edge_at[static_cast<std::size_t>(l)]
                   [static_cast<std::size_t>(seg_index[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)])]);
      }
      if (g <= n - 1) {
        const int l = sigma[static_cast<std::size_t>(g + 1)];
        face_edges[face].insert(
            edge_at[static_cast<std::size_t>(l)]
                   [static_cast<std::size_t>(seg_index[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)])]);
      }
    }
    if (t < m) {
      const MovePair p = seq.moves[static_cast<std::size_t>(t)];
      std::reverse(sigma.begin() + p.a, sigma.begin() + p.b + 1);
    }
  }

  // Collect faces over all strip classes (every class is a face).
  std::map<int, int> face_index;
  for (int t = 0; t <= m; ++t) {
    for (int g = 0; g <= n; ++g) {
      const int root = uf.find(strip_id(t, g));
      if (face_index.emplace(root, static_cast<int>(face_index.size())).second) {
        c.faces.emplace_back();
      }
    }
  }
  for (const auto& [root, idx] : face_index) {
    CellFace& face = c.faces[static_cast<std::size_t>(idx)];
    const auto fv = face_vertices.find(root);
    if (fv != face_vertices.end()) face.vertices.assign(fv->second.begin(), fv->second.end());
    const auto fe = face_edges.find(root);
    if (fe != face_edges.end()) face.edges.assign(fe->second.begin(), fe->second.end());
  }
  return c;
}

InvariantVector invariants(const CellComplex& c) {
  InvariantVector iv;
  iv.n = c.n;
  iv.f0 = c.f0();
  iv.f1 = c.f1();
  iv.f2 = c.f2();
  int max_mult = 2;
  for (const CellVertex& v : c.vertices) max_mult = std::max(max_mult, v.multiplicity());
  iv.t.assign(static_cast<std::size_t>(max_mult) + 1, 0);
  for (const CellVertex& v : c.vertices) ++iv.t[static_cast<std::size_t>(v.multiplicity())];
  int max_line = 2;
  for (int l = 1; l <= c.n; ++l)
    max_line = std::max(max_line, static_cast<int>(c.line_cycles[static_cast<std::size_t>(l)].size()));
  iv.r.assign(static_cast<std::size_t>(max_line) + 1, 0);
  for (int l = 1; l <= c.n; ++l)
    ++iv.r[c.line_cycles[static_cast<std::size_t>(l)].size()];
  return iv;
}

std::string print_invariants(const InvariantVector& iv) {
  std::ostringstream out;
  out << iv.f0 << ',' << iv.f1 << ',' << iv.f2 << '|';
  for (std::size_t k = 2; k < iv.t.size(); ++k) {
    if (k > 2) out << ',';
    out << iv.t[k];
  }
  out << '|';
  for (std::size_t k = 2; k < iv.r.size(); ++k) {
    if (k > 2) out << ',';
    out << iv.r[k];
  }
  return out.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

InvariantVector parse_invariants(const std::string& text, int n) {
  const auto bar1 = text.find('|');
  const auto bar2 = text.find('|', bar1 + 1);
  if (bar1 == std::string::npos || bar2 == std::string::npos) {
    throw std::invalid_argument("invariants: expected 'f|t|r' with two bars");
  }
  InvariantVector iv;
  iv.n = n;
  const auto fs = parse_int_list(text.substr(0, bar1));
  if (fs.size() != 3) throw std::invalid_argument("invariants: f part must have three entries");
  iv.f0 = fs[0];
  iv.f1 = fs[1];
  iv.f2 = fs[2];
  iv.t.assign(2, 0);
  for (int x : parse_int_list(text.substr(bar1 + 1, bar2 - bar1 - 1))) iv.t.push_back(x);
  iv.r.assign(2, 0);
  for (int x : parse_int_list(text.substr(bar2 + 1))) iv.r.push_back(x);
  return iv;
}

bool is_simplicial(const CellComplex& c) {
  for (const CellFace& face : c.faces) {
    if (face.vertices.size() != 3) return false;
  }
  return true;
}

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  g.adjacency.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& [a, b] : g.edges) {
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& lst : g.adjacency) std::sort(lst.begin(), lst.end());
  return g;
}

Graph triangulation_graph(const CellComplex& c) {
  if (!is_simplicial(c)) {
    throw std::invalid_argument("triangulation_graph: arrangement is not simplicial");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(c.edges.size());
  for (const CellEdge& e : c.edges) {
    if (e.v1 != e.v2) edges.emplace_back(e.v1, e.v2);
  }
  return Graph::from_edges(c.f0(), std::move(edges));
}

Graph triangulation_graph(const AllowableSequence& seq) {
  return triangulation_graph(cell_complex(seq));
}

}  // namespace wiring
