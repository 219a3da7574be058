#include "wiring/pappus.hpp"

#include <algorithm>
#include <sstream>

namespace wiring {

namespace {

// Incidence lookups: which line joins two vertices (two vertices lie on at
// most one common line), which vertex joins two lines (exactly one).
struct Incidence {
  int n;
  int nv;
  std::vector<int> line_through;   // nv*nv, -1 when the vertices span no line
  std::vector<int> meet;           // (n+1)^2, junction index of line pair
  std::vector<std::vector<char>> on_line;  // [label][vertex]

  explicit Incidence(const CellComplex& c) : n(c.n), nv(c.f0()) {
    line_through.assign(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), -1);
    meet.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), -1);
    on_line.assign(static_cast<std::size_t>(n + 1),
                   std::vector<char>(static_cast<std::size_t>(nv), 0));
    for (int t = 0; t < nv; ++t) {
      const auto& lines = c.vertices[static_cast<std::size_t>(t)].lines;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        on_line[static_cast<std::size_t>(lines[i])][static_cast<std::size_t>(t)] = 1;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          meet[static_cast<std::size_t>(lines[i]) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(lines[j])] = t;
          meet[static_cast<std::size_t>(lines[j]) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(lines[i])] = t;
        }
      }
    }
    for (int l = 1; l <= n; ++l) {
      const auto& cyc = c.line_cycles[static_cast<std::size_t>(l)];
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        for (std::size_t j = i + 1; j < cyc.size(); ++j) {
          line_through[static_cast<std::size_t>(cyc[i]) * static_cast<std::size_t>(nv) +
                       static_cast<std::size_t>(cyc[j])] = l;
          line_through[static_cast<std::size_t>(cyc[j]) * static_cast<std::size_t>(nv) +
                       static_cast<std::size_t>(cyc[i])] = l;
        }
      }
    }
  }

  int join(int v1, int v2) const {
    return line_through[static_cast<std::size_t>(v1) * static_cast<std::size_t>(nv) +
                        static_cast<std::size_t>(v2)];
  }
  int meet_of(int l1, int l2) const {
    return meet[static_cast<std::size_t>(l1) * static_cast<std::size_t>(n + 1) +
                static_cast<std::size_t>(l2)];
  }
};

bool all_distinct(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

std::optional<PappusWitness> pappus_obstruction(const CellComplex& c) {
  const Incidence inc(c);
  const int n = c.n;

  for (int l1 = 1; l1 <= n; ++l1) {
    for (int l2 = l1 + 1; l2 <= n; ++l2) {
      const int common = inc.meet_of(l1, l2);
      // vertices available on each line, excluding the common vertex
      std::vector<int> verts1, verts2;
      for (int v : c.line_cycles[static_cast<std::size_t>(l1)])
        if (v != common) verts1.push_back(v);
      for (int v : c.line_cycles[static_cast<std::size_t>(l2)])
        if (v != common) verts2.push_back(v);
      if (verts1.size() < 3 || verts2.size() < 3) continue;

      for (int x : verts1) {
        for (int y : verts1) {
          if (y == x) continue;
          for (int z : verts1) {
            if (z == x || z == y) continue;
            for (int u : verts2) {
              const int l_yu = inc.join(y, u);
              if (l_yu < 0) continue;
              const int l_zu = inc.join(z, u);
              if (l_zu < 0) continue;
              for (int v : verts2) {
                if (v == u) continue;
                const int l_xv = inc.join(x, v);
                if (l_xv < 0) continue;
                const int l_zv = inc.join(z, v);
                if (l_zv < 0) continue;
                for (int w : verts2) {
                  if (w == u || w == v) continue;
                  const int l_xw = inc.join(x, w);
                  if (l_xw < 0) continue;
                  const int l_yw = inc.join(y, w);
                  if (l_yw < 0) continue;
                  if (!all_distinct({l_xv, l_yu, l_xw, l_zu, l_zv, l_yw})) continue;
                  const int p1 = inc.meet_of(l_xv, l_yu);
                  const int p2 = inc.meet_of(l_xw, l_zu);
                  const int p3 = inc.meet_of(l_zv, l_yw);
                  if (!all_distinct({p1, p2, p3})) continue;
                  if (p1 == x || p1 == y || p1 == z || p1 == u || p1 == v || p1 == w) continue;
                  if (p2 == x || p2 == y || p2 == z || p2 == u || p2 == v || p2 == w) continue;
                  if (p3 == x || p3 == y || p3 == z || p3 == u || p3 == v || p3 == w) continue;
                  for (int h = 1; h <= n; ++h) {
                    const int hits = inc.on_line[static_cast<std::size_t>(h)][static_cast<std::size_t>(p1)] +
                                     inc.on_line[static_cast<std::size_t>(h)][static_cast<std::size_t>(p2)] +
                                     inc.on_line[static_cast<std::size_t>(h)][static_cast<std::size_t>(p3)];
                    if (hits == 2) {
                      PappusWitness witness;
                      witness.line1 = l1;
                      witness.line2 = l2;
                      witness.triple1 = {x, y, z};
                      witness.triple2 = {u, v, w};
                      witness.connecting = {l_xv, l_yu, l_xw, l_zu, l_zv, l_yw};
                      witness.cross_vertices = {p1, p2, p3};
                      witness.violating_line = h;
                      return witness;
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PappusWitness> pappus_obstruction(const AllowableSequence& seq) {
  return pappus_obstruction(cell_complex(seq));
}

bool verify_witness(const CellComplex& c, const PappusWitness& wit) {
  const Incidence inc(c);
  const auto on = [&](int line, int vertex) {
    return inc.on_line[static_cast<std::size_t>(line)][static_cast<std::size_t>(vertex)] != 0;
  };
  const auto& [x, y, z] = wit.triple1;
  const auto& [u, v, w] = wit.triple2;
  if (!all_distinct({x, y, z}) || !all_distinct({u, v, w})) return false;
  for (int t : {x, y, z})
    if (!on(wit.line1, t)) return false;
  for (int t : {u, v, w})
    if (!on(wit.line2, t)) return false;
  const int common = inc.meet_of(wit.line1, wit.line2);
  for (int t : {x, y, z, u, v, w})
    if (t == common) return false;
  const std::array<std::pair<int, int>, 6> joins = {{{x, v}, {y, u}, {x, w}, {z, u}, {z, v}, {y, w}}};
  for (std::size_t k = 0; k < 6; ++k) {
    if (inc.join(joins[k].first, joins[k].second) != wit.connecting[k]) return false;
  }
  if (!all_distinct({wit.connecting[0], wit.connecting[1], wit.connecting[2], wit.connecting[3],
                     wit.connecting[4], wit.connecting[5]}))
    return false;
  if (inc.meet_of(wit.connecting[0], wit.connecting[1]) != wit.cross_vertices[0]) return false;
  if (inc.meet_of(wit.connecting[2], wit.connecting[3]) != wit.cross_vertices[1]) return false;
  if (inc.meet_of(wit.connecting[4], wit.connecting[5]) != wit.cross_vertices[2]) return false;
  if (!all_distinct({wit.cross_vertices[0], wit.cross_vertices[1], wit.cross_vertices[2]}))
    return false;
  int hits = 0;
  for (int p : wit.cross_vertices) hits += on(wit.violating_line, p) ? 1 : 0;
  return hits == 2;
}

std::string PappusWitness::to_text() const {
  std::ostringstream out;
  out << "pappus lines=" << line1 << ',' << line2 << " triple1=" << triple1[0] << ','
      << triple1[1] << ',' << triple1[2] << " triple2=" << triple2[0] << ',' << triple2[1] << ','
      << triple2[2] << " connecting=" << connecting[0] << ',' << connecting[1] << ','
      << connecting[2] << ',' << connecting[3] << ',' << connecting[4] << ',' << connecting[5]
      << " cross=" << cross_vertices[0] << ',' << cross_vertices[1] << ',' << cross_vertices[2]
      << " line=" << violating_line;
  return out.str();
}

}  // namespace wiring
