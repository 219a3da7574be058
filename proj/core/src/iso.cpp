#include "wiring/iso.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wiring {

Fingerprint fingerprint(const AllowableSequence& seq) {
  const CellComplex c = cell_complex(seq);
  if (!is_simplicial(c)) throw std::invalid_argument("fingerprint: arrangement is not simplicial");
  const Graph g = triangulation_graph(c);

  Fingerprint fp;
  fp.n = seq.n;
  fp.invariants = invariants(c);
  fp.degree_sequence.reserve(static_cast<std::size_t>(g.vertex_count));
  for (const auto& adj : g.adjacency) fp.degree_sequence.push_back(static_cast<int>(adj.size()));
  std::sort(fp.degree_sequence.begin(), fp.degree_sequence.end());

  for (int v = 0; v < g.vertex_count; ++v) {
    std::vector<int> neighbor_mults;
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      neighbor_mults.push_back(c.vertices[static_cast<std::size_t>(w)].multiplicity());
    }
    std::sort(neighbor_mults.begin(), neighbor_mults.end());
    fp.link_types.emplace_back(c.vertices[static_cast<std::size_t>(v)].multiplicity(),
                               std::move(neighbor_mults));
  }
  std::sort(fp.link_types.begin(), fp.link_types.end());
  return fp;
}

bool isomorphic(const AllowableSequence& a, const AllowableSequence& b) {
  if (a.n != b.n) return false;
  return graphs_isomorphic(triangulation_graph(a), triangulation_graph(b));
}

namespace {

bool has_parallel_edges(const CellComplex& c) {
  for (int l = 1; l <= c.n; ++l) {
    if (c.line_cycles[static_cast<std::size_t>(l)].size() <= 2) return true;
  }
  return false;
}

// Automorphism count of the cell complex itself: pairs of a vertex bijection
// and an edge bijection that map the face system onto itself.  Only needed
// for complexes with parallel edges, where the plain graph undercounts.
struct ComplexAut {
  const CellComplex& c;
  int nv;
  // bundle(u,v) = edge ids joining u and v
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  std::vector<std::vector<int>> faces_by_vertexset;  // face ids grouped later
  std::vector<int> vertex_image;
  std::vector<char> vertex_used;
  std::uint64_t count = 0;

  explicit ComplexAut(const CellComplex& complex) : c(complex), nv(complex.f0()) {
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      const std::pair<int, int> key{std::min(c.edges[e].v1, c.edges[e].v2),
                                    std::max(c.edges[e].v1, c.edges[e].v2)};
      bundles[key].push_back(static_cast<int>(e));
    }
    vertex_image.assign(static_cast<std::size_t>(nv), -1);
    vertex_used.assign(static_cast<std::size_t>(nv), 0);
  }

  std::size_t bundle_size(int u, int v) const {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = bundles.find(key);
    return it == bundles.end() ? 0 : it->second.size();
  }

  void run() { bt_vertex(0); }

  void bt_vertex(int v) {
    if (v == nv) {
      count += count_edge_bijections();
      return;
    }
    for (int w = 0; w < nv; ++w) {
      if (vertex_used[static_cast<std::size_t>(w)]) continue;
      if (c.vertices[static_cast<std::size_t>(v)].multiplicity() !=
          c.vertices[static_cast<std::size_t>(w)].multiplicity())
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (bundle_size(v, u) != bundle_size(w, vertex_image[static_cast<std::size_t>(u)])) ok = false;
      }
      if (!ok) continue;
      vertex_image[static_cast<std::size_t>(v)] = w;
      vertex_used[static_cast<std::size_t>(w)] = 1;
      bt_vertex(v + 1);
      vertex_used[static_cast<std::size_t>(w)] = 0;
      vertex_image[static_cast<std::size_t>(v)] = -1;
    }
  }

  // With the vertex bijection fixed, parallel bundles can be matched in two
  // ways each; the face system must be preserved.  Faces are matched greedily
  // per assignment via backtracking over the ambiguous bundles.
  std::uint64_t count_edge_bijections() {
    // edge -> image constraints are per-bundle: a bundle {e1} maps to the
    // single edge of the image bundle; a bundle {e1,e2} maps forward or
    // crossed.  Collect ambiguous bundles.
    std::vector<const std::vector<int>*> src_bundles;
    std::vector<const std::vector<int>*> dst_bundles;
    for (const auto& [key, ids] : bundles) {
      const int a = vertex_image[static_cast<std::size_t>(key.first)];
      const int b = vertex_image[static_cast<std::size_t>(key.second)];
      const std::pair<int, int> image_key{std::min(a, b), std::max(a, b)};
      auto it = bundles.find(image_key);
      if (it == bundles.end() || it->second.size() != ids.size()) return 0;
      src_bundles.push_back(&ids);
      dst_bundles.push_back(&it->second);
    }
    // face keys: multiset of (vertex set) is preserved by construction; the
    // real constraint is the edge sets.  Represent each face by its sorted
    // edge id set and look images up in a set.
    std::set<std::vector<int>> face_set;
    for (const auto& f : c.faces) face_set.insert(f.edges);

    std::vector<int> edge_image(c.edges.size(), -1);
    std::vector<std::size_t> ambiguous;
    for (std::size_t bidx = 0; bidx < src_bundles.size(); ++bidx) {
      const auto& src = *src_bundles[bidx];
      const auto& dst = *dst_bundles[bidx];
      if (src.size() == 1) {
        edge_image[static_cast<std::size_t>(src[0])] = dst[0];
      } else if (src.size() == 2) {
        ambiguous.push_back(bidx);
      } else {
        return 0;  // arrangements never have three parallel edges
      }
    }

    std::uint64_t total = 0;
    // Depth-first over the 2^k bundle orientations with early face checking.
    auto faces_ok = [&]() {
      for (const auto& f : c.faces) {
        std::vector<int> image;
        image.reserve(f.edges.size());
        bool complete = true;
        for (int e : f.edges) {
          const int im = edge_image[static_cast<std::size_t>(e)];
          if (im < 0) {
            complete = false;
            break;
          }
          image.push_back(im);
        }
        if (!complete) continue;
        std::sort(image.begin(), image.end());
        if (!face_set.count(image)) return false;
      }
      return true;
    };
    std::function<void(std::size_t)> bt = [&](std::size_t k) {
      if (!faces_ok()) return;
      if (k == ambiguous.size()) {
        ++total;
        return;
      }
      const auto& src = *src_bundles[ambiguous[k]];
      const auto& dst = *dst_bundles[ambiguous[k]];
      for (int orientation = 0; orientation < 2; ++orientation) {
        edge_image[static_cast<std::size_t>(src[0])] = dst[static_cast<std::size_t>(orientation)];
        edge_image[static_cast<std::size_t>(src[1])] = dst[static_cast<std::size_t>(1 - orientation)];
        bt(k + 1);
      }
      edge_image[static_cast<std::size_t>(src[0])] = -1;
      edge_image[static_cast<std::size_t>(src[1])] = -1;
    };
    bt(0);
    return total;
  }
};

}  // namespace

AutomorphismInfo automorphism_info(const AllowableSequence& seq) {
  const CellComplex c = cell_complex(seq);
  if (!is_simplicial(c)) {
    throw std::invalid_argument("automorphism_count: arrangement is not simplicial");
  }
  if (!has_parallel_edges(c)) {
    return graph_automorphisms(triangulation_graph(c));
  }
  ComplexAut search(c);
  search.run();
  AutomorphismInfo info;
  info.order = search.count;
  return info;
}

std::uint64_t automorphism_count(const AllowableSequence& seq) {
  return automorphism_info(seq).order;
}

void Dedup::add(const AllowableSequence& seq) {
  const bool np = is_near_pencil(seq);
  const std::string cert = canonical_certificate(triangulation_graph(seq));
  const Key key{np, cert};
  auto it = classes_.find(key);
  if (it == classes_.end()) {
    ArrangementRecord rec;
    rec.representative = seq;
    rec.print = fingerprint(seq);
    rec.certificate = cert;
    rec.near_pencil = np;
    classes_.emplace(key, std::move(rec));
  } else if (seq < it->second.representative) {
    it->second.representative = seq;
  }
}

std::vector<ArrangementRecord> Dedup::take_records() {
  std::vector<ArrangementRecord> out;
  out.reserve(classes_.size());
  for (auto& [key, rec] : classes_) out.push_back(std::move(rec));
  classes_.clear();
  return out;
}

std::vector<ArrangementRecord> dedup(const std::vector<AllowableSequence>& stream) {
  Dedup d;
  for (const auto& seq : stream) d.add(seq);
  return d.take_records();
}

}  // namespace wiring
