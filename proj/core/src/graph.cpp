#include "wiring/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wiring {

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const std::size_t nv = static_cast<std::size_t>(g.vertex_count);
  if (colors.size() != nv) throw std::invalid_argument("refine_colors: color size mismatch");
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> signatures(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<int> sig;
      sig.reserve(g.adjacency[v].size() + 1);
      sig.push_back(colors[v]);
      for (int w : g.adjacency[v]) sig.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(sig.begin() + 1, sig.end());
      signatures[v] = {std::move(sig), static_cast<int>(v)};
    }
    auto sorted = signatures;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(nv, 0);
    int classes = 0;
    for (std::size_t k = 0; k < nv; ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++classes;
      next[static_cast<std::size_t>(sorted[k].second)] = classes;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

namespace {

std::string encode_with_labels(const Graph& g, const std::vector<int>& label_of_vertex) {
  const int nv = g.vertex_count;
  std::string enc;
  enc.push_back(static_cast<char>(nv >> 8));
  enc.push_back(static_cast<char>(nv & 0xff));
  const std::size_t bits = static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv - 1) / 2;
  enc.resize(2 + (bits + 7) / 8, '\0');
  auto pair_index = [nv](int i, int j) {
    // upper triangle, i < j
    return static_cast<std::size_t>(i) * (2 * static_cast<std::size_t>(nv) - static_cast<std::size_t>(i) - 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
  };
  for (const auto& [a, b] : g.edges) {
    int i = label_of_vertex[static_cast<std::size_t>(a)];
    int j = label_of_vertex[static_cast<std::size_t>(b)];
    if (i > j) std::swap(i, j);
    const std::size_t idx = pair_index(i, j);
    enc[2 + idx / 8] = static_cast<char>(static_cast<unsigned char>(enc[2 + idx / 8]) |
                                         (1u << (idx % 8)));
  }
  return enc;
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  bool have_best = false;

  void descend(std::vector<int> colors) {
    colors = refine_colors(g, std::move(colors));
    const std::size_t nv = static_cast<std::size_t>(g.vertex_count);
    std::vector<int> class_size(nv + 1, 0);
    for (int c : colors) ++class_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c <= nv; ++c) {
      if (class_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      std::string enc = encode_with_labels(g, colors);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    const int fresh = static_cast<int>(nv);  // sorts after every existing color
    for (std::size_t v = 0; v < nv; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> child = colors;
      child[v] = fresh;
      descend(std::move(child));
    }
  }
};

}  // namespace

std::string canonical_certificate(const Graph& g) {
  if (g.vertex_count == 0) return std::string("\0\0", 2);
  CanonSearch search{g, {}, false};
  search.descend(std::vector<int>(static_cast<std::size_t>(g.vertex_count), 0));
  return search.best;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("from_hex: odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("from_hex: bad digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return out;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

namespace {

struct AutSearch {
  const Graph& g;
  std::vector<int> colors;  // refined, isomorphism-invariant
  std::vector<int> order;   // processing order (BFS so constraints bind early)
  std::vector<int> image;
  std::vector<char> used;
  AutomorphismInfo info;

  bool adjacent(int a, int b) const {
    const auto& lst = g.adjacency[static_cast<std::size_t>(a)];
    return std::binary_search(lst.begin(), lst.end(), b);
  }

  void record() {
    ++info.order;
    const std::size_t nv = image.size();
    std::vector<char> seen(nv, 0);
    long long ord = 1;
    for (std::size_t v = 0; v < nv; ++v) {
      if (seen[v]) continue;
      int len = 0;
      std::size_t w = v;
      while (!seen[w]) {
        seen[w] = 1;
        w = static_cast<std::size_t>(image[w]);
        ++len;
      }
      ord = std::lcm(ord, static_cast<long long>(len));
    }
    ++info.element_orders[static_cast<int>(ord)];
  }

  void bt(std::size_t k) {
    if (k == order.size()) {
      record();
      return;
    }
    const int v = order[k];
    for (int w = 0; w < g.vertex_count; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (colors[static_cast<std::size_t>(w)] != colors[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = order[j];
        if (adjacent(v, u) != adjacent(w, image[static_cast<std::size_t>(u)])) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      bt(k + 1);
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
  }
};

}  // namespace

AutomorphismInfo graph_automorphisms(const Graph& g) {
  const std::size_t nv = static_cast<std::size_t>(g.vertex_count);
  if (nv == 0) return {1, {{1, 1}}};
  AutSearch search{g, {}, {}, {}, {}, {}};
  search.colors = refine_colors(g, std::vector<int>(nv, 0));
  search.order.reserve(nv);
  std::vector<char> visited(nv, 0);
  std::vector<int> queue;
  for (std::size_t root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    queue.push_back(static_cast<int>(root));
    visited[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      search.order.push_back(v);
      for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    queue.clear();
  }
  search.image.assign(nv, -1);
  search.used.assign(nv, 0);
  search.bt(0);
  return search.info;
}

}  // namespace wiring
