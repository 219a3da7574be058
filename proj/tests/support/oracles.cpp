#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracles {

using wiring::AllowableSequence;
using wiring::FragmentState;
using wiring::Graph;
using wiring::MovePair;
using wiring::WiringFragment;

FragmentState recompute_state(int n, const std::vector<MovePair>& moves) {
  FragmentState st;
  // sigma by direct replay
  st.sigma.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) st.sigma[static_cast<std::size_t>(i)] = i;
  for (const MovePair& p : moves) {
    for (int i = p.a; i < p.b; ++i) {
      if (st.sigma[static_cast<std::size_t>(i)] >= st.sigma[static_cast<std::size_t>(i) + 1]) {
        throw std::invalid_argument("recompute_state: illegal move sequence");
      }
    }
    std::reverse(st.sigma.begin() + p.a, st.sigma.begin() + p.b + 1);
  }

  // eps[i]: size of the last junction whose rows include i
  st.eps.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (const MovePair& p : moves) {
      if (p.a <= i && i <= p.b) st.eps[static_cast<std::size_t>(i)] = p.size();
    }
  }

  // v/s per gap from the cell history
  st.v.assign(static_cast<std::size_t>(n), 0);
  st.s.assign(static_cast<std::size_t>(n), 0);
  for (int g = 1; g <= n - 1; ++g) {
    int open_count = 0;
    bool first_open = true;
    int s_value = 0;
    for (const MovePair& p : moves) {
      const bool interior = p.a <= g && g <= p.b - 1;
      const bool boundary = (p.a - 1 == g) || (p.b == g);
      if (interior) {
        if (first_open) {
          s_value = open_count + 1;
          first_open = false;
        }
        open_count = 1;
      } else if (boundary) {
        open_count += 1;
        if (first_open) s_value = open_count;
      }
    }
    st.v[static_cast<std::size_t>(g)] = open_count;
    st.s[static_cast<std::size_t>(g)] = s_value;
  }
  // wrap gap: the single never-closing cell below row 1 / above row n
  int wrap = 0;
  for (const MovePair& p : moves) {
    if (p.a == 1) ++wrap;
    if (p.b == n) ++wrap;
  }
  st.v[0] = wrap;
  st.s[0] = 0;

  // d: first row whose prefix is not final (capped at n); u: last such row
  // (capped at 1)
  int first_nonfinal = n + 1;
  int last_nonfinal = 0;
  for (int i = 1; i <= n; ++i) {
    if (st.sigma[static_cast<std::size_t>(i)] != n + 1 - i) {
      first_nonfinal = std::min(first_nonfinal, i);
      last_nonfinal = std::max(last_nonfinal, i);
    }
  }
  st.d = std::min(first_nonfinal, n);
  st.u = std::max(last_nonfinal, 1);
  return st;
}

namespace {

bool extend_bijection(const Graph& a, const Graph& b, std::vector<int>& image,
                      std::vector<char>& used, std::size_t k) {
  if (k == image.size()) return true;
  for (int w = 0; w < b.vertex_count; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    if (a.adjacency[k].size() != b.adjacency[static_cast<std::size_t>(w)].size()) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      const bool adj_a = std::binary_search(a.adjacency[k].begin(), a.adjacency[k].end(),
                                            static_cast<int>(j));
      const bool adj_b = std::binary_search(b.adjacency[static_cast<std::size_t>(w)].begin(),
                                            b.adjacency[static_cast<std::size_t>(w)].end(),
                                            image[j]);
      if (adj_a != adj_b) ok = false;
    }
    if (!ok) continue;
    image[k] = w;
    used[static_cast<std::size_t>(w)] = 1;
    if (extend_bijection(a, b, image, used, k + 1)) return true;
    used[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

void count_automorphisms(const Graph& g, std::vector<int>& image, std::vector<char>& used,
                         std::size_t k, unsigned long long& count) {
  if (k == image.size()) {
    ++count;
    return;
  }
  for (int w = 0; w < g.vertex_count; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      const bool adj_a =
          std::binary_search(g.adjacency[k].begin(), g.adjacency[k].end(), static_cast<int>(j));
      const bool adj_b = std::binary_search(g.adjacency[static_cast<std::size_t>(w)].begin(),
                                            g.adjacency[static_cast<std::size_t>(w)].end(), image[j]);
      if (adj_a != adj_b) ok = false;
    }
    if (!ok) continue;
    image[k] = w;
    used[static_cast<std::size_t>(w)] = 1;
    count_automorphisms(g, image, used, k + 1, count);
    used[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  std::vector<int> image(static_cast<std::size_t>(a.vertex_count), -1);
  std::vector<char> used(static_cast<std::size_t>(a.vertex_count), 0);
  return extend_bijection(a, b, image, used, 0);
}

unsigned long long brute_automorphism_count(const Graph& g) {
  std::vector<int> image(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count), 0);
  unsigned long long count = 0;
  count_automorphisms(g, image, used, 0, count);
  return count;
}

AllowableSequence random_complete_sequence(int n, std::mt19937& rng) {
  WiringFragment f = WiringFragment::initial(n);
  while (!f.is_complete()) {
    const auto moves = f.legal_moves();
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    f.apply(moves[pick(rng)]);
  }
  return f.sequence();
}

namespace {

void completions_rec(WiringFragment& f, std::vector<AllowableSequence>& out) {
  if (f.is_complete()) {
    out.push_back(f.sequence());
    return;
  }
  for (const MovePair& p : f.legal_moves()) {
    f.apply(p);
    completions_rec(f, out);
    f.undo();
  }
}

bool any_simplicial_completion_rec(WiringFragment& f) {
  if (f.is_complete()) {
    return wiring::is_simplicial(wiring::cell_complex(f.sequence()));
  }
  for (const MovePair& p : f.legal_moves()) {
    f.apply(p);
    const bool found = any_simplicial_completion_rec(f);
    f.undo();
    if (found) return true;
  }
  return false;
}

}  // namespace

std::vector<AllowableSequence> all_completions(WiringFragment& f) {
  std::vector<AllowableSequence> out;
  completions_rec(f, out);
  return out;
}

bool has_simplicial_completion(WiringFragment& f) { return any_simplicial_completion_rec(f); }

std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  if (total <= 0) return out;
  const std::uint64_t masks = std::uint64_t{1} << (total - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int bit = 0; bit < total - 1; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace oracles
