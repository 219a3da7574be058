#pragma once

#include <cstdint>
#include <vector>

#include "wiring/sequence.hpp"

namespace wiring {

// Enumeration state for an allowable sequence under construction.  Besides the
// permutation sigma it maintains, incrementally per move:
//
//   eps[i]  lines through the last junction touching row i (i = 1..n, 0 if none)
//   v[g]    finished vertices of the currently open 2-cell in gap g
//   s[g]    finished vertices of the first 2-cell in gap g
//   d       first row from below whose prefix is not yet final (capped at n)
//   u       last row from above whose suffix is not yet final (capped at 1)
//
// Gaps are cyclic of length n: gap g (1 <= g <= n-1) lies between rows g and
// g+1; gap 0 is the projective wrap-around region below row 1 and above row n,
// whose single cell never closes.  s[0] is pinned to 0.
//
// A move (a,b) reverses the increasing block at rows a..b.  Gaps strictly
// inside the block close their open cell (the junction is its last vertex) and
// start a new one with v = 1; the boundary gaps a-1 and b (mod n) gain a
// vertex.  s[g] mirrors v[g] while the first cell of gap g is still open and
// freezes when it closes.
//
// apply() mutates in place and records an undo entry so depth-first search can
// backtrack in O(move size); applied() is the value-semantics variant.
class WiringFragment {
 public:
  static WiringFragment initial(int n);

  int n() const { return n_; }
  int move_count() const { return static_cast<int>(moves_.size()); }
  const std::vector<MovePair>& moves() const { return moves_; }
  MovePair last_move() const { return moves_.back(); }

  int sigma(int pos) const { return sigma_[static_cast<std::size_t>(pos)]; }
  int eps(int row) const { return eps_[static_cast<std::size_t>(row)]; }
  int v(int gap) const { return v_[static_cast<std::size_t>(gap % n_)]; }
  int s(int gap) const { return s_[static_cast<std::size_t>(gap % n_)]; }
  bool first_cell_closed(int gap) const { return first_closed_[static_cast<std::size_t>(gap % n_)] != 0; }
  int d() const { return d_; }
  int u() const { return u_; }

  bool is_complete() const { return d_ > u_; }

  // Last row of the longest strictly increasing label run starting at `from`.
  int increasing_run_end(int from) const;

  bool can_apply(MovePair p) const;
  void apply(MovePair p);
  void undo();

  WiringFragment applied(MovePair p) const;

  std::vector<MovePair> legal_moves() const;

  AllowableSequence sequence() const { return AllowableSequence{n_, moves_}; }

  // v[g] + s[(n-g) mod n] == 3 for every gap g; for a complete fragment this
  // is exactly the condition that all boundary cells glue to triangles.
  bool joinends_holds() const;

  friend bool operator==(const WiringFragment&, const WiringFragment&) = default;

 private:
  WiringFragment() = default;

  int n_ = 0;
  std::vector<int> sigma_;          // 1-based, size n+1
  std::vector<MovePair> moves_;
  std::vector<int> eps_;            // 1-based rows, size n+1
  std::vector<int> v_;              // gaps 0..n-1
  std::vector<int> s_;              // gaps 0..n-1
  std::vector<std::uint8_t> first_closed_;
  int d_ = 1;
  int u_ = 0;

  struct UndoEntry {
    MovePair move;
    int old_d;
    int old_u;
    std::uint32_t scratch_begin;
    std::uint32_t frozen_count;
  };
  std::vector<UndoEntry> undo_;
  std::vector<int> scratch_;
};

// Plain state snapshot used by tests and oracles.
struct FragmentState {
  std::vector<int> sigma;  // 1-based
  std::vector<int> eps;    // 1-based
  std::vector<int> v;      // gaps 0..n-1
  std::vector<int> s;      // gaps 0..n-1
  int d = 0;
  int u = 0;
};

FragmentState snapshot(const WiringFragment& f);

}  // namespace wiring
