#include "wiring/fragment.hpp"

#include <algorithm>
#include <stdexcept>

namespace wiring {

WiringFragment WiringFragment::initial(int n) {
  if (n < 2) throw std::invalid_argument("WiringFragment: wire count must be at least 2");
  WiringFragment f;
  f.n_ = n;
  f.sigma_ = identity_sigma(n);
  f.eps_.assign(static_cast<std::size_t>(n) + 1, 0);
  f.v_.assign(static_cast<std::size_t>(n), 0);
  f.s_.assign(static_cast<std::size_t>(n), 0);
  f.first_closed_.assign(static_cast<std::size_t>(n), 0);
  f.first_closed_[0] = 1;  // the wrap cell never closes; s[0] stays 0
  f.d_ = 1;
  f.u_ = n;
  return f;
}

int WiringFragment::increasing_run_end(int from) const {
  int i = from;
  while (i + 1 <= n_ && sigma_[static_cast<std::size_t>(i)] < sigma_[static_cast<std::size_t>(i) + 1]) ++i;
  return i;
}

bool WiringFragment::can_apply(MovePair p) const {
  if (p.a < 1 || p.b > n_ || p.a >= p.b) return false;
  for (int i = p.a; i < p.b; ++i) {
    if (sigma_[static_cast<std::size_t>(i)] >= sigma_[static_cast<std::size_t>(i) + 1]) return false;
  }
  return true;
}

void WiringFragment::apply(MovePair p) {
  if (p.a < 1 || p.b > n_ || p.a >= p.b) throw std::out_of_range("apply_move: pair out of range");
  for (int i = p.a; i < p.b; ++i) {
    if (sigma_[static_cast<std::size_t>(i)] >= sigma_[static_cast<std::size_t>(i) + 1]) {
      throw std::invalid_argument("apply_move: block not strictly increasing");
    }
  }

  UndoEntry entry;
  entry.move = p;
  entry.old_d = d_;
  entry.old_u = u_;
  entry.scratch_begin = static_cast<std::uint32_t>(scratch_.size());

  const int size = p.size();
  const int gl = p.a - 1;            // lower boundary gap (0 when a == 1)
  const int gr = p.b == n_ ? 0 : p.b;  // upper boundary gap, wraps at the top

  for (int i = p.a; i <= p.b; ++i) scratch_.push_back(eps_[static_cast<std::size_t>(i)]);
  scratch_.push_back(v_[static_cast<std::size_t>(gl)]);
  scratch_.push_back(v_[static_cast<std::size_t>(gr)]);
  for (int g = p.a; g < p.b; ++g) scratch_.push_back(v_[static_cast<std::size_t>(g)]);

  std::uint32_t frozen = 0;
  for (int g = p.a; g < p.b; ++g) {
    if (!first_closed_[static_cast<std::size_t>(g)]) {
      s_[static_cast<std::size_t>(g)] = v_[static_cast<std::size_t>(g)] + 1;
      first_closed_[static_cast<std::size_t>(g)] = 1;
      scratch_.push_back(g);
      ++frozen;
    }
    v_[static_cast<std::size_t>(g)] = 1;
  }
  entry.frozen_count = frozen;

  v_[static_cast<std::size_t>(gl)] += 1;
  if (!first_closed_[static_cast<std::size_t>(gl)]) s_[static_cast<std::size_t>(gl)] = v_[static_cast<std::size_t>(gl)];
  v_[static_cast<std::size_t>(gr)] += 1;
  if (!first_closed_[static_cast<std::size_t>(gr)]) s_[static_cast<std::size_t>(gr)] = v_[static_cast<std::size_t>(gr)];

  for (int i = p.a; i <= p.b; ++i) eps_[static_cast<std::size_t>(i)] = size;
  std::reverse(sigma_.begin() + p.a, sigma_.begin() + p.b + 1);
  moves_.push_back(p);

  while (d_ <= n_ && sigma_[static_cast<std::size_t>(d_)] == n_ + 1 - d_) ++d_;
  if (d_ > n_) d_ = n_;
  while (u_ >= 1 && sigma_[static_cast<std::size_t>(u_)] == n_ + 1 - u_) --u_;
  if (u_ < 1) u_ = 1;

  undo_.push_back(entry);
}

void WiringFragment::undo() {
  if (undo_.empty()) throw std::logic_error("undo: no move to undo");
  const UndoEntry entry = undo_.back();
  undo_.pop_back();
  const MovePair p = entry.move;
  const int gl = p.a - 1;
  const int gr = p.b == n_ ? 0 : p.b;

  moves_.pop_back();
  std::reverse(sigma_.begin() + p.a, sigma_.begin() + p.b + 1);
  d_ = entry.old_d;
  u_ = entry.old_u;

  // Scratch layout: eps[a..b], v[gl], v[gr], v[a..b-1], frozen gap list.
  std::size_t idx = entry.scratch_begin;
  for (int i = p.a; i <= p.b; ++i) eps_[static_cast<std::size_t>(i)] = scratch_[idx++];
  const int old_vgl = scratch_[idx++];
  const int old_vgr = scratch_[idx++];
  for (int g = p.a; g < p.b; ++g) v_[static_cast<std::size_t>(g)] = scratch_[idx++];
  for (std::uint32_t k = 0; k < entry.frozen_count; ++k) {
    const int g = scratch_[idx++];
    first_closed_[static_cast<std::size_t>(g)] = 0;
  }
  v_[static_cast<std::size_t>(gr)] = old_vgr;
  v_[static_cast<std::size_t>(gl)] = old_vgl;

  // Re-establish the s == v mirror on every gap whose first cell is open.
  for (int g = p.a; g < p.b; ++g) {
    if (!first_closed_[static_cast<std::size_t>(g)]) s_[static_cast<std::size_t>(g)] = v_[static_cast<std::size_t>(g)];
  }
  if (!first_closed_[static_cast<std::size_t>(gl)]) s_[static_cast<std::size_t>(gl)] = v_[static_cast<std::size_t>(gl)];
  if (!first_closed_[static_cast<std::size_t>(gr)]) s_[static_cast<std::size_t>(gr)] = v_[static_cast<std::size_t>(gr)];

  scratch_.resize(entry.scratch_begin);
}

WiringFragment WiringFragment::applied(MovePair p) const {
  WiringFragment copy = *this;
  copy.apply(p);
  return copy;
}

std::vector<MovePair> WiringFragment::legal_moves() const {
  std::vector<MovePair> result;
  for (int i = 1; i < n_; ++i) {
    const int end = increasing_run_end(i);
    for (int j = i + 1; j <= end; ++j) result.push_back({i, j});
  }
  return result;
}

bool WiringFragment::joinends_holds() const {
  for (int g = 0; g < n_; ++g) {
    if (v_[static_cast<std::size_t>(g)] + s_[static_cast<std::size_t>((n_ - g) % n_)] != 3) return false;
  }
  return true;
}

FragmentState snapshot(const WiringFragment& f) {
  FragmentState st;
  st.sigma.resize(static_cast<std::size_t>(f.n()) + 1);
  st.eps.resize(static_cast<std::size_t>(f.n()) + 1);
  st.sigma[0] = 0;
  st.eps[0] = 0;
  for (int i = 1; i <= f.n(); ++i) {
    st.sigma[static_cast<std::size_t>(i)] = f.sigma(i);
    st.eps[static_cast<std::size_t>(i)] = f.eps(i);
  }
  st.v.resize(static_cast<std::size_t>(f.n()));
  st.s.resize(static_cast<std::size_t>(f.n()));
  for (int g = 0; g < f.n(); ++g) {
    st.v[static_cast<std::size_t>(g)] = f.v(g);
    st.s[static_cast<std::size_t>(g)] = f.s(g);
  }
  st.d = f.d();
  st.u = f.u();
  return st;
}

}  // namespace wiring
