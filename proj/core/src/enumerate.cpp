#include "wiring/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wiring {

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  emitted += other.emitted;
  completed_nonsimplicial += other.completed_nonsimplicial;
  for (std::size_t i = 0; i < kObstructionCount; ++i)
    pruned_by_obstruction[i] += other.pruned_by_obstruction[i];
  pruned_boundary_cell += other.pruned_boundary_cell;
  pruned_interior_cell += other.pruned_interior_cell;
  pruned_near_pencil += other.pruned_near_pencil;
  pruned_cap += other.pruned_cap;
}

std::string SearchStats::to_log_line(const std::string& prefix) const {
  std::ostringstream out;
  out << prefix << " nodes=" << nodes << " emitted=" << emitted
      << " complete_nonsimplicial=" << completed_nonsimplicial
      << " prune.boundary=" << pruned_boundary_cell
      << " prune.interior=" << pruned_interior_cell
      << " prune.near_pencil=" << pruned_near_pencil << " prune.cap=" << pruned_cap;
  for (std::size_t i = 0; i < kObstructionCount; ++i) {
    if (pruned_by_obstruction[i]) {
      out << " prune." << obstruction_name(static_cast<Obstruction>(i)) << "="
          << pruned_by_obstruction[i];
    }
  }
  return out.str();
}

namespace {

class SimplicialSearch {
 public:
  SimplicialSearch(WiringFragment& f, int cap, const WiringSink& sink, SearchStats& stats,
                   const SearchOptions& opts)
      : f_(f), n_(f.n()), cap_(cap), sink_(sink), stats_(stats), opts_(opts) {
    enabled_ = opts.enable_obstruction;
    if (opts.use_simpobstr7) {
      for (std::size_t i = static_cast<std::size_t>(Obstruction::simpobstr_7_1);
           i < kObstructionCount; ++i)
        enabled_[i] = true;
    }
  }

  // A boundary gap of a new junction gains a vertex.  An ordinary gap's open
  // cell still needs its closing vertex, so it may hold at most one; the wrap
  // cell never closes and must end with exactly three.
  bool boundary_ok(int gap) const {
    const int g = gap % n_;
    return g == 0 ? f_.v(0) < 3 : f_.v(g) < 2;
  }

  // Cells strictly inside the junction close now; any that is not the first
  // cell of its gap must close as a triangle.
  bool interiors_ok(int a, int b) const {
    for (int g = a; g < b; ++g) {
      if (f_.first_cell_closed(g) && f_.v(g) != 2) return false;
    }
    return true;
  }

  // An ordinary junction next to an ordinary junction on a shared wire forces
  // a near-pencil (Lemma: two neighboring ordinary vertices).
  bool makes_adjacent_ordinary(int a, int b) const {
    return b - a + 1 == 2 && (f_.eps(a) == 2 || f_.eps(b) == 2);
  }

  bool move_admissible(int a, int b) {
    if (!boundary_ok(a - 1) || !boundary_ok(b)) {
      ++stats_.pruned_boundary_cell;
      return false;
    }
    if (!interiors_ok(a, b)) {
      ++stats_.pruned_interior_cell;
      return false;
    }
    if (opts_.prune_near_pencils && makes_adjacent_ordinary(a, b)) {
      ++stats_.pruned_near_pencil;
      return false;
    }
    return true;
  }

  void run() {
    ++stats_.nodes;
    if (f_.is_complete()) {
      if (f_.joinends_holds()) {
        AllowableSequence seq = f_.sequence();
        if (!opts_.prune_near_pencils || !is_near_pencil(seq)) {
          ++stats_.emitted;
          sink_(seq);
        }
      } else {
        ++stats_.completed_nonsimplicial;
      }
      return;
    }
    if (auto obs = check_obstructions(f_, enabled_)) {
      ++stats_.pruned_by_obstruction[static_cast<std::size_t>(*obs)];
      return;
    }

    const MovePair last = f_.last_move();

    // Chained extension: the wire on top of the last junction keeps climbing
    // to the end of its increasing run.
    if (last.b <= f_.u() && f_.v(last.b - 1) <= 1) {
      const int i = f_.increasing_run_end(last.b);
      if (i > last.b) {
        if (i - last.b < cap_) {
          if (move_admissible(last.b, i)) {
            f_.apply({last.b, i});
            run();
            f_.undo();
          }
        } else {
          ++stats_.pruned_cap;
        }
      }
    }

    if (f_.d() >= last.a) return;  // nothing fits below the last junction

    // Descending restart: a junction entirely at or below the last one's foot.
    const int am = last.a;
    for (int i = f_.d(); i < am; ++i) {
      const int run_end = std::min(f_.increasing_run_end(i), am);
      int jmax = std::min(run_end, i + cap_ - 1);
      if (run_end > jmax) ++stats_.pruned_cap;
      for (int j = i + 1; j <= jmax; ++j) {
        if (!move_admissible(i, j)) continue;
        f_.apply({i, j});
        run();
        f_.undo();
      }
    }
  }

 private:
  WiringFragment& f_;
  int n_;
  int cap_;
  const WiringSink& sink_;
  SearchStats& stats_;
  SearchOptions opts_;
  std::array<bool, kObstructionCount> enabled_;
};

}  // namespace

void enumerate_from(WiringFragment& f, int cap, const WiringSink& sink, SearchStats* stats,
                    const SearchOptions& opts) {
  if (f.move_count() == 0) {
    throw std::invalid_argument("enumerate_from: fragment must contain its beginning junctions");
  }
  if (cap < 2) throw std::invalid_argument("enumerate_from: junction cap must be at least 2");
  SearchStats local;
  SimplicialSearch search(f, cap, sink, stats ? *stats : local, opts);
  search.run();
}

namespace {

// Expands a beginning into a fragment, running the same admissibility and
// obstruction checks a search would.  Returns false if the beginning cannot
// lead to a (non-near-pencil) simplicial wiring.
bool expand_beginning(const Beginning& beg, WiringFragment& f, const SearchOptions& opts,
                      const std::array<bool, kObstructionCount>& enabled, SearchStats& stats) {
  for (const MovePair& p : beg.expand()) {
    if (opts.prune_near_pencils && p.size() == 2 && (f.eps(p.a) == 2 || f.eps(p.b) == 2)) {
      ++stats.pruned_near_pencil;
      return false;
    }
    f.apply(p);
    if (f.is_complete()) return true;  // handled by the search entry
    if (auto obs = check_obstructions(f, enabled)) {
      ++stats.pruned_by_obstruction[static_cast<std::size_t>(*obs)];
      return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_raw(int n, const EnumerationOptions& opts, const WiringSink& sink,
                   SearchStats* total_stats) {
  if (n < 3) throw std::invalid_argument("enumerate: n must be at least 3");
  const auto begs = beginnings(n);

  SearchOptions search_opts;
  search_opts.use_simpobstr7 = opts.use_simpobstr7;
  search_opts.prune_near_pencils = true;
  auto enabled = search_opts.enable_obstruction;
  if (search_opts.use_simpobstr7) {
    for (std::size_t i = static_cast<std::size_t>(Obstruction::simpobstr_7_1);
         i < kObstructionCount; ++i)
      enabled[i] = true;
  }

  struct Slot {
    std::vector<AllowableSequence> out;
    SearchStats stats;
  };
  std::vector<Slot> slots(begs.size());

  const int workers = std::max(1, opts.worker_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= begs.size()) return;
      Slot& slot = slots[idx];
      WiringFragment f = WiringFragment::initial(n);
      if (!expand_beginning(begs[idx], f, search_opts, enabled, slot.stats)) continue;
      const int cap = opts.junction_cap_override.value_or(begs[idx].junction_cap());
      auto local_sink = [&slot](const AllowableSequence& seq) { slot.out.push_back(seq); };
      enumerate_from(f, cap, local_sink, &slot.stats, search_opts);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t idx = 0; idx < begs.size(); ++idx) {
    if (opts.log_stats) {
      std::ostringstream prefix;
      prefix << "stats n=" << n << " beginning=";
      for (std::size_t k = 0; k < begs[idx].parts.size(); ++k) {
        if (k) prefix << ',';
        prefix << begs[idx].parts[k];
      }
      fputs((slots[idx].stats.to_log_line(prefix.str()) + "\n").c_str(), stderr);
    }
    if (total_stats) total_stats->merge(slots[idx].stats);
    for (const AllowableSequence& seq : slots[idx].out) sink(seq);
  }

  if (opts.include_near_pencils) sink(near_pencil(n));
}

namespace {

void naive_all_rec(WiringFragment& f, std::vector<AllowableSequence>& out) {
  if (f.is_complete()) {
    out.push_back(f.sequence());
    return;
  }
  for (const MovePair& p : f.legal_moves()) {
    f.apply(p);
    naive_all_rec(f, out);
    f.undo();
  }
}

void naive_chain_rec(WiringFragment& f, std::vector<AllowableSequence>& out) {
  if (f.is_complete()) {
    out.push_back(f.sequence());
    return;
  }
  if (f.move_count() == 0) {
    for (const MovePair& p : f.legal_moves()) {
      f.apply(p);
      naive_chain_rec(f, out);
      f.undo();
    }
    return;
  }
  const MovePair last = f.last_move();
  const int run_end = f.increasing_run_end(last.b);
  for (int i = last.b + 1; i <= run_end; ++i) {
    f.apply({last.b, i});
    naive_chain_rec(f, out);
    f.undo();
  }
  for (int i = 1; i < last.a; ++i) {
    const int end = std::min(f.increasing_run_end(i), last.a);
    for (int j = i + 1; j <= end; ++j) {
      f.apply({i, j});
      naive_chain_rec(f, out);
      f.undo();
    }
  }
}

}  // namespace

std::vector<AllowableSequence> enumerate_naive(int n, NaiveVariant variant) {
  const int bound = variant == NaiveVariant::all ? 6 : 7;
  if (n < 2) throw std::invalid_argument("enumerate_naive: n must be at least 2");
  if (n > bound) {
    throw ResourceGuardError("enumerate_naive: bounded to n <= " + std::to_string(bound) +
                             " for this variant");
  }
  WiringFragment f = WiringFragment::initial(n);
  std::vector<AllowableSequence> out;
  if (variant == NaiveVariant::all) {
    naive_all_rec(f, out);
  } else {
    naive_chain_rec(f, out);
  }
  return out;
}

}  // namespace wiring
