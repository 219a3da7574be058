#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiring/fragment.hpp"
#include "wiring/sequence.hpp"

namespace wiring {

// Forced initial junction chain along the starting line: the parts are
// p_i = b_i - a_i of the chained prefix a_1 = 1, b_i = a_{i+1}, b_{m0} = n,
// so they form a composition of n-1.  Stored as the canonical representative
// of its orbit under the dihedral group acting on the part sequence.
struct Beginning {
  std::vector<int> parts;

  int max_part() const;
  // Lines through the largest junction of the chain; junction cap for the
  // search seeded with this beginning.
  int junction_cap() const { return max_part() + 1; }
  std::vector<MovePair> expand() const;  // the chained junction prefix

  friend bool operator==(const Beginning&, const Beginning&) = default;
  friend auto operator<=>(const Beginning&, const Beginning&) = default;
};

// Canonical representative of the dihedral orbit of a part sequence: prefer
// images with first and last part 1, then the lexicographically greatest image
// with first or last part 1, then the lexicographically greatest image.
std::vector<int> dihedral_representative(const std::vector<int>& parts);

// One Beginning per dihedral orbit of the compositions of n-1, sorted.
std::vector<Beginning> beginnings(int n);

enum class Obstruction : std::uint8_t {
  simpobstr_1_1,
  simpobstr_1_2,
  simpobstr_2_1,
  simpobstr_2_2,
  simpobstr_2_3,
  simpobstr_5_1,
  simpobstr_5_2,
  simpobstr_4_1,
  simpobstr_4_2,
  simpobstr_7_1,
  simpobstr_7_2,
  simpobstr_7_3,
  simpobstr_7_4,
  count_
};
constexpr std::size_t kObstructionCount = static_cast<std::size_t>(Obstruction::count_);
const char* obstruction_name(Obstruction o);

// Evaluates the obstruction conditions in the fixed order 1, 2, 5, 4 (then 7
// when enabled) against the fragment's last junction and returns the first one
// that fires.  A firing obstruction certifies that no completion of the
// fragment is a simplicial wiring.
std::optional<Obstruction> check_obstructions(const WiringFragment& f, bool use_simpobstr7 = false);
std::optional<Obstruction> check_obstructions(const WiringFragment& f,
                                              const std::array<bool, kObstructionCount>& enabled);

struct SearchOptions {
  bool use_simpobstr7 = false;
  // Cut branches that already contain two neighboring ordinary vertices
  // (they can only complete to near-pencils).
  bool prune_near_pencils = true;
  // Skip the per-obstruction group entirely (differential testing knob).
  std::array<bool, kObstructionCount> enable_obstruction = make_all_enabled();

  static std::array<bool, kObstructionCount> make_all_enabled() {
    std::array<bool, kObstructionCount> a{};
    a.fill(true);
    for (std::size_t i = static_cast<std::size_t>(Obstruction::simpobstr_7_1); i < kObstructionCount; ++i)
      a[i] = false;
    return a;
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  std::uint64_t completed_nonsimplicial = 0;
  std::uint64_t pruned_by_obstruction[kObstructionCount] = {};
  std::uint64_t pruned_boundary_cell = 0;   // Lemma "new pairs" boundary condition
  std::uint64_t pruned_interior_cell = 0;   // closing a bounded cell off a triangle
  std::uint64_t pruned_near_pencil = 0;     // two neighboring ordinary vertices
  std::uint64_t pruned_cap = 0;             // junction larger than the cap

  void merge(const SearchStats& other);
  std::string to_log_line(const std::string& prefix) const;
};

using WiringSink = std::function<void(const AllowableSequence&)>;

// Depth-first enumeration of the simplicial completions of the fragment,
// restricted to chained-or-descending junction sequences.  `cap` bounds the
// number of lines through any new junction.  Every emitted wiring is complete
// and simplicial; near-pencils are suppressed while prune_near_pencils is set.
void enumerate_from(WiringFragment& f, int cap, const WiringSink& sink,
                    SearchStats* stats = nullptr, const SearchOptions& opts = {});

struct EnumerationOptions {
  bool include_near_pencils = false;
  bool use_simpobstr7 = false;
  int worker_count = 1;
  std::optional<int> junction_cap_override;
  bool log_stats = false;
};

// Runs enumerate_from over every Beginning of n (each with junction cap equal
// to the largest junction of that beginning) and streams all raw emissions to
// the sink.  Work is split by beginning across worker_count threads; the sink
// is called from a single merge point.  The near-pencil class is emitted
// synthetically when requested.
void enumerate_raw(int n, const EnumerationOptions& opts, const WiringSink& sink,
                   SearchStats* total_stats = nullptr);

enum class NaiveVariant {
  all,              // every increasing block at every step
  chain_restricted  // chained-or-descending junction sequences only
};

// Exhaustive oracle enumerators.  Exponential: guarded at n <= 6 for the
// unrestricted variant and n <= 7 for the chain-restricted one.
std::vector<AllowableSequence> enumerate_naive(int n, NaiveVariant variant = NaiveVariant::all);

struct ResourceGuardError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wiring
