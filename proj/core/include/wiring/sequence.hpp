#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wiring {

// One junction of a wiring diagram: the rows a..b (1-based, a < b) hold a
// strictly increasing block of labels which the junction reverses.  The
// junction corresponds to a vertex where b-a+1 pseudolines meet.
struct MovePair {
  int a = 0;
  int b = 0;

  int size() const { return b - a + 1; }
  friend bool operator==(const MovePair&, const MovePair&) = default;
  friend auto operator<=>(const MovePair&, const MovePair&) = default;
};

// An allowable sequence on n wires, encoded by its junction pairs.  Replaying
// the moves from the identity permutation must be legal at every step and end
// at the full reversal [n,...,1].
struct AllowableSequence {
  int n = 0;
  std::vector<MovePair> moves;

  friend bool operator==(const AllowableSequence&, const AllowableSequence&) = default;
  friend auto operator<=>(const AllowableSequence&, const AllowableSequence&) = default;
};

enum class SequenceViolation {
  none,
  bad_bounds,        // pair indices outside 1 <= a < b <= n
  block_not_increasing,
  not_reversal,      // replay legal but final permutation is not [n,...,1]
};

struct ValidationReport {
  bool ok = true;
  // Index (0-based) of the offending move; for not_reversal this is moves.size().
  std::size_t index = 0;
  SequenceViolation kind = SequenceViolation::none;
  std::string message;
};

ValidationReport validate_sequence(const AllowableSequence& seq);

// Canonical text form:
//   line 1: "n m"
//   line 2: the m pairs as "a,b" tokens separated by single spaces
// print_sequence emits exactly this form; parse accepts arbitrary whitespace.
std::string print_sequence(const AllowableSequence& seq);
AllowableSequence parse_sequence(const std::string& text);
AllowableSequence parse_sequence(std::istream& in);

// Vertical mirror of the diagram: rows p -> n+1-p, wires relabelled so the
// result starts at the identity again.  Yields an isomorphic arrangement.
AllowableSequence flip_vertical(const AllowableSequence& seq);

// Time reversal of the diagram (read the picture right to left).  Also yields
// an isomorphic arrangement.
AllowableSequence reverse_time(const AllowableSequence& seq);

// The near-pencil on n wires: n-1 wires through one junction plus one wire
// crossing them in n-1 ordinary junctions.  For n = 3 this is the triangle.
AllowableSequence near_pencil(int n);

// True iff n-1 of the wires meet in one junction (a move of size n-1).
bool is_near_pencil(const AllowableSequence& seq);

// Removes the wire with the given label (1-based) by move-list surgery:
// moves containing the wire shrink by one position, size-2 moves containing
// it vanish, positions and labels are renumbered.
AllowableSequence delete_line(const AllowableSequence& seq, int label);

// Permutation replay helpers shared by several modules.  Both return
// position -> label arrays (index 0 unused).
std::vector<int> replay(const AllowableSequence& seq);
std::vector<int> identity_sigma(int n);

}  // namespace wiring
