#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wiring/cells.hpp"
#include "wiring/graph.hpp"
#include "wiring/sequence.hpp"

namespace wiring {

// Cheap isomorphism invariants used to bucket candidates before the exact
// certificate test.  Equality is necessary, not sufficient: distinct classes
// can share every invariant here.
struct Fingerprint {
  int n = 0;
  InvariantVector invariants;
  std::vector<int> degree_sequence;                          // sorted
  std::vector<std::pair<int, std::vector<int>>> link_types;  // sorted (mult, neighbor mults)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const AllowableSequence& seq);

struct ArrangementRecord {
  AllowableSequence representative;  // lexicographically least encoding seen
  Fingerprint print;
  std::string certificate;  // canonical graph certificate (raw bytes)
  std::uint64_t automorphism_order = 0;
  std::map<int, int> automorphism_element_orders;
  bool near_pencil = false;
  // Unset until a Pappus analysis ran; then true iff a witness exists.
  std::optional<bool> pappus_obstructed;
  std::optional<bool> realized;  // true after a successful numeric realization

  std::string certificate_hex() const { return to_hex(certificate); }

  friend bool operator==(const ArrangementRecord&, const ArrangementRecord&) = default;
};

// True iff the triangulation graphs are isomorphic, which for complete
// simplicial wirings is equivalent to isomorphism of the arrangements.
bool isomorphic(const AllowableSequence& a, const AllowableSequence& b);

// Order of the automorphism group of the cell complex.  For complexes without
// parallel edges this equals the automorphism order of the triangulation
// graph; complexes with two-vertex lines (near-pencils, the triangle) are
// counted directly on the complex.
std::uint64_t automorphism_count(const AllowableSequence& seq);
AutomorphismInfo automorphism_info(const AllowableSequence& seq);

// Streaming deduplication up to isomorphism.  Buckets by fingerprint, decides
// within buckets by canonical certificate, keeps the lexicographically least
// encoding as representative.  Output is sorted by (near_pencil, certificate).
class Dedup {
 public:
  void add(const AllowableSequence& seq);
  std::vector<ArrangementRecord> take_records();
  std::size_t class_count() const { return classes_.size(); }

 private:
  struct Key {
    bool near_pencil;
    std::string certificate;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };
  std::map<Key, ArrangementRecord> classes_;
};

std::vector<ArrangementRecord> dedup(const std::vector<AllowableSequence>& stream);

}  // namespace wiring
