#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiring/iso.hpp"
#include "wiring/pappus.hpp"
#include "wiring/realize.hpp"

namespace wiring {

// Analysis payload attached to a catalogue record.
struct RecordAnalysis {
  std::optional<PappusWitness> pappus_witness;
  std::optional<Realization> realization;

  friend bool operator==(const RecordAnalysis&, const RecordAnalysis&) = default;
};

struct CatalogueHeader {
  int format = 1;
  int n = 0;
  bool include_near_pencils = false;
  bool simpobstr7 = false;

  friend bool operator==(const CatalogueHeader&, const CatalogueHeader&) = default;
};

struct Catalogue {
  CatalogueHeader header;
  std::vector<ArrangementRecord> records;
  std::vector<RecordAnalysis> analyses;  // parallel to records

  friend bool operator==(const Catalogue&, const Catalogue&) = default;
};

// Stable 64-bit digest of the full fingerprint, stored in catalogue records.
std::string fingerprint_digest(const Fingerprint& fp);

enum class CatalogueFormat { text, jsonl };

std::string print_catalogue(const Catalogue& cat, CatalogueFormat format);
// Accepts both formats (sniffed from the first line).  Errors carry 1-based
// line numbers.
Catalogue parse_catalogue(const std::string& text);

// Full enumeration pipeline: beginnings, pruned search, dedup, automorphism
// orders.  Deterministic output for any worker count.
struct EnumerationOptions;  // from enumerate.hpp
Catalogue enumerate_catalogue(int n, const struct CatalogueRunOptions& run);

struct CatalogueRunOptions {
  bool include_near_pencils = false;
  bool use_simpobstr7 = false;
  int worker_count = 1;
  std::optional<int> junction_cap_override;
  bool log_stats = false;
};

struct AnalyzeOptions {
  bool attempt_realization = false;
  int worker_count = 1;
  RealizeOptions realize;
};

// Adds the Pappus flag (with witness) and, when requested, numeric
// realizations to every record.
void analyze_catalogue(Catalogue& cat, const AnalyzeOptions& opts);

}  // namespace wiring
