#include "wiring/catalogue.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "wiring/enumerate.hpp"

namespace wiring {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string fingerprint_digest(const Fingerprint& fp) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, static_cast<std::uint64_t>(fp.n));
  h = fnv1a(h, static_cast<std::uint64_t>(fp.invariants.f0));
  h = fnv1a(h, static_cast<std::uint64_t>(fp.invariants.f1));
  h = fnv1a(h, static_cast<std::uint64_t>(fp.invariants.f2));
  for (int x : fp.invariants.t) h = fnv1a(h, static_cast<std::uint64_t>(x) + 17);
  for (int x : fp.invariants.r) h = fnv1a(h, static_cast<std::uint64_t>(x) + 33);
  for (int x : fp.degree_sequence) h = fnv1a(h, static_cast<std::uint64_t>(x) + 71);
  for (const auto& [mult, neigh] : fp.link_types) {
    h = fnv1a(h, static_cast<std::uint64_t>(mult) + 301);
    for (int x : neigh) h = fnv1a(h, static_cast<std::uint64_t>(x) + 997);
  }
  std::ostringstream out;
  out << std::hex;
  for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xf);
  return out.str();
}

namespace {

std::string moves_token(const AllowableSequence& seq) {
  std::ostringstream out;
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    if (k) out << ';';
    out << seq.moves[k].a << ',' << seq.moves[k].b;
  }
  return out.str();
}

std::vector<MovePair> parse_moves_token(const std::string& token) {
  std::vector<MovePair> moves;
  if (token.empty()) return moves;
  std::istringstream in(token);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad move token '" + pair + "'");
    moves.push_back({std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1))});
  }
  return moves;
}

std::string autord_token(const std::map<int, int>& orders) {
  if (orders.empty()) return "-";
  std::ostringstream out;
  bool first = true;
  for (const auto& [order, count] : orders) {
    if (!first) out << ',';
    out << order << ':' << count;
    first = false;
  }
  return out.str();
}

std::map<int, int> parse_autord_token(const std::string& token) {
  std::map<int, int> orders;
  if (token == "-") return orders;
  std::istringstream in(token);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad autord token");
    orders[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
  }
  return orders;
}

std::string tristate_token(const std::optional<bool>& value) {
  if (!value) return "-";
  return *value ? "1" : "0";
}

std::optional<bool> parse_tristate(const std::string& token) {
  if (token == "-") return std::nullopt;
  if (token == "1") return true;
  if (token == "0") return false;
  throw std::invalid_argument("bad tristate token '" + token + "'");
}

std::string join_ints(const auto& xs, char sep) {
  std::ostringstream out;
  bool first = true;
  for (int x : xs) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::vector<int> split_ints(const std::string& token, char sep) {
  std::vector<int> out;
  std::istringstream in(token);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(std::stoi(item));
  return out;
}

std::string witness_token(const std::optional<PappusWitness>& wit) {
  if (!wit) return "-";
  std::ostringstream out;
  out << wit->line1 << ',' << wit->line2 << ';' << join_ints(wit->triple1, ',') << ';'
      << join_ints(wit->triple2, ',') << ';' << join_ints(wit->connecting, ',') << ';'
      << join_ints(wit->cross_vertices, ',') << ';' << wit->violating_line;
  return out.str();
}

std::optional<PappusWitness> parse_witness_token(const std::string& token) {
  if (token == "-") return std::nullopt;
  std::istringstream in(token);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ';')) parts.push_back(part);
  if (parts.size() != 6) throw std::invalid_argument("bad witness token");
  PappusWitness wit;
  const auto pair = split_ints(parts[0], ',');
  if (pair.size() != 2) throw std::invalid_argument("bad witness lines");
  wit.line1 = pair[0];
  wit.line2 = pair[1];
  const auto t1 = split_ints(parts[1], ',');
  const auto t2 = split_ints(parts[2], ',');
  const auto conn = split_ints(parts[3], ',');
  const auto cross = split_ints(parts[4], ',');
  if (t1.size() != 3 || t2.size() != 3 || conn.size() != 6 || cross.size() != 3) {
    throw std::invalid_argument("bad witness fields");
  }
  std::copy(t1.begin(), t1.end(), wit.triple1.begin());
  std::copy(t2.begin(), t2.end(), wit.triple2.begin());
  std::copy(conn.begin(), conn.end(), wit.connecting.begin());
  std::copy(cross.begin(), cross.end(), wit.cross_vertices.begin());
  wit.violating_line = std::stoi(parts[5]);
  return wit;
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) {
    return Rational(boost::multiprecision::cpp_int(token));
  }
  return Rational(boost::multiprecision::cpp_int(token.substr(0, slash)),
                  boost::multiprecision::cpp_int(token.substr(slash + 1)));
}

std::string realization_token(const std::optional<Realization>& real) {
  if (!real) return "-";
  std::ostringstream out;
  out << join_ints(real->gauge_lines, ',');
  for (std::size_t l = 1; l < real->lines.size(); ++l) {
    out << ';' << rational_str(real->lines[l].coeffs[0]) << ':'
        << rational_str(real->lines[l].coeffs[1]) << ':' << rational_str(real->lines[l].coeffs[2]);
  }
  return out.str();
}

std::optional<Realization> parse_realization_token(const std::string& token) {
  if (token == "-") return std::nullopt;
  std::istringstream in(token);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ';')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("bad realization token");
  Realization real;
  const auto gauge = split_ints(parts[0], ',');
  if (gauge.size() != 4) throw std::invalid_argument("bad realization gauge");
  std::copy(gauge.begin(), gauge.end(), real.gauge_lines.begin());
  real.lines.resize(parts.size());
  for (std::size_t l = 1; l < parts.size(); ++l) {
    std::istringstream lin(parts[l]);
    std::string comp;
    std::vector<std::string> comps;
    while (std::getline(lin, comp, ':')) comps.push_back(comp);
    if (comps.size() != 3) throw std::invalid_argument("bad realization line");
    for (int k = 0; k < 3; ++k)
      real.lines[l].coeffs[static_cast<std::size_t>(k)] = parse_rational(comps[static_cast<std::size_t>(k)]);
  }
  return real;
}

std::string record_line(const ArrangementRecord& rec, const RecordAnalysis& analysis) {
  std::ostringstream out;
  out << "cert=" << rec.certificate_hex() << " fp=" << fingerprint_digest(rec.print)
      << " n=" << rec.representative.n << " m=" << rec.representative.moves.size()
      << " moves=" << moves_token(rec.representative)
      << " inv=" << print_invariants(rec.print.invariants) << " aut=" << rec.automorphism_order
      << " autord=" << autord_token(rec.automorphism_element_orders)
      << " nearpencil=" << (rec.near_pencil ? 1 : 0)
      << " pappus=" << tristate_token(rec.pappus_obstructed)
      << " realized=" << tristate_token(rec.realized)
      << " witness=" << witness_token(analysis.pappus_witness)
      << " lines=" << realization_token(analysis.realization);
  return out.str();
}

std::map<std::string, std::string> split_fields(const std::string& line, std::size_t line_no) {
  std::map<std::string, std::string> fields;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": token '" + token +
                                  "' is not key=value");
    }
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

std::string require_field(const std::map<std::string, std::string>& fields, const std::string& key,
                          std::size_t line_no) {
  auto it = fields.find(key);
  if (it == fields.end()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": missing field '" + key + "'");
  }
  return it->second;
}

using OrderedJson = nlohmann::ordered_json;

OrderedJson record_json(const ArrangementRecord& rec, const RecordAnalysis& analysis) {
  OrderedJson j;
  j["type"] = "record";
  j["cert"] = rec.certificate_hex();
  j["fp"] = fingerprint_digest(rec.print);
  j["n"] = rec.representative.n;
  j["m"] = rec.representative.moves.size();
  j["moves"] = moves_token(rec.representative);
  j["inv"] = print_invariants(rec.print.invariants);
  j["aut"] = rec.automorphism_order;
  j["autord"] = autord_token(rec.automorphism_element_orders);
  j["near_pencil"] = rec.near_pencil;
  if (rec.pappus_obstructed) j["pappus"] = *rec.pappus_obstructed;
  else j["pappus"] = nullptr;
  if (rec.realized) j["realized"] = *rec.realized;
  else j["realized"] = nullptr;
  j["witness"] = witness_token(analysis.pappus_witness);
  j["lines"] = realization_token(analysis.realization);
  return j;
}

ArrangementRecord record_from_fields(const std::map<std::string, std::string>& fields,
                                     std::size_t line_no, RecordAnalysis& analysis) {
  ArrangementRecord rec;
  const int n = std::stoi(require_field(fields, "n", line_no));
  rec.representative.n = n;
  rec.representative.moves = parse_moves_token(require_field(fields, "moves", line_no));
  const std::size_t m = static_cast<std::size_t>(std::stoul(require_field(fields, "m", line_no)));
  if (rec.representative.moves.size() != m) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": move count mismatch");
  }
  auto validation = validate_sequence(rec.representative);
  if (!validation.ok) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + validation.message);
  }
  rec.print = fingerprint(rec.representative);
  const std::string fp_stored = require_field(fields, "fp", line_no);
  if (fp_stored != fingerprint_digest(rec.print)) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": fingerprint digest mismatch");
  }
  const std::string inv_stored = require_field(fields, "inv", line_no);
  if (inv_stored != print_invariants(rec.print.invariants)) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": invariants mismatch");
  }
  rec.certificate = from_hex(require_field(fields, "cert", line_no));
  rec.automorphism_order = std::stoull(require_field(fields, "aut", line_no));
  rec.automorphism_element_orders = parse_autord_token(require_field(fields, "autord", line_no));
  rec.near_pencil = require_field(fields, "nearpencil", line_no) == "1";
  rec.pappus_obstructed = parse_tristate(require_field(fields, "pappus", line_no));
  rec.realized = parse_tristate(require_field(fields, "realized", line_no));
  analysis.pappus_witness = parse_witness_token(require_field(fields, "witness", line_no));
  analysis.realization = parse_realization_token(require_field(fields, "lines", line_no));
  return rec;
}

}  // namespace

std::string print_catalogue(const Catalogue& cat, CatalogueFormat format) {
  std::ostringstream out;
  if (format == CatalogueFormat::text) {
    out << "# simplicial-wirings catalogue format=" << cat.header.format << " n=" << cat.header.n
        << " near_pencils=" << (cat.header.include_near_pencils ? 1 : 0)
        << " simpobstr7=" << (cat.header.simpobstr7 ? 1 : 0) << " count=" << cat.records.size()
        << '\n';
    for (std::size_t i = 0; i < cat.records.size(); ++i) {
      out << record_line(cat.records[i], cat.analyses[i]) << '\n';
    }
  } else {
    OrderedJson header;
    header["type"] = "header";
    header["format"] = cat.header.format;
    header["n"] = cat.header.n;
    header["near_pencils"] = cat.header.include_near_pencils;
    header["simpobstr7"] = cat.header.simpobstr7;
    header["count"] = cat.records.size();
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < cat.records.size(); ++i) {
      out << record_json(cat.records[i], cat.analyses[i]).dump() << '\n';
    }
  }
  return out.str();
}

Catalogue parse_catalogue(const std::string& text) {
  Catalogue cat;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto fields = split_fields(line.substr(1), line_no);
      cat.header.format = std::stoi(require_field(fields, "format", line_no));
      cat.header.n = std::stoi(require_field(fields, "n", line_no));
      cat.header.include_near_pencils = require_field(fields, "near_pencils", line_no) == "1";
      cat.header.simpobstr7 = require_field(fields, "simpobstr7", line_no) == "1";
      expected = std::stoul(require_field(fields, "count", line_no));
      saw_header = true;
      continue;
    }
    if (line[0] == '{') {
      OrderedJson j;
      try {
        j = OrderedJson::parse(line);
      } catch (const std::exception& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (j.value("type", "") == "header") {
        cat.header.format = j.at("format").get<int>();
        cat.header.n = j.at("n").get<int>();
        cat.header.include_near_pencils = j.at("near_pencils").get<bool>();
        cat.header.simpobstr7 = j.at("simpobstr7").get<bool>();
        expected = j.at("count").get<std::size_t>();
        saw_header = true;
      } else {
        std::map<std::string, std::string> fields;
        fields["cert"] = j.at("cert").get<std::string>();
        fields["fp"] = j.at("fp").get<std::string>();
        fields["n"] = std::to_string(j.at("n").get<int>());
        fields["m"] = std::to_string(j.at("m").get<std::size_t>());
        fields["moves"] = j.at("moves").get<std::string>();
        fields["inv"] = j.at("inv").get<std::string>();
        fields["aut"] = std::to_string(j.at("aut").get<std::uint64_t>());
        fields["autord"] = j.at("autord").get<std::string>();
        fields["nearpencil"] = j.at("near_pencil").get<bool>() ? "1" : "0";
        fields["pappus"] = j.at("pappus").is_null() ? "-" : (j.at("pappus").get<bool>() ? "1" : "0");
        fields["realized"] =
            j.at("realized").is_null() ? "-" : (j.at("realized").get<bool>() ? "1" : "0");
        fields["witness"] = j.at("witness").get<std::string>();
        fields["lines"] = j.at("lines").get<std::string>();
        RecordAnalysis analysis;
        cat.records.push_back(record_from_fields(fields, line_no, analysis));
        cat.analyses.push_back(std::move(analysis));
      }
      continue;
    }
    auto fields = split_fields(line, line_no);
    RecordAnalysis analysis;
    cat.records.push_back(record_from_fields(fields, line_no, analysis));
    cat.analyses.push_back(std::move(analysis));
  }
  if (!saw_header) throw std::invalid_argument("catalogue has no header line");
  if (cat.records.size() != expected) {
    throw std::invalid_argument("catalogue record count does not match header");
  }
  return cat;
}

Catalogue enumerate_catalogue(int n, const CatalogueRunOptions& run) {
  EnumerationOptions opts;
  opts.include_near_pencils = run.include_near_pencils;
  opts.use_simpobstr7 = run.use_simpobstr7;
  opts.worker_count = run.worker_count;
  opts.junction_cap_override = run.junction_cap_override;
  opts.log_stats = run.log_stats;

  Dedup dedup;
  enumerate_raw(n, opts, [&dedup](const AllowableSequence& seq) { dedup.add(seq); });

  Catalogue cat;
  cat.header.n = n;
  cat.header.include_near_pencils = run.include_near_pencils;
  cat.header.simpobstr7 = run.use_simpobstr7;
  cat.records = dedup.take_records();
  for (ArrangementRecord& rec : cat.records) {
    const AutomorphismInfo info = automorphism_info(rec.representative);
    rec.automorphism_order = info.order;
    rec.automorphism_element_orders = info.element_orders;
  }
  cat.analyses.assign(cat.records.size(), {});
  return cat;
}

void analyze_catalogue(Catalogue& cat, const AnalyzeOptions& opts) {
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cat.records.size()) return;
      ArrangementRecord& rec = cat.records[i];
      RecordAnalysis& analysis = cat.analyses[i];
      auto witness = pappus_obstruction(rec.representative);
      rec.pappus_obstructed = witness.has_value();
      analysis.pappus_witness = witness;
      if (rec.automorphism_order == 0) {
        const AutomorphismInfo info = automorphism_info(rec.representative);
        rec.automorphism_order = info.order;
        rec.automorphism_element_orders = info.element_orders;
      }
      if (opts.attempt_realization && !witness.has_value()) {
        auto realization = realize_numeric(rec.representative, opts.realize);
        rec.realized = realization.has_value();
        analysis.realization = realization;
      }
    }
  };
  const int workers = std::max(1, opts.worker_count);
  if (workers == 1 || cat.records.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
}

}  // namespace wiring
