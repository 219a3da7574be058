#include "wiring/sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wiring {

std::vector<int> identity_sigma(int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) sigma[static_cast<std::size_t>(i)] = i;
  return sigma;
}

namespace {

bool block_increasing(const std::vector<int>& sigma, int a, int b) {
  for (int i = a; i < b; ++i) {
    if (sigma[static_cast<std::size_t>(i)] >= sigma[static_cast<std::size_t>(i) + 1]) return false;
  }
  return true;
}

void reverse_block(std::vector<int>& sigma, int a, int b) {
  std::reverse(sigma.begin() + a, sigma.begin() + b + 1);
}

}  // namespace

ValidationReport validate_sequence(const AllowableSequence& seq) {
  ValidationReport report;
  if (seq.n < 2) {
    report = {false, 0, SequenceViolation::bad_bounds, "wire count must be at least 2"};
    return report;
  }
  auto sigma = identity_sigma(seq.n);
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    const MovePair& p = seq.moves[k];
    if (p.a < 1 || p.b > seq.n || p.a >= p.b) {
      report = {false, k, SequenceViolation::bad_bounds,
                "move " + std::to_string(k + 1) + ": pair (" + std::to_string(p.a) + "," +
                    std::to_string(p.b) + ") out of range"};
      return report;
    }
    if (!block_increasing(sigma, p.a, p.b)) {
      report = {false, k, SequenceViolation::block_not_increasing,
                "move " + std::to_string(k + 1) + ": labels at rows " + std::to_string(p.a) +
                    ".." + std::to_string(p.b) + " are not strictly increasing"};
      return report;
    }
    reverse_block(sigma, p.a, p.b);
  }
  for (int i = 1; i <= seq.n; ++i) {
    if (sigma[static_cast<std::size_t>(i)] != seq.n + 1 - i) {
      report = {false, seq.moves.size(), SequenceViolation::not_reversal,
                "replay ends before the full reversal"};
      return report;
    }
  }
  return report;
}

std::vector<int> replay(const AllowableSequence& seq) {
  auto sigma = identity_sigma(seq.n);
  for (const MovePair& p : seq.moves) {
    if (p.a < 1 || p.b > seq.n || p.a >= p.b || !block_increasing(sigma, p.a, p.b)) {
      throw std::invalid_argument("replay: illegal move");
    }
    reverse_block(sigma, p.a, p.b);
  }
  return sigma;
}

std::string print_sequence(const AllowableSequence& seq) {
  std::ostringstream out;
  out << seq.n << ' ' << seq.moves.size() << '\n';
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    if (k) out << ' ';
    out << seq.moves[k].a << ',' << seq.moves[k].b;
  }
  out << '\n';
  return out.str();
}

AllowableSequence parse_sequence(std::istream& in) {
  AllowableSequence seq;
  long long m = 0;
  if (!(in >> seq.n >> m) || seq.n < 2 || m < 0) {
    throw std::invalid_argument("wiring header must be 'n m' with n >= 2");
  }
  seq.moves.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("wiring: fewer pairs than announced");
    auto comma = tok.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("wiring: pair token missing comma");
    MovePair p;
    try {
      p.a = std::stoi(tok.substr(0, comma));
      p.b = std::stoi(tok.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("wiring: malformed pair token '" + tok + "'");
    }
    seq.moves.push_back(p);
  }
  return seq;
}

AllowableSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

AllowableSequence flip_vertical(const AllowableSequence& seq) {
  AllowableSequence out;
  out.n = seq.n;
  out.moves.reserve(seq.moves.size());
  for (const MovePair& p : seq.moves) {
    out.moves.push_back({seq.n + 1 - p.b, seq.n + 1 - p.a});
  }
  return out;
}

AllowableSequence reverse_time(const AllowableSequence& seq) {
  AllowableSequence out;
  out.n = seq.n;
  out.moves.assign(seq.moves.rbegin(), seq.moves.rend());
  return out;
}

AllowableSequence near_pencil(int n) {
  if (n < 3) throw std::invalid_argument("near_pencil: n must be at least 3");
  AllowableSequence seq;
  seq.n = n;
  // Wire n walks down to row 1, then the remaining n-1 wires reverse at once.
  for (int a = n - 1; a >= 1; --a) seq.moves.push_back({a, a + 1});
  seq.moves.push_back({2, n});
  return seq;
}

bool is_near_pencil(const AllowableSequence& seq) {
  for (const MovePair& p : seq.moves) {
    if (p.size() == seq.n - 1) return true;
  }
  return false;
}

AllowableSequence delete_line(const AllowableSequence& seq, int label) {
  if (label < 1 || label > seq.n) throw std::invalid_argument("delete_line: no such wire label");
  if (seq.n < 3) throw std::invalid_argument("delete_line: need at least 3 wires");
  AllowableSequence out;
  out.n = seq.n - 1;
  auto sigma = identity_sigma(seq.n);
  int pos = label;  // current row of the deleted wire
  for (const MovePair& p : seq.moves) {
    if (!block_increasing(sigma, p.a, p.b)) throw std::invalid_argument("delete_line: input not allowable");
    const bool inside = p.a <= pos && pos <= p.b;
    MovePair q;
    if (inside) {
      q = {p.a, p.b - 1};  // block loses one row; a stays because pos >= a
    } else if (pos < p.a) {
      q = {p.a - 1, p.b - 1};
    } else {
      q = p;
    }
    if (!inside || q.a < q.b) {
      out.moves.push_back(q);
    }
    reverse_block(sigma, p.a, p.b);
    if (inside) pos = p.a + p.b - pos;
  }
  return out;
}

}  // namespace wiring
