#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "wiring/realize.hpp"

namespace wiring {

bool lines_projectively_equal(const RationalLine& a, const RationalLine& b) {
  // proportional coefficient vectors
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)] !=
          a.coeffs[static_cast<std::size_t>(j)] * b.coeffs[static_cast<std::size_t>(i)])
        return false;
    }
  }
  return true;
}

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Rational det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return a;
}

// Line coefficients transform by the adjugate when points transform by M.
RationalLine transform_line(const RationalLine& line, const Mat3& adj) {
  RationalLine out;
  for (int c = 0; c < 3; ++c) {
    Rational acc = 0;
    for (int r = 0; r < 3; ++r) {
      acc += line.coeffs[static_cast<std::size_t>(r)] *
             adj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    out.coeffs[static_cast<std::size_t>(c)] = acc;
  }
  return out;
}

}  // namespace

AllowableSequence wiring_from_lines(const std::vector<RationalLine>& lines) {
  const int n = static_cast<int>(lines.size());
  if (n < 2) throw std::invalid_argument("wiring_from_lines: need at least two lines");
  for (const RationalLine& l : lines) {
    if (l.coeffs[0] == 0 && l.coeffs[1] == 0 && l.coeffs[2] == 0) {
      throw std::invalid_argument("wiring_from_lines: zero coefficient vector");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (lines_projectively_equal(lines[static_cast<std::size_t>(i)],
                                   lines[static_cast<std::size_t>(j)])) {
        throw std::invalid_argument("wiring_from_lines: duplicate lines");
      }
    }
  }

  for (unsigned attempt = 0; attempt < 100; ++attempt) {
    // Change of chart; the identity is attempted first.
    Mat3 m{};
    if (attempt == 0) {
      for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    } else {
      std::mt19937 rng(1234567u + attempt);
      std::uniform_int_distribution<int> coin(-9, 9);
      for (auto& row : m)
        for (auto& cell : row) cell = coin(rng);
      if (det3(m) == 0) continue;
    }
    const Mat3 adj = adjugate(m);
    std::vector<RationalLine> work;
    work.reserve(static_cast<std::size_t>(n));
    for (const RationalLine& l : lines) work.push_back(transform_line(l, adj));

    // Affine chart y = slope*x + intercept requires B != 0 everywhere.
    bool ok = true;
    for (const RationalLine& l : work) {
      if (l.coeffs[1] == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::vector<Rational> slope(static_cast<std::size_t>(n)), intercept(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      slope[static_cast<std::size_t>(i)] = -work[static_cast<std::size_t>(i)].coeffs[0] /
                                           work[static_cast<std::size_t>(i)].coeffs[1];
      intercept[static_cast<std::size_t>(i)] = -work[static_cast<std::size_t>(i)].coeffs[2] /
                                               work[static_cast<std::size_t>(i)].coeffs[1];
    }
    // No crossing at infinity: slopes pairwise distinct.
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (slope[static_cast<std::size_t>(i)] == slope[static_cast<std::size_t>(j)]) ok = false;
      }
    }
    if (!ok) continue;

    // Crossing points grouped by location; distinct points need distinct x.
    std::map<std::pair<Rational, Rational>, std::vector<int>> groups;  // point -> involved lines
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Rational x = (intercept[static_cast<std::size_t>(j)] - intercept[static_cast<std::size_t>(i)]) /
                           (slope[static_cast<std::size_t>(i)] - slope[static_cast<std::size_t>(j)]);
        const Rational y = slope[static_cast<std::size_t>(i)] * x + intercept[static_cast<std::size_t>(i)];
        auto& bundle = groups[{x, y}];
        if (!std::count(bundle.begin(), bundle.end(), i)) bundle.push_back(i);
        if (!std::count(bundle.begin(), bundle.end(), j)) bundle.push_back(j);
      }
    }
    std::vector<std::pair<Rational, std::vector<int>>> events;
    events.reserve(groups.size());
    for (auto& [pt, bundle] : groups) events.emplace_back(pt.first, bundle);
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < events.size() && ok; ++k) {
      if (events[k].first == events[k + 1].first) ok = false;
    }
    if (!ok) continue;

    // Initial bottom-to-top order at x -> -infinity: decreasing slope, and the
    // genericity above guarantees strict order.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return slope[static_cast<std::size_t>(a)] > slope[static_cast<std::size_t>(b)];
    });
    std::vector<int> row_of_line(static_cast<std::size_t>(n));  // 1-based rows
    for (int r = 0; r < n; ++r) row_of_line[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;

    AllowableSequence seq;
    seq.n = n;
    for (const auto& [x, bundle] : events) {
      int lo = n + 1, hi = 0;
      for (int line : bundle) {
        lo = std::min(lo, row_of_line[static_cast<std::size_t>(line)]);
        hi = std::max(hi, row_of_line[static_cast<std::size_t>(line)]);
      }
      if (hi - lo + 1 != static_cast<int>(bundle.size())) {
        throw std::logic_error("wiring_from_lines: crossing bundle is not contiguous");
      }
      seq.moves.push_back({lo, hi});
      for (int line : bundle) {
        row_of_line[static_cast<std::size_t>(line)] = lo + hi - row_of_line[static_cast<std::size_t>(line)];
      }
    }
    auto report = validate_sequence(seq);
    if (!report.ok) throw std::logic_error("wiring_from_lines: sweep produced an invalid sequence");
    return seq;
  }
  throw std::runtime_error("wiring_from_lines: no generic chart found after 100 attempts");
}

}  // namespace wiring
