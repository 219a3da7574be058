#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wiring/sequence.hpp"

namespace wiring {

using Rational = boost::multiprecision::cpp_rational;

// A projective line as exact homogeneous coefficients (A, B, C) of
// A*x + B*y + C*z = 0, never all zero.
struct RationalLine {
  std::array<Rational, 3> coeffs;

  friend bool operator==(const RationalLine& a, const RationalLine& b) {
    return a.coeffs == b.coeffs;
  }
};

bool lines_projectively_equal(const RationalLine& a, const RationalLine& b);

// Wiring of a straight-line arrangement via the rotating-sweep construction:
// a random rational projective change of chart until no crossing lies at
// infinity and distinct crossing points have distinct abscissae, then a left
// to right sweep grouping concurrent crossings into one junction.  Deterministic
// (fixed retry seed sequence, at most 100 attempts).
AllowableSequence wiring_from_lines(const std::vector<RationalLine>& lines);

struct Realization {
  std::vector<RationalLine> lines;   // per wire label, index 0 unused
  std::array<int, 4> gauge_lines{};  // labels pinned to the projective frame

  std::string to_text() const;
  friend bool operator==(const Realization&, const Realization&) = default;
};

struct RealizeOptions {
  int restarts = 64;
  int max_iterations = 400;
  // success threshold for the squared residual of the normalized system
  double residual_tolerance = 1e-18;
  unsigned seed = 20113;
  long long denominator_bound = 1'000'000;
};

// Best-effort numeric search for a straight-line realization: Levenberg-
// Marquardt on the vertex incidence determinants with four gauge lines
// pinned, seeded from the wiring's drawn geometry plus random jitter.  A
// candidate counts as success only when its rationalization re-extracts, via
// wiring_from_lines, to an arrangement isomorphic to the input; failure is
// inconclusive.
std::optional<Realization> realize_numeric(const AllowableSequence& seq,
                                           const RealizeOptions& opts = {});

}  // namespace wiring
