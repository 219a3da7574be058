#include "wiring/enumerate.hpp"

namespace wiring {

const char* obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::simpobstr_1_1: return "simpobstr_1.1";
    case Obstruction::simpobstr_1_2: return "simpobstr_1.2";
    case Obstruction::simpobstr_2_1: return "simpobstr_2.1";
    case Obstruction::simpobstr_2_2: return "simpobstr_2.2";
    case Obstruction::simpobstr_2_3: return "simpobstr_2.3";
    case Obstruction::simpobstr_5_1: return "simpobstr_5.1";
    case Obstruction::simpobstr_5_2: return "simpobstr_5.2";
    case Obstruction::simpobstr_4_1: return "simpobstr_4.1";
    case Obstruction::simpobstr_4_2: return "simpobstr_4.2";
    case Obstruction::simpobstr_7_1: return "simpobstr_7.1";
    case Obstruction::simpobstr_7_2: return "simpobstr_7.2";
    case Obstruction::simpobstr_7_3: return "simpobstr_7.3";
    case Obstruction::simpobstr_7_4: return "simpobstr_7.4";
    case Obstruction::count_: break;
  }
  return "?";
}

namespace {

// The lemma conditions reference the fragment after its last junction (a,b).
// s is indexed by gap; a handful of the printed index expressions use a label
// value as the gap index (the projective gluing sends the terminal cell of the
// two wires with labels x, x+1 to the first cell of gap x).
struct Ctx {
  const WiringFragment& f;
  int n, a, b, d, u;

  int sig(int pos) const { return f.sigma(pos); }
  int s(int gap) const { return f.s(((gap % n) + n) % n); }
  int v(int gap) const { return f.v(((gap % n) + n) % n); }
};

bool fires_1_1(const Ctx& c) {
  if (c.a < 2) return false;
  if (c.sig(c.a) >= c.sig(c.a - 1)) return false;
  return !(c.sig(c.a - 1) == c.n + 2 - c.a && c.sig(c.a) == c.n + 1 - c.a);
}

bool fires_1_2(const Ctx& c) {
  if (c.b >= c.n) return false;
  if (c.sig(c.b + 1) >= c.sig(c.b)) return false;
  return !(c.sig(c.b) == c.n + 1 - c.b && c.sig(c.b + 1) == c.n - c.b);
}

bool fires_2_1(const Ctx& c) {
  for (int j = c.a; j <= c.b && j < c.n; ++j) {
    if (c.sig(j) == c.sig(j + 1) + 1 && c.sig(j) != c.n + 1 - j && c.s(c.sig(j + 1)) == 2) return true;
  }
  return false;
}

bool fires_2_2(const Ctx& c) {
  for (int j = c.a + 1; j <= c.b && j < c.n; ++j) {
    if (c.sig(j) == c.sig(j + 1) + 1 && c.sig(j - 1) != c.sig(j) + 1 && c.s(c.sig(j)) == 2 &&
        c.s(c.sig(j + 1)) == 2)
      return true;
  }
  return false;
}

bool fires_2_3(const Ctx& c) {
  for (int j = c.a; j <= c.b - 1 && j + 2 <= c.n; ++j) {
    if (c.sig(j) == c.sig(j + 1) + 1 && c.sig(j + 2) != c.sig(j) - 2 && c.s(c.sig(j) - 2) == 2 &&
        c.s(c.sig(j + 1)) == 2)
      return true;
  }
  return false;
}

bool fires_5_1(const Ctx& c) { return c.s(c.n - c.u) + c.v(c.u) == 3; }

bool fires_5_2(const Ctx& c) { return c.d > 1 && c.s(c.n + 1 - c.d) + c.v(c.d - 1) == 3; }

bool fires_4_1(const Ctx& c) {
  return c.b < c.n && c.sig(c.b) > c.sig(c.b + 1) && c.b <= c.u;
}

bool fires_4_2(const Ctx& c) {
  if (!(c.d < c.a && c.a <= c.u)) return false;
  if (c.sig(c.a - 1) <= c.sig(c.a)) return false;
  if (c.v(c.n + 1 - c.a) != 1) return true;
  if (c.sig(c.d) < c.sig(c.a)) return true;
  if (c.a >= 3 && c.sig(c.a - 2) < c.sig(c.a - 1)) return true;
  for (int j = c.b + 1; j <= c.u && j <= c.n; ++j) {
    if (c.sig(j) > c.sig(c.a)) return true;
  }
  return false;
}

bool fires_7_1(const Ctx& c) { return c.a == c.d + 1 && c.sig(c.d + 1) == c.n - 1 - c.d; }

bool fires_7_2(const Ctx& c) {
  return c.u > 1 && c.sig(c.u) == c.n + 2 - c.u && c.sig(c.u - 1) == c.n + 3 - c.u;
}

bool fires_7_3(const Ctx& c) {
  return c.d <= c.n - 1 && c.sig(c.d) == c.n - c.d && c.sig(c.d + 1) == c.n - 1 - c.d;
}

bool fires_7_4(const Ctx& c) {
  return c.sig(1) == 2 && c.b + 2 < c.n && c.sig(c.b) == 3 && c.sig(c.b + 1) == 4 &&
         c.sig(c.b + 2) == c.n;
}

}  // namespace

std::optional<Obstruction> check_obstructions(const WiringFragment& f,
                                              const std::array<bool, kObstructionCount>& enabled) {
  if (f.move_count() == 0) return std::nullopt;
  const MovePair last = f.last_move();
  const Ctx c{f, f.n(), last.a, last.b, f.d(), f.u()};

  using O = Obstruction;
  const auto on = [&](O o) { return enabled[static_cast<std::size_t>(o)]; };

  if (on(O::simpobstr_1_1) && fires_1_1(c)) return O::simpobstr_1_1;
  if (on(O::simpobstr_1_2) && fires_1_2(c)) return O::simpobstr_1_2;
  if (on(O::simpobstr_2_1) && fires_2_1(c)) return O::simpobstr_2_1;
  if (on(O::simpobstr_2_2) && fires_2_2(c)) return O::simpobstr_2_2;
  if (on(O::simpobstr_2_3) && fires_2_3(c)) return O::simpobstr_2_3;
  if (on(O::simpobstr_5_1) && fires_5_1(c)) return O::simpobstr_5_1;
  if (on(O::simpobstr_5_2) && fires_5_2(c)) return O::simpobstr_5_2;
  if (on(O::simpobstr_4_1) && fires_4_1(c)) return O::simpobstr_4_1;
  if (on(O::simpobstr_4_2) && fires_4_2(c)) return O::simpobstr_4_2;
  if (on(O::simpobstr_7_1) && fires_7_1(c)) return O::simpobstr_7_1;
  if (on(O::simpobstr_7_2) && fires_7_2(c)) return O::simpobstr_7_2;
  if (on(O::simpobstr_7_3) && fires_7_3(c)) return O::simpobstr_7_3;
  if (on(O::simpobstr_7_4) && fires_7_4(c)) return O::simpobstr_7_4;
  return std::nullopt;
}

std::optional<Obstruction> check_obstructions(const WiringFragment& f, bool use_simpobstr7) {
  auto enabled = SearchOptions::make_all_enabled();
  if (use_simpobstr7) {
    for (std::size_t i = static_cast<std::size_t>(Obstruction::simpobstr_7_1);
         i < kObstructionCount; ++i)
      enabled[i] = true;
  }
  return check_obstructions(f, enabled);
}

}  // namespace wiring
