#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wiring/fragment.hpp"

using namespace wiring;

namespace {

void check_against_oracle(const WiringFragment& f) {
  const FragmentState got = snapshot(f);
  const FragmentState want = oracles::recompute_state(f.n(), f.moves());
  CHECK(got.sigma == want.sigma);
  CHECK(got.eps == want.eps);
  CHECK(got.v == want.v);
  CHECK(got.s == want.s);
  CHECK(got.d == want.d);
  CHECK(got.u == want.u);
}

}  // namespace

TEST_CASE("initial fragment state") {
  const auto f = WiringFragment::initial(3);
  CHECK(f.sigma(1) == 1);
  CHECK(f.sigma(2) == 2);
  CHECK(f.sigma(3) == 3);
  CHECK(f.move_count() == 0);
  CHECK(f.d() == 1);
  CHECK(f.u() == 3);
  for (int g = 0; g < 3; ++g) {
    CHECK(f.v(g) == 0);
    CHECK(f.s(g) == 0);
  }
  for (int i = 1; i <= 3; ++i) CHECK(f.eps(i) == 0);
  CHECK_FALSE(f.is_complete());

  const auto f2 = WiringFragment::initial(2);
  CHECK(f2.sigma(1) == 1);
  CHECK(f2.sigma(2) == 2);

  CHECK_THROWS_AS(WiringFragment::initial(1), std::invalid_argument);
}

TEST_CASE("full pencil on three wires") {
  auto f = WiringFragment::initial(3);
  f.apply({1, 3});
  CHECK(f.sigma(1) == 3);
  CHECK(f.sigma(2) == 2);
  CHECK(f.sigma(3) == 1);
  CHECK(f.is_complete());
  CHECK(f.eps(1) == 3);
  CHECK(f.eps(2) == 3);
  CHECK(f.eps(3) == 3);
  check_against_oracle(f);
}

TEST_CASE("triangle: three ordinary junctions") {
  auto f = WiringFragment::initial(3);
  f.apply({1, 2});
  f.apply({2, 3});
  f.apply({1, 2});
  CHECK(f.is_complete());
  for (const auto& mv : f.moves()) CHECK(mv.size() == 2);
  CHECK(f.joinends_holds());
  check_against_oracle(f);
}

TEST_CASE("move errors") {
  auto f = WiringFragment::initial(4);
  CHECK_THROWS_AS(f.apply({0, 2}), std::out_of_range);
  CHECK_THROWS_AS(f.apply({2, 5}), std::out_of_range);
  CHECK_THROWS_AS(f.apply({3, 3}), std::out_of_range);
  f.apply({1, 2});
  CHECK_THROWS_AS(f.apply({1, 2}), std::invalid_argument);  // block now decreasing
}

TEST_CASE("legal moves") {
  auto f = WiringFragment::initial(3);
  CHECK(f.legal_moves() == std::vector<MovePair>{{1, 2}, {1, 3}, {2, 3}});
  f.apply({1, 3});
  CHECK(f.legal_moves().empty());

  auto g = WiringFragment::initial(3);
  g.apply({1, 2});  // sigma = [2,1,3]
  CHECK(g.legal_moves() == std::vector<MovePair>{{2, 3}});
}

TEST_CASE("the twenty-wire fragment from the worked example") {
  const std::vector<MovePair> moves = {
      {1, 5},   {5, 6},   {6, 8},   {8, 9},   {9, 11},  {11, 13}, {13, 14}, {14, 16},
      {16, 17}, {17, 19}, {19, 20}, {4, 6},   {6, 9},   {9, 11},  {11, 14}, {14, 17},
      {17, 19}, {16, 17}, {8, 9},   {5, 6},   {3, 5},   {5, 8},   {8, 11},  {11, 12},
      {12, 14}, {14, 16}, {16, 18}, {10, 12}, {12, 14}};
  auto f = WiringFragment::initial(20);
  for (const auto& mv : moves) f.apply(mv);

  const std::vector<int> sigma_expected = {0,  5,  4,  11, 8,  13, 9, 6, 16, 10, 19,
                                           14, 20, 12, 7,  17, 18, 15, 3, 2,  1};
  const std::vector<int> s_expected = {0, 1, 1, 1, 1, 2, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2, 1, 2};
  const std::vector<int> v_expected = {2, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2};
  const std::vector<int> eps_expected = {0, 5, 5, 3, 3, 4, 4, 4, 4, 4, 3,
                                         3, 3, 3, 3, 3, 3, 3, 3, 3, 2};

  const FragmentState st = snapshot(f);
  CHECK(st.sigma == sigma_expected);
  CHECK(st.s == s_expected);
  CHECK(st.v == v_expected);
  CHECK(st.eps == eps_expected);
  CHECK(st.d == 1);
  CHECK(st.u == 17);
  CHECK_FALSE(f.is_complete());
  check_against_oracle(f);
}

TEST_CASE("incremental state equals recomputation on random legal sequences") {
  std::mt19937 rng(12345);
  for (int n = 2; n <= 8; ++n) {
    for (int round = 0; round < 40; ++round) {
      auto f = WiringFragment::initial(n);
      while (!f.is_complete()) {
        const auto moves = f.legal_moves();
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        f.apply(moves[pick(rng)]);
        check_against_oracle(f);
      }
      CHECK(f.d() > f.u());
    }
  }
}

TEST_CASE("undo restores the exact prior state") {
  std::mt19937 rng(999);
  for (int round = 0; round < 30; ++round) {
    auto f = WiringFragment::initial(7);
    int depth = 0;
    while (!f.is_complete() && depth < 12) {
      const auto moves = f.legal_moves();
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      const auto before = f;
      const MovePair p = moves[pick(rng)];
      f.apply(p);
      auto copy = f;
      copy.undo();
      CHECK(copy == before);
      ++depth;
    }
  }
}

TEST_CASE("value-semantics application") {
  const auto f = WiringFragment::initial(3);
  const auto g = f.applied({1, 3});
  CHECK_FALSE(f.is_complete());
  CHECK(g.is_complete());
}

TEST_CASE("crossing conservation on complete sequences") {
  std::mt19937 rng(4242);
  for (int n = 2; n <= 8; ++n) {
    for (int round = 0; round < 20; ++round) {
      const auto seq = oracles::random_complete_sequence(n, rng);
      long long total = 0;
      for (const auto& mv : seq.moves) {
        total += static_cast<long long>(mv.size()) * (mv.size() - 1) / 2;
      }
      CHECK(total == static_cast<long long>(n) * (n - 1) / 2);
    }
  }
}

TEST_CASE("distinct legal moves lead to distinct permutations") {
  std::mt19937 rng(31415);
  for (int round = 0; round < 40; ++round) {
    auto f = WiringFragment::initial(6);
    std::uniform_int_distribution<int> steps(0, 6);
    const int depth = steps(rng);
    for (int k = 0; k < depth && !f.is_complete(); ++k) {
      const auto moves = f.legal_moves();
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      f.apply(moves[pick(rng)]);
    }
    const auto moves = f.legal_moves();
    std::vector<std::vector<int>> successors;
    for (const MovePair& p : moves) {
      auto g = f.applied(p);
      successors.push_back(snapshot(g).sigma);
    }
    std::sort(successors.begin(), successors.end());
    CHECK(std::adjacent_find(successors.begin(), successors.end()) == successors.end());
  }
}
