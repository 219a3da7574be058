#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wiring/sequence.hpp"

using namespace wiring;

TEST_CASE("validate accepts the pencil and the triangle") {
  CHECK(validate_sequence({3, {{1, 3}}}).ok);
  CHECK(validate_sequence({3, {{1, 2}, {2, 3}, {1, 2}}}).ok);
}

TEST_CASE("validate reports the first violation") {
  const auto rep = validate_sequence({3, {{1, 2}, {1, 2}}});
  CHECK_FALSE(rep.ok);
  CHECK(rep.index == 1);
  CHECK(rep.kind == SequenceViolation::block_not_increasing);

  const auto bounds = validate_sequence({3, {{0, 2}}});
  CHECK_FALSE(bounds.ok);
  CHECK(bounds.kind == SequenceViolation::bad_bounds);

  const auto incomplete = validate_sequence({3, {{1, 2}}});
  CHECK_FALSE(incomplete.ok);
  CHECK(incomplete.index == 1);
  CHECK(incomplete.kind == SequenceViolation::not_reversal);
}

TEST_CASE("random adjacent-transposition words that reach the reversal validate") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto seq = oracles::random_complete_sequence(4, rng);
    CHECK(validate_sequence(seq).ok);
  }
}

TEST_CASE("text form round-trips byte-identically") {
  const AllowableSequence seq{4, {{3, 4}, {2, 3}, {1, 2}, {2, 4}}};
  const std::string text = print_sequence(seq);
  CHECK(text == "4 4\n3,4 2,3 1,2 2,4\n");
  CHECK(parse_sequence(text) == seq);
  CHECK(print_sequence(parse_sequence(text)) == text);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_sequence("1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("3 2\n1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("3 1\n12\n"), std::invalid_argument);
}

TEST_CASE("re-encodings stay allowable") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    const auto seq = oracles::random_complete_sequence(6, rng);
    CHECK(validate_sequence(flip_vertical(seq)).ok);
    CHECK(validate_sequence(reverse_time(seq)).ok);
    CHECK(flip_vertical(flip_vertical(seq)) == seq);
    CHECK(reverse_time(reverse_time(seq)) == seq);
  }
}

TEST_CASE("near-pencil construction") {
  for (int n = 3; n <= 9; ++n) {
    const auto seq = near_pencil(n);
    CHECK(validate_sequence(seq).ok);
    CHECK(is_near_pencil(seq));
  }
  CHECK(is_near_pencil({4, {{3, 4}, {2, 3}, {1, 2}, {2, 4}}}));  // 3 concurrent + 1
  CHECK(is_near_pencil(near_pencil(3)));                         // the triangle
}

TEST_CASE("delete_line surgery") {
  SUBCASE("deleting the off-pencil line leaves a pencil") {
    for (int n = 4; n <= 8; ++n) {
      const auto np = near_pencil(n);
      // wire n is the one walking down to row 1
      const auto reduced = delete_line(np, n);
      REQUIRE(reduced.n == n - 1);
      REQUIRE(reduced.moves.size() == 1);
      CHECK(reduced.moves[0] == MovePair{1, n - 1});
    }
  }
  SUBCASE("deleting any line of the triangle leaves the two-wire crossing") {
    const auto triangle = near_pencil(3);
    for (int label = 1; label <= 3; ++label) {
      const auto reduced = delete_line(triangle, label);
      CHECK(reduced.n == 2);
      CHECK(reduced.moves == std::vector<MovePair>{{1, 2}});
    }
  }
  SUBCASE("crossing conservation under random deletions") {
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
      const int n = 4 + static_cast<int>(rng() % 6);  // 4..9
      const auto seq = oracles::random_complete_sequence(n, rng);
      const int label = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      const auto reduced = delete_line(seq, label);
      CHECK(validate_sequence(reduced).ok);
      long long crossings = 0;
      for (const auto& mv : reduced.moves) {
        crossings += static_cast<long long>(mv.size()) * (mv.size() - 1) / 2;
      }
      CHECK(crossings == static_cast<long long>(n - 1) * (n - 2) / 2);
    }
  }
  SUBCASE("bad label") {
    CHECK_THROWS_AS(delete_line(near_pencil(4), 5), std::invalid_argument);
  }
}
