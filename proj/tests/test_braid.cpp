#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotint/braid.hpp"

using namespace knotint;

TEST_CASE("parse braid words") {
  BraidWord t = parse_braid("1 1 1", 2);
  CHECK(t.strands == 2);
  CHECK(t.letters == std::vector<int>{1, 1, 1});
  CHECK(parse_braid("", 3).letters.empty());
  BraidWord e8 = parse_braid("1 1 1 2 1 1 1 2", 3);
  CHECK(e8.letters.size() == 8);
  CHECK(parse_braid("s1 -s2", 3).letters == std::vector<int>{1, -2});
  CHECK_THROWS_AS(parse_braid("0", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("2", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("x", 2), std::invalid_argument);
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_braid("1 1 1", 2)) == 3);
  CHECK(writhe(parse_braid("", 2)) == 0);
  CHECK(writhe(parse_braid("1 1 1 2 1 1 1 2", 3)) == 8);
  CHECK(writhe(parse_braid("1 -2 1 -2", 3)) == 0);
}

TEST_CASE("writhe is a homomorphism") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    BraidWord a, b;
    a.strands = b.strands = 3;
    for (int j = 0; j < int(rng() % 6); ++j)
      a.letters.push_back((rng() % 2 ? 1 : -1) * int(1 + rng() % 2));
    for (int j = 0; j < int(rng() % 6); ++j)
      b.letters.push_back((rng() % 2 ? 1 : -1) * int(1 + rng() % 2));
    CHECK(writhe(concat(a, b)) == writhe(a) + writhe(b));
  }
}

TEST_CASE("underlying permutation and closure components") {
  // sigma^3 in B2: transposition, 1 component
  CHECK(underlying_permutation(parse_braid("1 1 1", 2)) == std::vector<int>{1, 0});
  CHECK(closure_components(parse_braid("1 1 1", 2)) == 1);
  CHECK(closure_components(parse_braid("", 2)) == 2);
  // "1 -2" in B3 is a 3-cycle: start 0 -> 1 -> ... check by hand:
  // sigma_1 sends 0<->1, then sigma_2^-1 swaps 1<->2 (signs do not matter for
  // the permutation), so the strand at 0 ends at 2: one cycle.
  CHECK(closure_components(parse_braid("1 -2", 3)) == 1);
}

TEST_CASE("permutation respects concatenation and inversion") {
  std::mt19937 rng(9);
  auto apply = [](const std::vector<int>& after, const std::vector<int>& first) {
    // strand starting at i: goes to first[i], then to after[first[i]]
    std::vector<int> r(first.size());
    for (size_t i = 0; i < first.size(); ++i) r[i] = after[size_t(first[i])];
    return r;
  };
  for (int i = 0; i < 50; ++i) {
    BraidWord a, b;
    a.strands = b.strands = 4;
    for (int j = 0; j < int(rng() % 8); ++j)
      a.letters.push_back((rng() % 2 ? 1 : -1) * int(1 + rng() % 3));
    for (int j = 0; j < int(rng() % 8); ++j)
      b.letters.push_back((rng() % 2 ? 1 : -1) * int(1 + rng() % 3));
    CHECK(underlying_permutation(concat(a, b)) ==
          apply(underlying_permutation(b), underlying_permutation(a)));
    auto id = underlying_permutation(concat(a, inverse(a)));
    CHECK(id == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("free reduction") {
  BraidWord b = parse_braid("1 2 -2 -1 1", 2 + 1);
  CHECK(free_reduce(b).letters == std::vector<int>{1});
  CHECK(braid_to_string(free_reduce(parse_braid("1 -1", 2))) == "");
}
