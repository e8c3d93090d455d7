#include <doctest.h>

#include <algorithm>

#include "instab/minnorm.hpp"
#include "instab/selftest.hpp"
#include "instab/states.hpp"

using namespace instab;

namespace {

RatVec rv(std::vector<Rat> v) { return v; }

Rat norm2(const RatVec& v) {
  Rat acc(0);
  for (const Rat& c : v) acc += c * c;
  return acc;
}

}  // namespace

TEST_SUITE("minnorm") {

TEST_CASE("hand-checked projections") {
  // segment between the unit points: the midpoint
  CHECK(min_norm_point({{1, 0}, {0, 1}}) == rv({Rat(1, 2), Rat(1, 2)}));
  CHECK(min_norm_bruteforce({{1, 0}, {0, 1}}) == rv({Rat(1, 2), Rat(1, 2)}));

  // symmetric hull through the origin
  CHECK(min_norm_point({{1, -1}, {-1, 1}}) == rv({Rat(0), Rat(0)}));

  // single point
  CHECK(min_norm_point({{2, 1}}) == rv({Rat(2), Rat(1)}));

  // interior vertex beats every edge projection: candidates are the vertex
  // (1,1) with norm^2 = 2 and the edge projections (3/2,3/2), (3/5,6/5)
  // (outside its segment), so the answer is (1,1)
  CHECK(min_norm_bruteforce({{3, 0}, {0, 3}, {1, 1}}) == rv({Rat(1), Rat(1)}));
  CHECK(min_norm_point({{3, 0}, {0, 3}, {1, 1}}) == rv({Rat(1), Rat(1)}));

  // origin is itself a vertex
  CHECK(min_norm_bruteforce({{0, 0}, {5, 5}}) == rv({Rat(0), Rat(0)}));
}

TEST_CASE("duplicates and input order do not matter") {
  std::vector<Weight> pts{{3, 0}, {0, 3}, {1, 1}, {3, 0}, {1, 1}};
  RatVec base = min_norm_point(pts);
  std::reverse(pts.begin(), pts.end());
  CHECK(min_norm_point(pts) == base);
}

TEST_CASE("wolfe agrees with the subset oracle on random states") {
  SplitMix64 rng(41);
  for (int round = 0; round < 60; ++round) {
    State s = random_state(rng, 4, 8, 5);
    RatVec fast = min_norm_point(s.weights);
    RatVec slow = min_norm_bruteforce(s.weights);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("optimality certificate holds") {
  SplitMix64 rng(43);
  for (int round = 0; round < 60; ++round) {
    State s = random_state(rng, 4, 8, 5);
    RatVec w = min_norm_point(s.weights);
    Rat wn = norm2(w);
    for (const Weight& chi : s.weights) {
      Rat dot(0);
      for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * Rat(chi[i]);
      CHECK(dot >= wn);
    }
  }
}

TEST_CASE("oracle caps are enforced") {
  std::vector<Weight> big;
  for (long i = 0; i < 13; ++i) big.push_back({i, i + 1});
  CHECK_THROWS_AS(min_norm_bruteforce(big), budget_error);

  std::vector<Weight> wide{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(min_norm_bruteforce(wide), budget_error);
  CHECK_THROWS_AS(min_norm_point({}), std::invalid_argument);
}

}  // TEST_SUITE
