#include <doctest.h>

#include <algorithm>

#include "instab/kempf.hpp"
#include "instab/selftest.hpp"

using namespace instab;

TEST_SUITE("kempf") {

TEST_CASE("instability on the standard examples") {
  InstabilityReport a = instability(make_state(2, {{1, 0}, {0, 1}}));
  CHECK_FALSE(a.semistable);
  CHECK(*a.lambda == Cochar{1, 1});
  CHECK(a.m == 1);
  CHECK(a.mu_sq == Rat(1, 2));
  CHECK(a.parabolic->block_sizes == std::vector<int>{2});

  InstabilityReport b = instability(make_state(2, {{2, 1}}));
  CHECK_FALSE(b.semistable);
  CHECK(*b.lambda == Cochar{2, 1});
  CHECK(b.m == 5);
  CHECK(b.mu_sq == Rat(5));
  CHECK(b.parabolic->block_sizes == std::vector<int>{1, 1});

  InstabilityReport c = instability(make_state(2, {{1, -1}, {-1, 1}}));
  CHECK(c.semistable);
  CHECK(c.mu_sq == Rat(0));
  CHECK_FALSE(c.lambda.has_value());
  for (const Rat& x : c.min_norm_point) CHECK(sgn(x) == 0);
}

TEST_CASE("unstable reports carry valid certificates") {
  SplitMix64 rng(47);
  int unstable_seen = 0;
  for (int round = 0; round < 80; ++round) {
    State s = random_state(rng, 4, 8, 5);
    InstabilityReport report = instability(s);
    if (report.semistable) continue;
    ++unstable_seen;
    // m^2 = mu_sq * |lambda|^2
    CHECK(Rat(report.m * report.m) == report.mu_sq * Rat(norm_sq(*report.lambda)));
    // the destabilizer genuinely destabilizes
    CHECK(mu_of(*report.lambda, s).m > 0);
    // <w, chi> >= |w|^2 for every weight
    Rat wn(0);
    for (const Rat& c : report.min_norm_point) wn += c * c;
    for (const Weight& chi : s.weights) {
      Rat dot(0);
      for (std::size_t i = 0; i < chi.size(); ++i) dot += report.min_norm_point[i] * Rat(chi[i]);
      CHECK(dot >= wn);
    }
  }
  CHECK(unstable_seen > 10);
}

TEST_CASE("instability is equivariant under all permutations (n <= 3)") {
  SplitMix64 rng(53);
  for (int round = 0; round < 25; ++round) {
    State s = random_state(rng, 3, 6, 4);
    InstabilityReport base = instability(s);
    std::vector<int> perm(s.n);
    for (int i = 0; i < s.n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
      State moved = permuted(s, perm);
      InstabilityReport other = instability(moved);
      CHECK(base.semistable == other.semistable);
      CHECK(base.mu_sq == other.mu_sq);
      if (!base.semistable) {
        CHECK(base.parabolic->block_sizes == other.parabolic->block_sizes);
        std::vector<std::pair<int, int>> relabeled;
        for (auto [i, j] : base.parabolic->zero_pattern)
          relabeled.emplace_back(perm[i - 1] + 1, perm[j - 1] + 1);
        std::sort(relabeled.begin(), relabeled.end());
        CHECK(relabeled == other.parabolic->zero_pattern);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("conjugate search finds the sharper destabilizer for e1 + e2") {
  RepSpec std2 = standard_rep(2, 0);
  auto result = conjugate_instability_search(std2, {Rat(1), Rat(1)}, 40, default_seed);
  CHECK_FALSE(result.best.semistable);
  CHECK(result.best.mu_sq == Rat(1));  // beats 1/2 at the identity
  CHECK(result.best_sample > 0);
}

TEST_CASE("conjugate search cannot improve a single-weight point") {
  RepSpec std2 = standard_rep(2, 0);
  auto result = conjugate_instability_search(std2, {Rat(1), Rat(0)}, 25, default_seed);
  CHECK(result.best.mu_sq == Rat(1));
  // identity already realizes the optimum
  auto identity_only = conjugate_instability_search(std2, {Rat(1), Rat(0)}, 1, default_seed);
  CHECK(identity_only.best.mu_sq == Rat(1));
}

TEST_CASE("search never falls below the identity sample") {
  RepSpec std3 = standard_rep(3, 0);
  SplitMix64 rng(59);
  for (int round = 0; round < 10; ++round) {
    RatVec v(3);
    bool zero = true;
    for (Rat& c : v) {
      c = Rat(rng.range(-2, 2));
      if (sgn(c) != 0) zero = false;
    }
    if (zero) v[0] = 1;
    auto one = conjugate_instability_search(std3, v, 1, default_seed);
    auto many = conjugate_instability_search(std3, v, 15, default_seed);
    if (!one.best.semistable) {
      CHECK_FALSE(many.best.semistable);
      CHECK(many.best.mu_sq >= one.best.mu_sq);
    }
  }
}

TEST_CASE("a fixed point of the conjugation action stays semistable") {
  RepSpec ad = adjoint_rep(2, 0);
  // the identity matrix as a point of the 4-dimensional space
  auto result = conjugate_instability_search(ad, {Rat(1), Rat(0), Rat(0), Rat(1)}, 12, default_seed);
  CHECK(result.best.semistable);
  CHECK(result.best_sample == 0);
}

TEST_CASE("finite-field search certifies instability over GF(8)") {
  RepSpec std2 = standard_rep(2, 2);
  GF field(2, search_extension_degree(2));
  CHECK(field.extension_degree() == 3);
  std::vector<GF::Elem> v{field.one(), field.one()};
  auto result = conjugate_instability_search(std2, v, field, 60, default_seed);
  CHECK_FALSE(result.best.semistable);
  CHECK(result.best.mu_sq == Rat(1));
}

TEST_CASE("search input validation") {
  RepSpec std2 = standard_rep(2, 0);
  CHECK_THROWS_AS(conjugate_instability_search(std2, {Rat(0), Rat(0)}, 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjugate_instability_search(std2, {Rat(1)}, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_instability_search(std2, {Rat(1), Rat(1)}, 0, 1),
                  std::invalid_argument);
  GF f3(3);
  CHECK_THROWS_AS(conjugate_instability_search(std2, {f3.one(), f3.one()}, f3, 5, 1),
                  std::invalid_argument);
}

}  // TEST_SUITE
