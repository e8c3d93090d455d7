#include <doctest.h>

#include <array>

#include "instab/sandbox.hpp"
#include "instab/truncsym.hpp"

using namespace instab;

TEST_SUITE("sandbox") {

TEST_CASE("slope") {
  CHECK(slope(make_bundle(0, {0, 0})) == Rat(0));
  CHECK(slope(make_bundle(0, {1, 0})) == Rat(1, 2));
  CHECK(slope(make_bundle(0, {3, 3, 3})) == Rat(3));
}

TEST_CASE("semistability means equal twists") {
  CHECK(is_semistable(make_bundle(0, {2, 2})));
  CHECK_FALSE(is_semistable(make_bundle(0, {1, 0})));
  CHECK(is_semistable(make_bundle(0, {-7})));
}

TEST_CASE("Frobenius pullback scales every twist") {
  SplitBundle e = frobenius_pullback(make_bundle(2, {1, 0}), 1);
  CHECK(e.degrees == std::vector<long>{2, 0});
  CHECK(frobenius_pullback(make_bundle(3, {5, -2}), 0).degrees == std::vector<long>{5, -2});
  CHECK(frobenius_pullback(make_bundle(3, {-1}), 2).degrees == std::vector<long>{-9});
  CHECK_THROWS_AS(frobenius_pullback(make_bundle(0, {1}), 1), std::invalid_argument);
}

TEST_CASE("functors on split bundles") {
  SplitBundle t = apply_functor(make_bundle(2, {1, 0}), {Functor::Kind::truncated, 2});
  CHECK(t.degrees == std::vector<long>{1});

  SplitBundle w = apply_functor(make_bundle(0, {4, 1}), {Functor::Kind::wedge, 2});
  CHECK(w.degrees == std::vector<long>{5});

  SplitBundle s = apply_functor(make_bundle(0, {1, 1}), {Functor::Kind::sym, 2});
  CHECK(s.degrees == std::vector<long>{2, 2, 2});

  SplitBundle tp = apply_functor(make_bundle(0, {1, 0}), {Functor::Kind::tensor_power, 2});
  CHECK(tp.degrees == std::vector<long>{2, 1, 1, 0});

  CHECK_THROWS_AS(apply_functor(make_bundle(2, {1, 0}), {Functor::Kind::truncated, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_functor(make_bundle(0, {1, 0}), {Functor::Kind::truncated, 1}),
                  std::invalid_argument);
}

TEST_CASE("tensor of bundles") {
  SplitBundle prod = tensor_bundle(make_bundle(0, {1, 0}), make_bundle(0, {2}));
  CHECK(prod.degrees == std::vector<long>{3, 2});
  CHECK_THROWS_AS(tensor_bundle(make_bundle(2, {1}), make_bundle(3, {1})), std::invalid_argument);
}

TEST_CASE("slope profile groups equal twists in decreasing order") {
  auto profile = hn_profile(make_bundle(0, {1, 1, 0}));
  REQUIRE(profile.size() == 2);
  CHECK(profile[0] == std::pair<Rat, int>{Rat(1), 2});
  CHECK(profile[1] == std::pair<Rat, int>{Rat(0), 1});

  CHECK(hn_profile(make_bundle(0, {2, 2})).size() == 1);

  auto three = hn_profile(make_bundle(0, {3, 1, 0}));
  REQUIRE(three.size() == 3);
  CHECK(three[0].first == Rat(3));
  CHECK(three[1].first == Rat(1));
  CHECK(three[2].first == Rat(0));
}

TEST_CASE("identities on seeded random bundles") {
  SplitMix64 rng(71);
  for (int round = 0; round < 40; ++round) {
    long p = std::array<long, 3>{2, 3, 5}[rng.below(3)];
    int rank = static_cast<int>(rng.range(1, 4));
    std::vector<long> degrees(rank);
    for (long& d : degrees) d = rng.range(-5, 5);
    SplitBundle e = make_bundle(p, degrees);

    int times = static_cast<int>(rng.range(0, 5));
    CHECK(slope(frobenius_pullback(e, times)) ==
          slope(e) * Rat(pow_big(BigInt(p), static_cast<unsigned long>(times))));
    CHECK(is_semistable(e) == is_semistable(frobenius_pullback(e, times)));

    long l_max = rank * (p - 1);
    int l = static_cast<int>(rng.range(1, l_max));
    CHECK(BigInt(bundle_rank(apply_functor(e, {Functor::Kind::truncated, l}))) ==
          tl_dim(p, rank, l));

    // semistable inputs stay semistable with slope scaled by l
    SplitBundle even = make_bundle(p, std::vector<long>(rank, degrees.front()));
    SplitBundle trunc = apply_functor(even, {Functor::Kind::truncated, l});
    CHECK(is_semistable(trunc));
    CHECK(slope(trunc) == Rat(l) * slope(even));

    // tensor of semistable bundles adds slopes
    SplitBundle other = make_bundle(p, std::vector<long>(rng.range(1, 3), rng.range(-4, 4)));
    SplitBundle prod = tensor_bundle(even, other);
    CHECK(is_semistable(prod));
    CHECK(slope(prod) == slope(even) + slope(other));
  }
}

}  // TEST_SUITE
