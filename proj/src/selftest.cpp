#include "instab/selftest.hpp"

#include <array>
#include <ostream>
#include <string>

#include "instab/bounds.hpp"
#include "instab/kempf.hpp"
#include "instab/minnorm.hpp"
#include "instab/sandbox.hpp"
#include "instab/truncsym.hpp"

namespace instab {

State random_state(SplitMix64& rng, int max_n, int max_size, long max_abs) {
  int n = static_cast<int>(rng.range(1, max_n));
  int count = static_cast<int>(rng.range(1, max_size));
  std::vector<Weight> weights;
  weights.reserve(count);
  for (int i = 0; i < count; ++i) {
    Weight w(n);
    for (int k = 0; k < n; ++k) w[k] = rng.range(-max_abs, max_abs);
    weights.push_back(std::move(w));
  }
  return make_state(n, std::move(weights));
}

namespace {

struct Suite {
  std::ostream& out;
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "[ok] " : "[FAIL] ") << name << " (" << detail << ")\n";
    if (!ok) ++failures;
  }
};

void dimension_grid(Suite& suite) {
  int cells = 0;
  bool ok = true;
  for (long p : {2L, 3L, 5L}) {
    for (int n = 1; n <= 4 && ok; ++n) {
      for (int l = 0; l <= n * (p - 1) && ok; ++l) {
        ++cells;
        TlDimReport report = tl_dim_report(p, n, l);
        if (!report.corrected_matches) ok = false;
        if (BigInt(bounded_compositions(n, l, p).size()) != report.enumerated) ok = false;
        if (l < p && report.enumerated != binomial_ll(n + l - 1, l)) ok = false;
      }
    }
  }
  // the variant closed form must disagree at p=3, n=2, l=4
  if (tl_dim_report(3, 2, 4).closed_printed != -3) ok = false;
  suite.report("dimension-grid", ok, std::to_string(cells) + " cells");
}

void invariants_grid(Suite& suite) {
  int cells = 0;
  bool ok = true;
  for (long p : {2L, 3L, 5L}) {
    for (int n = 1; n <= 4 && ok; ++n) {
      for (int l = 1; l <= n * (p - 1) && ok; ++l) {
        long words = 1;
        bool in_budget = true;
        for (int i = 0; i < l; ++i) {
          words *= n;
          if (words > 1024) in_budget = false;
        }
        if (!in_budget) continue;
        ++cells;
        BigInt inv = invariants_dim(n, l, p, 1024);
        if (inv != binomial_ll(n + l - 1, l)) ok = false;
        if (l < p && inv != tl_dim(p, n, l)) ok = false;
      }
    }
  }
  suite.report("invariants-grid", ok, std::to_string(cells) + " cells");
}

void minnorm_agreement(Suite& suite) {
  SplitMix64 rng(default_seed);
  bool ok = true;
  const int rounds = 60;
  for (int round = 0; round < rounds && ok; ++round) {
    State s = random_state(rng, 4, 8, 5);
    RatVec fast = min_norm_point(s.weights);
    RatVec slow = min_norm_bruteforce(s.weights);
    if (fast != slow) ok = false;
  }
  suite.report("minnorm-oracle-agreement", ok, std::to_string(rounds) + " states");
}

void bound_examples(Suite& suite) {
  bool ok = true;
  ok = ok && single_rep_bound(2, 3, 2).n_min == 3;
  ok = ok && extension_bound(2, 3, 2).n_min == 6;
  ok = ok && extension_bound(2, 3, 2).witness_r == 2;
  ok = ok && truncated_power_bound(2, 2, 2).n_min == 1;
  ok = ok && truncated_power_bound(2, 2, 1).n_min == 1;
  ok = ok && frobenius_image_bound(2, 1, 2, 1).n_min == 2;
  suite.report("bound-examples", ok, "6 values");
}

void bundle_identities(Suite& suite) {
  SplitMix64 rng(default_seed);
  bool ok = true;
  const int rounds = 25;
  for (int round = 0; round < rounds && ok; ++round) {
    long p = std::array<long, 3>{2, 3, 5}[rng.below(3)];
    int rank = static_cast<int>(rng.range(1, 4));
    std::vector<long> degrees(rank);
    for (long& d : degrees) d = rng.range(-5, 5);
    SplitBundle e = make_bundle(p, std::move(degrees));
    int times = static_cast<int>(rng.range(0, 4));
    SplitBundle pulled = frobenius_pullback(e, times);
    if (slope(pulled) != slope(e) * Rat(pow_big(BigInt(p), times))) ok = false;
    long l_max = rank * (p - 1);
    int l = static_cast<int>(rng.range(1, l_max));
    SplitBundle trunc = apply_functor(e, {Functor::Kind::truncated, l});
    if (BigInt(bundle_rank(trunc)) != tl_dim(p, rank, l)) ok = false;
    SplitBundle even = make_bundle(p, std::vector<long>(rank, e.degrees.front()));
    SplitBundle trunc_even = apply_functor(even, {Functor::Kind::truncated, l});
    if (!is_semistable(trunc_even)) ok = false;
    if (slope(trunc_even) != Rat(l) * slope(even)) ok = false;
  }
  suite.report("bundle-identities", ok, std::to_string(rounds) + " bundles");
}

}  // namespace

int run_selftest(std::ostream& out) {
  Suite suite{out};
  dimension_grid(suite);
  invariants_grid(suite);
  minnorm_agreement(suite);
  bound_examples(suite);
  bundle_identities(suite);
  out << "selftest: " << (5 - suite.failures) << "/5 suites passed\n";
  return suite.failures;
}

}  // namespace instab
