#pragma once

#include <utility>
#include <vector>

#include "instab/common.hpp"
#include "instab/repcalc.hpp"

namespace instab {

// A direct sum of line bundles on the projective line, recorded as the
// multiset of its twists. Everything about such bundles is decided by
// integer arithmetic: semistable iff all twists agree.
struct SplitBundle {
  long p = 0;                  // characteristic; needed by Frobenius and the truncated functor
  std::vector<long> degrees;   // kept sorted decreasing
};

SplitBundle make_bundle(long p, std::vector<long> degrees);

int bundle_rank(const SplitBundle& e);
long bundle_degree(const SplitBundle& e);
Rat slope(const SplitBundle& e);
bool is_semistable(const SplitBundle& e);
SplitBundle frobenius_pullback(const SplitBundle& e, int times);

// Image of the bundle under a standard functor: one line summand per functor
// weight, of degree <weight, twists>.
SplitBundle apply_functor(const SplitBundle& e, const Functor& f);
SplitBundle tensor_bundle(const SplitBundle& e, const SplitBundle& f);

// Distinct slopes in decreasing order with the rank of each stage.
std::vector<std::pair<Rat, int>> hn_profile(const SplitBundle& e);

}  // namespace instab
