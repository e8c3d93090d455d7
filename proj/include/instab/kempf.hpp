#pragma once

#include <optional>

#include "instab/minnorm.hpp"
#include "instab/repcalc.hpp"
#include "instab/states.hpp"

namespace instab {

// Torus instability data of a state. When the state is unstable the
// destabilizing cocharacter is the primitive vector on the ray of the
// min-norm point, and mu_sq equals the squared norm of that point.
struct InstabilityReport {
  bool semistable = true;
  RatVec min_norm_point;  // exact; the zero vector iff semistable
  std::optional<Cochar> lambda;
  BigInt m = 0;
  Rat mu_sq = 0;
  std::optional<ParabolicDesc> parabolic;
};

InstabilityReport instability(const State& s);

template <class F>
struct ConjugateSearchResult {
  InstabilityReport best;
  Mat<typename F::Elem> witness;  // group element whose translate realized the best report
  int best_sample = 0;            // 0 is the identity sample
  int samples = 0;
};

// Heuristic full-group instability certificate: translate the point by
// seeded pseudorandom invertible matrices (the identity is always sample 0),
// measure torus instability of each translate, and keep the best. A positive
// mu_sq certifies instability of the point for the whole group; a semistable
// answer certifies nothing.
ConjugateSearchResult<RatField> conjugate_instability_search(const RepSpec& rep,
                                                             const RatVec& coords, int samples,
                                                             std::uint64_t seed);
ConjugateSearchResult<GF> conjugate_instability_search(const RepSpec& rep,
                                                       const std::vector<GF::Elem>& coords,
                                                       const GF& field, int samples,
                                                       std::uint64_t seed);

// Extension degree used to sample group entries over a finite coordinate
// field: the smallest e <= 3 with p^e >= 5, so tiny prime fields still offer
// a usable supply of invertible matrices.
int search_extension_degree(long p);

}  // namespace instab
