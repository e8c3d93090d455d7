#pragma once

#include <vector>

#include "instab/gf.hpp"
#include "instab/lattice.hpp"

namespace instab {

// The support of a point in a representation: the set of torus weights at
// which the point has a nonzero coordinate. The coordinate field's
// characteristic is kept so the conjugate search knows where to sample
// group elements (0 means the rationals).
struct State {
  int n = 0;
  long characteristic = 0;
  std::vector<Weight> weights;  // sorted, deduplicated, nonempty
};

State make_state(int n, std::vector<Weight> weights, long characteristic = 0);

struct MuValue {
  BigInt m;             // minimum pairing over the state
  BigInt norm_sq;       // squared norm of the cocharacter
  Rat mu_sq_signed;     // sign(m) * m^2 / norm_sq
};

State state_of_point(const std::vector<Weight>& basis_weights, const RatVec& coords);
State state_of_point(const std::vector<Weight>& basis_weights,
                     const std::vector<GF::Elem>& coords, const GF& field);

MuValue mu_of(const Cochar& lambda, const State& s);

// True iff the origin lies in the convex hull of the state, decided exactly
// via the min-norm computation.
bool is_torus_semistable(const State& s);

// Relabel coordinates by a permutation (perm[i] = image of index i, 0-based);
// used by the equivariance checks.
State permuted(const State& s, const std::vector<int>& perm);

}  // namespace instab
