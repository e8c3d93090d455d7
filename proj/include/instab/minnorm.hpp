#pragma once

#include <vector>

#include "instab/common.hpp"
#include "instab/lattice.hpp"

namespace instab {

// Exact minimum-norm point of the convex hull of a finite set of integer
// points, by Wolfe's major/minor cycle method over rationals. No tolerance
// is involved: the zero/nonzero verdict is exact.
RatVec min_norm_point(const std::vector<Weight>& points);

// Independent verifier: enumerate affinely independent subsets of size at
// most dim+1, project the origin onto each affine hull by an exact solve,
// keep projections with nonnegative barycentric coordinates, and return the
// best candidate. Deliberately shares no search state with Wolfe's method.
RatVec min_norm_bruteforce(const std::vector<Weight>& points, int max_points = 12,
                           int max_dim = 6);

}  // namespace instab
