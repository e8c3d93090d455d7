#pragma once

#include <utility>
#include <vector>

#include "instab/common.hpp"

namespace instab {

// Characters and cocharacters of the diagonal torus of GL_n, as integer
// vectors of length n.
using Weight = IntVec;
using Cochar = IntVec;

// The parabolic subgroup attached to a cocharacter: entry (i,j) of a group
// element must vanish exactly when lambda_i < lambda_j. Indices are 1-based.
struct ParabolicDesc {
  std::vector<std::pair<int, int>> zero_pattern;  // sorted lexicographically
  std::vector<int> block_sizes;                   // multiplicities of distinct values, decreasing value order

  bool operator==(const ParabolicDesc&) const = default;
};

BigInt pairing(const Cochar& lambda, const Weight& chi);
BigInt norm_sq(const Cochar& lambda);

// The integer vector with coprime entries on the positive ray through
// `direction`; rejects the zero vector.
Cochar primitive(const RatVec& direction);

ParabolicDesc parabolic_of(const Cochar& lambda);

}  // namespace instab
