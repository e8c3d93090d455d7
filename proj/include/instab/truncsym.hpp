#pragma once

#include <utility>
#include <vector>

#include "instab/common.hpp"

namespace instab {

// floor(l/p): the unique q with 0 <= l - q*p < p
long l_p(long l, long p);

// Compositions of l into n nonnegative parts, ascending lexicographic order.
std::vector<std::vector<int>> compositions(int n, int l);

// Compositions with every part at most p-1; empty when l > n(p-1).
std::vector<std::vector<int>> bounded_compositions(int n, int l, long p);

// Inclusion-exclusion count of bounded compositions (no materialization).
BigInt count_bounded_compositions(int n, int l, long p);

// Two printed variants of the closed form; they differ in the binomial's
// arguments and only one of them matches enumeration (e.g. at p=3, n=2, l=4
// the variant below labelled "printed" yields -3 while enumeration gives 1).
BigInt tl_dim_closed_corrected(long p, int n, int l);
BigInt tl_dim_closed_printed(long p, int n, int l);

struct TlDimReport {
  BigInt enumerated;
  BigInt closed_printed;
  BigInt closed_corrected;
  bool printed_matches = false;
  bool corrected_matches = false;
};

TlDimReport tl_dim_report(long p, int n, int l);

// The dimension used by the rest of the library (closed corrected form; the
// grid tests pin it to enumeration).
BigInt tl_dim(long p, int n, int l);

struct SparseVec {
  // (tensor-word index, coefficient) pairs, index-sorted
  std::vector<std::pair<long, long>> entries;
};

struct TruncatedBasis {
  long p = 0;
  int n = 0, l = 0;
  std::vector<std::vector<int>> index;  // bounded compositions, ascending lex
  std::vector<SparseVec> vectors;       // symmetrized vectors in the n^l tensor power, mod p
};

// Symmetrized basis of the truncated power inside the l-fold tensor power:
// for a composition k the vector carries coefficient prod(k_i!) mod p on
// every word of content k. Compositions with a part >= p vanish mod p and
// are omitted.
TruncatedBasis tl_basis(int n, int l, long p, long budget = 0);
long tl_basis_rank(const TruncatedBasis& basis);

// Dimension over F_p of the fixed space of the symmetric-group action on the
// tensor power, computed as the kernel of the stacked operators (sigma - id)
// over the adjacent transpositions. Independent of the basis construction.
BigInt invariants_dim(int n, int l, long p, long budget = 0);

// n^l cap for tensor-power computations; INSTAB_TENSOR_BUDGET overrides.
long tensor_budget();

}  // namespace instab
