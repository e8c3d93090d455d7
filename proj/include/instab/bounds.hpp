#pragma once

#include <optional>
#include <string>

#include "instab/common.hpp"

namespace instab {

// Tightness data for a minimal-exponent answer. When the compared powers fit
// the materialization budget both sides are stored and the strictness of the
// previous power is certified; otherwise only the log-bracketing precision
// that decided the comparison is recorded.
struct BoundCertificate {
  bool exact = true;
  BigInt base = 0;      // the witness term's base
  BigInt exponent = 0;  // the witness term's binomial exponent
  BigInt p_power = 0;       // p^n_min (exact mode)
  BigInt target = 0;        // base^exponent (exact mode)
  BigInt p_power_prev = 0;  // p^(n_min-1), when n_min > 0 (exact mode)
  unsigned long log_precision = 0;  // bracket denominator (bracketed mode)
};

struct BoundResult {
  BigInt n_min = 0;
  std::optional<long> witness_r;
  std::optional<long> witness_l;
  BoundCertificate certificate;
};

// Smallest N >= 0 with p^N >= base^exponent, by exact big-integer comparison
// when base^exponent fits the bit budget and by exact log bracketing
// otherwise (the only exact-tie case, base a power of p, is special-cased).
BoundResult minimal_power_bound(long p, const BigInt& base, const BigInt& exponent,
                                long bit_budget = 1 << 20);

BoundResult single_rep_bound(long p, long m, long d);
BoundResult extension_bound(long p, long m, long d);
BoundResult truncated_power_bound(long p, int n, int l);
BoundResult frobenius_image_bound(long p, int n, long m, long d);

// Rank of the image sheaf under the standard functors on a rank-n input.
BigInt functor_rank(const std::string& kind, int n, int d);

}  // namespace instab
