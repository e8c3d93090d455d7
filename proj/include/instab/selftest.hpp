#pragma once

#include <iosfwd>

#include "instab/common.hpp"
#include "instab/states.hpp"

namespace instab {

// Seeded random state with n in 1..max_n, up to max_size weights, entries in
// [-max_abs, max_abs]; used by the selftest and the verification suites.
State random_state(SplitMix64& rng, int max_n, int max_size, long max_abs);

// Runs the built-in consistency suites (dimension grid, invariants audit,
// min-norm oracle agreement, bound examples, bundle identities) and prints
// one line per suite. Returns the number of failing suites. The output is
// fully deterministic.
int run_selftest(std::ostream& out);

}  // namespace instab
