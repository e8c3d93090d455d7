#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace instab {

using BigInt = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<long>;
using RatVec = std::vector<Rat>;

// Thrown when a configurable resource cap is hit; the CLI maps it to exit 4.
class budget_error : public std::runtime_error {
public:
  budget_error(std::string budget, const std::string& what)
      : std::runtime_error(what), budget_(std::move(budget)) {}
  const std::string& budget() const { return budget_; }

private:
  std::string budget_;
};

// File-system failures; the CLI maps it to exit 3.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t default_seed = 1729;

Rat make_rat(const BigInt& num, const BigInt& den);
std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

// binomial(n, k) with the convention that out-of-range arguments give 0
BigInt binomial(const BigInt& n, long k);
BigInt binomial_ll(long n, long k);
BigInt pow_big(const BigInt& base, unsigned long exp);
bool is_prime(long p);
long require_prime(long p, const std::string& field);

// Deterministic 64-bit generator (SplitMix64); identical streams on every
// platform, which keeps seeded sampling byte-reproducible.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace instab
