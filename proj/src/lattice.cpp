#include "instab/lattice.hpp"

#include <algorithm>
#include <map>

namespace instab {

BigInt pairing(const Cochar& lambda, const Weight& chi) {
  if (lambda.size() != chi.size())
    throw std::invalid_argument("pairing: length mismatch (" + std::to_string(lambda.size()) +
                                " vs " + std::to_string(chi.size()) + ")");
  BigInt acc = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) acc += BigInt(lambda[k]) * BigInt(chi[k]);
  return acc;
}

BigInt norm_sq(const Cochar& lambda) {
  BigInt acc = 0;
  for (long v : lambda) acc += BigInt(v) * BigInt(v);
  return acc;
}

Cochar primitive(const RatVec& direction) {
  bool all_zero = true;
  for (const Rat& q : direction)
    if (sgn(q) != 0) all_zero = false;
  if (direction.empty() || all_zero) throw std::invalid_argument("primitive: zero direction");

  BigInt den_lcm = 1;
  for (const Rat& q : direction) {
    BigInt d = q.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> scaled;
  scaled.reserve(direction.size());
  BigInt g = 0;
  for (const Rat& q : direction) {
    BigInt v = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(std::move(v));
  }
  Cochar out;
  out.reserve(scaled.size());
  for (const BigInt& v : scaled) {
    BigInt r = v / g;
    if (!r.fits_slong_p()) throw std::invalid_argument("primitive: entries out of range");
    out.push_back(r.get_si());
  }
  return out;
}

ParabolicDesc parabolic_of(const Cochar& lambda) {
  ParabolicDesc desc;
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lambda[i] < lambda[j]) desc.zero_pattern.emplace_back(i + 1, j + 1);
  std::sort(desc.zero_pattern.begin(), desc.zero_pattern.end());

  std::map<long, int, std::greater<>> counts;
  for (long v : lambda) ++counts[v];
  for (const auto& [value, count] : counts) desc.block_sizes.push_back(count);
  return desc;
}

}  // namespace instab
