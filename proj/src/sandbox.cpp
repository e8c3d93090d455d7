#include "instab/sandbox.hpp"

#include <algorithm>
#include <functional>

namespace instab {

SplitBundle make_bundle(long p, std::vector<long> degrees) {
  if (degrees.empty()) throw std::invalid_argument("degrees: a bundle needs at least one summand");
  if (p != 0) require_prime(p, "p");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return SplitBundle{p, std::move(degrees)};
}

int bundle_rank(const SplitBundle& e) { return static_cast<int>(e.degrees.size()); }

long bundle_degree(const SplitBundle& e) {
  long total = 0;
  for (long d : e.degrees) total += d;
  return total;
}

Rat slope(const SplitBundle& e) { return make_rat(bundle_degree(e), bundle_rank(e)); }

bool is_semistable(const SplitBundle& e) {
  return e.degrees.front() == e.degrees.back();
}

SplitBundle frobenius_pullback(const SplitBundle& e, int times) {
  if (e.p < 2) throw std::invalid_argument("p: Frobenius needs a positive characteristic");
  if (times < 0) throw std::invalid_argument("times: must be nonnegative");
  BigInt scale = pow_big(BigInt(e.p), static_cast<unsigned long>(times));
  std::vector<long> degrees;
  degrees.reserve(e.degrees.size());
  for (long d : e.degrees) {
    BigInt scaled = scale * d;
    if (!scaled.fits_slong_p()) throw std::invalid_argument("times: scaled degree out of range");
    degrees.push_back(scaled.get_si());
  }
  return make_bundle(e.p, std::move(degrees));
}

SplitBundle apply_functor(const SplitBundle& e, const Functor& f) {
  int n = bundle_rank(e);
  if (f.kind == Functor::Kind::truncated) {
    if (e.p < 2) throw std::invalid_argument("p: truncated functor needs a positive characteristic");
    if (f.degree < 1 || static_cast<long>(f.degree) > static_cast<long>(n) * (e.p - 1))
      throw std::invalid_argument("l: must satisfy 1 <= l <= rank*(p-1)");
  }
  std::vector<Weight> weights = functor_weights(f, n, e.p);
  std::vector<long> degrees;
  degrees.reserve(weights.size());
  for (const Weight& w : weights) {
    long acc = 0;
    for (int i = 0; i < n; ++i) acc += w[i] * e.degrees[i];
    degrees.push_back(acc);
  }
  return make_bundle(e.p, std::move(degrees));
}

SplitBundle tensor_bundle(const SplitBundle& e, const SplitBundle& f) {
  if (e.p != f.p) throw std::invalid_argument("p: tensor factors live in different characteristics");
  std::vector<long> degrees;
  degrees.reserve(e.degrees.size() * f.degrees.size());
  for (long a : e.degrees)
    for (long b : f.degrees) degrees.push_back(a + b);
  return make_bundle(e.p, std::move(degrees));
}

std::vector<std::pair<Rat, int>> hn_profile(const SplitBundle& e) {
  std::vector<std::pair<Rat, int>> profile;
  for (long d : e.degrees) {
    if (!profile.empty() && profile.back().first == Rat(d)) {
      ++profile.back().second;
    } else {
      profile.emplace_back(Rat(d), 1);
    }
  }
  return profile;
}

}  // namespace instab
