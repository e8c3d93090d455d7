#include "instab/states.hpp"

#include <algorithm>

#include "instab/minnorm.hpp"

namespace instab {

State make_state(int n, std::vector<Weight> weights, long characteristic) {
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (weights.empty()) throw std::invalid_argument("weights: a state must be nonempty");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (static_cast<int>(weights[i].size()) != n)
      throw std::invalid_argument("weights[" + std::to_string(i) + "]: expected length " +
                                  std::to_string(n) + ", got " + std::to_string(weights[i].size()));
  if (characteristic != 0) require_prime(characteristic, "p");
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  return State{n, characteristic, std::move(weights)};
}

namespace {

template <class IsZero, class CoordList>
State support(const std::vector<Weight>& basis_weights, const CoordList& coords, IsZero is_zero,
              long characteristic) {
  if (basis_weights.size() != coords.size())
    throw std::invalid_argument("coords: expected " + std::to_string(basis_weights.size()) +
                                " coordinates, got " + std::to_string(coords.size()));
  if (basis_weights.empty()) throw std::invalid_argument("basis_weights: empty basis");
  std::vector<Weight> present;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) present.push_back(basis_weights[i]);
  if (present.empty()) throw std::invalid_argument("coords: zero vector has no state");
  return make_state(static_cast<int>(basis_weights.front().size()), std::move(present),
                    characteristic);
}

}  // namespace

State state_of_point(const std::vector<Weight>& basis_weights, const RatVec& coords) {
  return support(basis_weights, coords, [](const Rat& q) { return sgn(q) == 0; }, 0);
}

State state_of_point(const std::vector<Weight>& basis_weights,
                     const std::vector<GF::Elem>& coords, const GF& field) {
  return support(basis_weights, coords, [&](const GF::Elem& c) { return field.is_zero(c); },
                 field.characteristic());
}

MuValue mu_of(const Cochar& lambda, const State& s) {
  BigInt nsq = norm_sq(lambda);
  if (nsq == 0) throw std::invalid_argument("lambda: zero cocharacter has no mu value");
  BigInt m = pairing(lambda, s.weights.front());
  for (std::size_t i = 1; i < s.weights.size(); ++i) m = std::min(m, pairing(lambda, s.weights[i]));
  Rat mu_sq = make_rat(m * m, nsq);
  if (sgn(m) < 0) mu_sq = -mu_sq;
  return MuValue{m, nsq, mu_sq};
}

bool is_torus_semistable(const State& s) {
  RatVec w = min_norm_point(s.weights);
  for (const Rat& c : w)
    if (sgn(c) != 0) return false;
  return true;
}

State permuted(const State& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.n) throw std::invalid_argument("permutation length mismatch");
  std::vector<Weight> out;
  out.reserve(s.weights.size());
  for (const Weight& w : s.weights) {
    Weight moved(s.n, 0);
    for (int i = 0; i < s.n; ++i) moved[perm[i]] = w[i];
    out.push_back(std::move(moved));
  }
  return make_state(s.n, std::move(out), s.characteristic);
}

}  // namespace instab
