#include "instab/kempf.hpp"

namespace instab {

InstabilityReport instability(const State& s) {
  InstabilityReport report;
  report.min_norm_point = min_norm_point(s.weights);

  bool zero = true;
  for (const Rat& c : report.min_norm_point)
    if (sgn(c) != 0) zero = false;
  if (zero) return report;

  report.semistable = false;
  Cochar lambda = primitive(report.min_norm_point);
  MuValue mu = mu_of(lambda, s);
  Rat wnorm(0);
  for (const Rat& c : report.min_norm_point) wnorm += c * c;
  report.mu_sq = wnorm;
  report.m = mu.m;
  report.lambda = lambda;
  report.parabolic = parabolic_of(lambda);
  // m / |lambda| must equal |w|, i.e. m^2 = mu_sq * |lambda|^2
  if (Rat(mu.m * mu.m) != wnorm * Rat(mu.norm_sq))
    throw std::logic_error("instability: destabilizer certificate failed");
  return report;
}

namespace {

State support_state(const std::vector<Weight>& basis_weights, const RatVec& coords,
                    const RatField&) {
  return state_of_point(basis_weights, coords);
}

State support_state(const std::vector<Weight>& basis_weights,
                    const std::vector<GF::Elem>& coords, const GF& field) {
  return state_of_point(basis_weights, coords, field);
}

template <class F, class Sampler>
ConjugateSearchResult<F> search_impl(const RepSpec& rep, const F& field,
                                     const std::vector<typename F::Elem>& coords, int samples,
                                     std::uint64_t seed, Sampler sampler) {
  if (samples < 1) throw std::invalid_argument("samples: must be at least 1");
  if (static_cast<int>(coords.size()) != rep.m)
    throw std::invalid_argument("point: expected " + std::to_string(rep.m) +
                                " coordinates, got " + std::to_string(coords.size()));
  bool nonzero = false;
  for (const auto& c : coords)
    if (!field.is_zero(c)) nonzero = true;
  if (!nonzero) throw std::invalid_argument("point: zero vector has no state");

  std::vector<Weight> basis_weights = diagonal_weights(rep);
  SplitMix64 rng(seed);

  ConjugateSearchResult<F> result;
  result.samples = samples;
  result.witness = identity_mat(field, rep.n);

  for (int s = 0; s < samples; ++s) {
    Mat<typename F::Elem> g = (s == 0) ? identity_mat(field, rep.n) : sampler(field, rep.n, rng);
    auto rho = evaluate(rep, field, g);
    auto moved = mat_vec(field, rho, coords);
    State state = support_state(basis_weights, moved, field);
    InstabilityReport report = instability(state);
    bool better = (s == 0) || (!report.semistable &&
                               (result.best.semistable || report.mu_sq > result.best.mu_sq));
    if (better) {
      result.best = std::move(report);
      result.witness = std::move(g);
      result.best_sample = s;
    }
  }
  return result;
}

template <class F, class Draw>
Mat<typename F::Elem> sample_invertible(const F& field, int n, SplitMix64& rng, Draw draw) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    Mat<typename F::Elem> g(n, n, field.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = draw(field, rng);
    if (!field.is_zero(field_det(field, g))) return g;
  }
  throw budget_error("retry-budget",
                     "conjugate search found no invertible sample within 400 retries");
}

Mat<Rat> sample_rat(const RatField& field, int n, SplitMix64& rng) {
  return sample_invertible(field, n, rng, [](const RatField& f, SplitMix64& r) {
    return f.from_int(r.range(-3, 3));
  });
}

Mat<GF::Elem> sample_gf(const GF& field, int n, SplitMix64& rng) {
  return sample_invertible(field, n, rng,
                           [](const GF& f, SplitMix64& r) { return f.sample(r); });
}

}  // namespace

int search_extension_degree(long p) {
  long size = p;
  for (int e = 1; e <= GF::max_degree; ++e, size *= p)
    if (size >= 5) return e;
  return GF::max_degree;
}

ConjugateSearchResult<RatField> conjugate_instability_search(const RepSpec& rep,
                                                             const RatVec& coords, int samples,
                                                             std::uint64_t seed) {
  if (rep.p != 0)
    throw std::invalid_argument("point: rational coordinates on a mod-p representation");
  RatField field;
  return search_impl(rep, field, coords, samples, seed,
                     [](const RatField& f, int n, SplitMix64& r) { return sample_rat(f, n, r); });
}

ConjugateSearchResult<GF> conjugate_instability_search(const RepSpec& rep,
                                                       const std::vector<GF::Elem>& coords,
                                                       const GF& field, int samples,
                                                       std::uint64_t seed) {
  if (rep.p != field.characteristic())
    throw std::invalid_argument("point: field characteristic does not match the representation");
  return search_impl(rep, field, coords, samples, seed,
                     [](const GF& f, int n, SplitMix64& r) { return sample_gf(f, n, r); });
}

}  // namespace instab
