#include "instab/minnorm.hpp"

#include <algorithm>

#include "instab/linalg.hpp"

namespace instab {

namespace {

std::vector<Weight> deduplicate(std::vector<Weight> points) {
  if (points.empty()) throw std::invalid_argument("min-norm point of an empty set");
  std::size_t len = points.front().size();
  for (const Weight& w : points)
    if (w.size() != len) throw std::invalid_argument("min-norm input has mixed lengths");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Rat dot_rat(const RatVec& a, const RatVec& b) {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot_mixed(const RatVec& a, const Weight& b) {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Rat(BigInt(b[i]));
  return acc;
}

BigInt dot_int(const Weight& a, const Weight& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += BigInt(a[i]) * BigInt(b[i]);
  return acc;
}

// Minimizer of the norm over the affine hull of the selected points, via the
// bordered Gram system  [G 1; 1^T 0] (mu, alpha) = (0, 1).  The system is
// nonsingular exactly when the points are affinely independent.
std::optional<RatVec> affine_minimizer(const std::vector<Weight>& points,
                                       const std::vector<int>& sel) {
  int k = static_cast<int>(sel.size());
  Mat<Rat> sys(k + 1, k + 1, Rat(0));
  RatVec rhs(k + 1, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sys.at(i, j) = Rat(dot_int(points[sel[i]], points[sel[j]]));
    sys.at(i, k) = 1;
    sys.at(k, i) = 1;
  }
  rhs[k] = 1;
  auto solved = solve_rational(sys, rhs);
  if (!solved) return std::nullopt;
  solved->pop_back();  // drop the multiplier
  return solved;
}

RatVec combine(const std::vector<Weight>& points, const std::vector<int>& sel,
               const RatVec& coeff) {
  RatVec x(points.front().size(), Rat(0));
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t d = 0; d < x.size(); ++d) x[d] += coeff[i] * Rat(BigInt(points[sel[i]][d]));
  return x;
}

}  // namespace

RatVec min_norm_point(const std::vector<Weight>& input) {
  std::vector<Weight> points = deduplicate(input);
  std::size_t dim = points.front().size();

  // start from the shortest input point
  int start = 0;
  BigInt best_norm = dot_int(points[0], points[0]);
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    BigInt nn = dot_int(points[i], points[i]);
    if (nn < best_norm) {
      best_norm = nn;
      start = i;
    }
  }
  std::vector<int> corral{start};
  RatVec coeff{Rat(1)};
  RatVec x(dim, Rat(0));
  for (std::size_t d = 0; d < dim; ++d) x[d] = Rat(BigInt(points[start][d]));

  // corrals never repeat and the norm strictly decreases per major cycle, so
  // the loop is finite; the guard only trips on an implementation bug
  for (long guard = 0; guard < 1'000'000; ++guard) {
    Rat xx = dot_rat(x, x);
    int entering = -1;
    Rat entering_value;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      Rat v = dot_mixed(x, points[i]);
      if (v < xx && (entering < 0 || v < entering_value)) {
        entering = i;
        entering_value = v;
      }
    }
    if (entering < 0) return x;  // <x, q> >= <x, x> for every q: optimal

    corral.push_back(entering);
    coeff.push_back(Rat(0));

    for (;;) {
      auto mu = affine_minimizer(points, corral);
      if (!mu) throw std::logic_error("min_norm_point: degenerate corral");
      bool interior = true;
      for (const Rat& c : *mu)
        if (sgn(c) <= 0) interior = false;
      if (interior) {
        coeff = *mu;
        x = combine(points, corral, coeff);
        break;
      }
      // step toward the affine minimizer until the first coordinate hits zero
      Rat theta(1);
      bool found = false;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (sgn((*mu)[i]) > 0) continue;
        Rat t = coeff[i] / (coeff[i] - (*mu)[i]);
        if (!found || t < theta) {
          theta = t;
          found = true;
        }
      }
      std::vector<int> next_corral;
      RatVec next_coeff;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        Rat c = coeff[i] + theta * ((*mu)[i] - coeff[i]);
        if (sgn(c) != 0) {
          next_corral.push_back(corral[i]);
          next_coeff.push_back(c);
        }
      }
      corral = std::move(next_corral);
      coeff = std::move(next_coeff);
      x = combine(points, corral, coeff);
    }
  }
  throw std::logic_error("min_norm_point failed to converge");
}

RatVec min_norm_bruteforce(const std::vector<Weight>& input, int max_points, int max_dim) {
  std::vector<Weight> points = deduplicate(input);
  int count = static_cast<int>(points.size());
  int dim = static_cast<int>(points.front().size());
  if (count > max_points)
    throw budget_error("oracle-cap", "min_norm_bruteforce: " + std::to_string(count) +
                                         " points exceed the cap of " + std::to_string(max_points));
  if (dim > max_dim)
    throw budget_error("oracle-cap", "min_norm_bruteforce: dimension " + std::to_string(dim) +
                                         " exceeds the cap of " + std::to_string(max_dim));

  std::optional<RatVec> best;
  Rat best_norm;
  int max_size = std::min(count, dim + 1);
  std::vector<int> sel;
  auto consider = [&](const std::vector<int>& subset) {
    auto mu = affine_minimizer(points, subset);
    if (!mu) return;  // affinely dependent subset: redundant, skip
    for (const Rat& c : *mu)
      if (sgn(c) < 0) return;  // projection falls outside the simplex
    RatVec y = combine(points, subset, *mu);
    Rat nn = dot_rat(y, y);
    if (!best || nn < best_norm) {
      best = y;
      best_norm = nn;
    }
  };
  // enumerate subsets of each size
  for (int size = 1; size <= max_size; ++size) {
    sel.assign(size, 0);
    for (int i = 0; i < size; ++i) sel[i] = i;
    for (;;) {
      consider(sel);
      int i = size - 1;
      while (i >= 0 && sel[i] == count - size + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  if (!best) throw std::logic_error("min_norm_bruteforce found no candidate");
  return *best;
}

}  // namespace instab
