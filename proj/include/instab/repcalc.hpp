#pragma once

#include <string>
#include <vector>

#include "instab/gf.hpp"
#include "instab/lattice.hpp"
#include "instab/linalg.hpp"
#include "instab/poly.hpp"
#include "instab/truncsym.hpp"

namespace instab {

// A rational representation of GL_n on an m-dimensional space, given as an
// m x m matrix of regular functions f_ij / det^{a_ij} in the n^2 matrix
// coordinates T_ij. Numerators are kept coprime to det whenever a_ij > 0.
struct RepSpec {
  int n = 0;
  int m = 0;
  long p = 0;
  std::vector<std::vector<Poly>> entries;
  std::vector<std::vector<int>> denom;
};

struct DegreeProfile {
  long d = 0;
  long a = 0;
  bool is_polynomial = true;
};

// T_ij (0-based) -> variable slot, row major
inline int var_index(int i, int j, int n) { return i * n + j; }

Poly det_poly(int n, long p);

RepSpec standard_rep(int n, long p);
RepSpec det_rep(int n, long p);
RepSpec det_inverse_rep(int n, long p);
RepSpec adjoint_rep(int n, long p);
RepSpec sym_rep(int n, int l, long p);

// Action on the truncated symmetric power, in the symmetrized basis indexed
// by bounded compositions (ascending lex). Built by acting on each basis
// vector with a generic matrix and reading off the coefficient of one
// representative tensor word per target composition, so no change-of-basis
// matrix is ever inverted.
RepSpec truncated_sym_rep(int n, long p, int l);

DegreeProfile rep_degree(const RepSpec& spec);
RepSpec tensor_product(const RepSpec& s1, const RepSpec& s2);

// Lift to the r-th exterior power: entries are the r x r minors of the entry
// matrix, rows and columns indexed by r-element subsets in lexicographic
// order.
RepSpec wedge_lift(const RepSpec& spec, int r);

struct Functor {
  enum class Kind { tensor_power, sym, wedge, truncated };
  Kind kind;
  int degree = 1;  // tensor/sym/truncated exponent l, or wedge rank r
};

// Weights of the standard functor bases, aligned with the basis order used
// by the corresponding representation constructors.
std::vector<Weight> functor_weights(const Functor& f, int n, long p = 0);

void validate_rep(const RepSpec& spec);

template <class F>
Mat<typename F::Elem> evaluate(const RepSpec& spec, const F& field,
                               const Mat<typename F::Elem>& g) {
  if (g.rows != spec.n || g.cols != spec.n)
    throw std::invalid_argument("evaluate: expected a " + std::to_string(spec.n) + "x" +
                                std::to_string(spec.n) + " matrix");
  if (field.characteristic() != spec.p)
    throw std::invalid_argument("evaluate: field characteristic mismatch");
  std::vector<typename F::Elem> values;
  values.reserve(static_cast<std::size_t>(spec.n) * spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) values.push_back(g.at(i, j));

  int max_a = 0;
  for (const auto& row : spec.denom)
    for (int a : row) max_a = std::max(max_a, a);
  std::vector<typename F::Elem> inv_det_pow{field.one()};
  if (max_a > 0) {
    auto inv_det = field.inv(field_det(field, g));
    for (int e = 1; e <= max_a; ++e) inv_det_pow.push_back(field.mul(inv_det_pow.back(), inv_det));
  }

  Mat<typename F::Elem> out(spec.m, spec.m, field.zero());
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j) {
      auto v = spec.entries[i][j].evaluate(field, values);
      int a = spec.denom[i][j];
      out.at(i, j) = a > 0 ? field.mul(v, inv_det_pow[a]) : v;
    }
  return out;
}

// Torus weights of the basis, read off from the action of diagonal matrices;
// throws when the basis is not a simultaneous eigenbasis.
std::vector<Weight> diagonal_weights(const RepSpec& spec);

}  // namespace instab
