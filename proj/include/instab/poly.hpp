#pragma once

#include <map>
#include <optional>
#include <vector>

#include "instab/common.hpp"

namespace instab {

// Sparse multivariate polynomial: exponent vector -> coefficient. The
// coefficient ring is F_p for p > 0 (coefficients kept in [0, p)) and the
// integers for p = 0. Term order is ascending lex on exponent vectors, which
// makes iteration, printing and serialization reproducible.
class Poly {
public:
  using Terms = std::map<std::vector<int>, BigInt>;

  Poly() = default;
  Poly(int nvars, long p) : nvars_(nvars), p_(p) {}

  static Poly constant(const BigInt& c, int nvars, long p);
  static Poly variable(int index, int nvars, long p);

  int nvars() const { return nvars_; }
  long characteristic() const { return p_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  void add_term(std::vector<int> exps, const BigInt& coeff);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;

  template <class F>
  typename F::Elem evaluate(const F& field, const std::vector<typename F::Elem>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
      throw std::invalid_argument("polynomial evaluation arity mismatch");
    std::vector<int> max_exp(nvars_, 0);
    for (const auto& [exps, coeff] : terms_)
      for (int v = 0; v < nvars_; ++v) max_exp[v] = std::max(max_exp[v], exps[v]);
    std::vector<std::vector<typename F::Elem>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      powers[v].resize(max_exp[v] + 1, field.one());
      for (int e = 1; e <= max_exp[v]; ++e) powers[v][e] = field.mul(powers[v][e - 1], values[v]);
    }
    auto acc = field.zero();
    for (const auto& [exps, coeff] : terms_) {
      auto term = field.from_big(coeff);
      for (int v = 0; v < nvars_; ++v)
        if (exps[v] > 0) term = field.mul(term, powers[v][exps[v]]);
      acc = field.add(acc, term);
    }
    return acc;
  }

private:
  int nvars_ = 0;
  long p_ = 0;
  Terms terms_;

  BigInt reduce(const BigInt& c) const;
  void check_compatible(const Poly& o) const;
};

// Exact division in the polynomial ring; nullopt when g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// Determinant of a square polynomial matrix by Laplace expansion along the
// first row; intended for the small minor sizes that arise here.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace instab
