#include "instab/poly.hpp"

#include <algorithm>
#include <numeric>

namespace instab {

BigInt Poly::reduce(const BigInt& c) const {
  if (p_ == 0) return c;
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), BigInt(p_).get_mpz_t());
  return r;
}

void Poly::check_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_ || p_ != o.p_)
    throw std::invalid_argument("polynomial ring mismatch");
}

Poly Poly::constant(const BigInt& c, int nvars, long p) {
  Poly out(nvars, p);
  out.add_term(std::vector<int>(nvars, 0), c);
  return out;
}

Poly Poly::variable(int index, int nvars, long p) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Poly out(nvars, p);
  std::vector<int> exps(nvars, 0);
  exps[index] = 1;
  out.add_term(std::move(exps), 1);
  return out;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [exps, coeff] : terms_)
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  return deg;
}

void Poly::add_term(std::vector<int> exps, const BigInt& coeff) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("term arity mismatch");
  auto [it, inserted] = terms_.emplace(std::move(exps), reduce(coeff));
  if (!inserted) it->second = reduce(it->second + coeff);
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly out = *this;
  for (const auto& [exps, coeff] : o.terms_) out.add_term(exps, coeff);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly out(nvars_, p_);
  for (const auto& [exps, coeff] : terms_) out.add_term(exps, -coeff);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly out(nvars_, p_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> exps(nvars_);
      for (int v = 0; v < nvars_; ++v) exps[v] = ea[v] + eb[v];
      out.add_term(std::move(exps), ca * cb);
    }
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  Poly quotient(f.nvars(), f.characteristic());
  Poly rem = f;
  const auto& g_lead = *g.terms().rbegin();  // lex-leading term
  while (!rem.is_zero()) {
    const auto& r_lead = *rem.terms().rbegin();
    std::vector<int> exps(f.nvars());
    for (int v = 0; v < f.nvars(); ++v) {
      exps[v] = r_lead.first[v] - g_lead.first[v];
      if (exps[v] < 0) return std::nullopt;
    }
    BigInt coeff;
    if (f.characteristic() == 0) {
      if (!mpz_divisible_p(r_lead.second.get_mpz_t(), g_lead.second.get_mpz_t()))
        return std::nullopt;
      coeff = r_lead.second / g_lead.second;
    } else {
      BigInt inv;
      if (!mpz_invert(inv.get_mpz_t(), g_lead.second.get_mpz_t(),
                      BigInt(f.characteristic()).get_mpz_t()))
        throw std::logic_error("non-invertible leading coefficient");
      coeff = r_lead.second * inv;
    }
    Poly mono(f.nvars(), f.characteristic());
    mono.add_term(std::move(exps), coeff);
    quotient = quotient + mono;
    rem = rem - mono * g;
  }
  return quotient;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  Poly acc(m[0][0].nvars(), m[0][0].characteristic());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace instab
