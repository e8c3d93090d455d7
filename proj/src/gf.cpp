#include "instab/gf.hpp"

#include <sstream>

namespace instab {

long normalize_mod(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long inv_mod(long a, long p) {
  a = normalize_mod(a, p);
  if (a == 0) throw std::domain_error("division by zero mod " + std::to_string(p));
  long old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return normalize_mod(old_s, p);
}

GF::GF(long p, int e) : p_(p), e_(e) {
  require_prime(p, "p");
  if (p > (1LL << 31)) throw std::invalid_argument("p: characteristic too large");
  if (e < 1 || e > max_degree) throw std::invalid_argument("extension degree must be in 1..3");
  pick_modulus();
}

void GF::pick_modulus() {
  mod_.fill(0);
  mod_[e_] = 1;
  if (e_ == 1) return;
  // A monic quadratic or cubic over F_p is reducible iff it has a root, so
  // scanning coefficient counters until no root exists finds the first
  // irreducible modulus.
  for (long counter = 0;; ++counter) {
    long v = counter;
    for (int i = 0; i < e_; ++i) {
      mod_[i] = v % p_;
      v /= p_;
    }
    if (v != 0) throw std::logic_error("no irreducible modulus found");
    bool has_root = false;
    for (long x = 0; x < p_ && !has_root; ++x) {
      long acc = 1, val = 0;
      for (int i = 0; i <= e_; ++i) {
        val = normalize_mod(val + mod_[i] * acc, p_);
        acc = normalize_mod(acc * x, p_);
      }
      has_root = (val == 0);
    }
    if (!has_root) return;
  }
}

GF::Elem GF::from_int(long v) const { return Elem{normalize_mod(v, p_), 0, 0}; }

GF::Elem GF::from_big(const BigInt& v) const {
  long r = static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
  return Elem{r, 0, 0};
}

GF::Elem GF::make(long c0, long c1, long c2) const {
  Elem a{normalize_mod(c0, p_), normalize_mod(c1, p_), normalize_mod(c2, p_)};
  for (int i = e_; i < max_degree; ++i)
    if (a[i] != 0) throw std::invalid_argument("element coefficient beyond extension degree");
  return a;
}

GF::Elem GF::add(const Elem& a, const Elem& b) const {
  Elem r{};
  for (int i = 0; i < e_; ++i) r[i] = normalize_mod(a[i] + b[i], p_);
  return r;
}

GF::Elem GF::sub(const Elem& a, const Elem& b) const {
  Elem r{};
  for (int i = 0; i < e_; ++i) r[i] = normalize_mod(a[i] - b[i], p_);
  return r;
}

GF::Elem GF::neg(const Elem& a) const {
  Elem r{};
  for (int i = 0; i < e_; ++i) r[i] = normalize_mod(-a[i], p_);
  return r;
}

GF::Elem GF::mul(const Elem& a, const Elem& b) const {
  std::array<long, 2 * max_degree - 1> prod{};
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = normalize_mod(prod[i + j] + a[i] * b[j], p_);
  // reduce by the monic modulus: x^e = -(mod_[e-1] x^{e-1} + ... + mod_[0])
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < e_; ++i) prod[d - e_ + i] = normalize_mod(prod[d - e_ + i] - c * mod_[i], p_);
  }
  Elem r{};
  for (int i = 0; i < e_; ++i) r[i] = prod[i];
  return r;
}

GF::Elem GF::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in " + name());
  if (e_ == 1) return Elem{inv_mod(a[0], p_), 0, 0};
  // extended Euclid in F_p[x] against the modulus
  std::vector<long> r0(mod_.begin(), mod_.begin() + e_ + 1);
  std::vector<long> r1(a.begin(), a.begin() + e_);
  std::vector<long> s0{0}, s1{1};
  auto deg = [](const std::vector<long>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      if (f[i] != 0) return i;
    return -1;
  };
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    std::vector<long> q(d0 - d1 + 1, 0);
    std::vector<long> rem = r0;
    for (int d = d0; d >= d1; --d) {
      if (rem[d] == 0) continue;
      long c = normalize_mod(rem[d] * inv_mod(r1[d1], p_), p_);
      q[d - d1] = c;
      for (int i = 0; i <= d1; ++i) rem[d - d1 + i] = normalize_mod(rem[d - d1 + i] - c * r1[i], p_);
    }
    std::vector<long> s2(std::max(s0.size(), s1.size() + q.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        s2[i + j] = normalize_mod(s2[i + j] - q[i] * s1[j], p_);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  int d1 = deg(r1);
  if (d1 != 0) throw std::logic_error("modulus not irreducible");
  long scale = inv_mod(r1[0], p_);
  Elem res{};
  for (int i = 0; i < e_ && i < static_cast<int>(s1.size()); ++i)
    res[i] = normalize_mod(s1[i] * scale, p_);
  return res;
}

GF::Elem GF::sample(SplitMix64& rng) const {
  Elem r{};
  for (int i = 0; i < e_; ++i) r[i] = static_cast<long>(rng.below(static_cast<std::uint64_t>(p_)));
  return r;
}

std::string GF::str(const Elem& a) const {
  if (e_ == 1) return std::to_string(a[0]);
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < e_; ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ']';
  return out.str();
}

std::string GF::name() const {
  if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

}  // namespace instab
