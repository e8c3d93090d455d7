#pragma once

#include <array>
#include <string>

#include "instab/common.hpp"

namespace instab {

long normalize_mod(long v, long p);
long inv_mod(long a, long p);

// F_{p^e} for e <= 3. Elements are coefficient vectors in the power basis of
// a fixed monic irreducible modulus (the first irreducible in counter order,
// so the field is the same on every run).
class GF {
public:
  static constexpr int max_degree = 3;
  using Elem = std::array<long, max_degree>;

  explicit GF(long p, int e = 1);

  long characteristic() const { return p_; }
  int extension_degree() const { return e_; }

  Elem zero() const { return Elem{0, 0, 0}; }
  Elem one() const { return from_int(1); }
  Elem from_int(long v) const;
  Elem from_big(const BigInt& v) const;
  Elem make(long c0, long c1 = 0, long c2 = 0) const;

  bool is_zero(const Elem& a) const { return a == Elem{0, 0, 0}; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;

  Elem sample(SplitMix64& rng) const;
  std::string str(const Elem& a) const;
  std::string name() const;  // "GF(p)" or "GF(p^e)"

private:
  long p_ = 2;
  int e_ = 1;
  std::array<long, max_degree + 1> mod_{};  // modulus coefficients, mod_[e_] = 1

  void pick_modulus();
};

// Same call surface over exact rationals, so representation evaluation and
// the conjugate search can be written once and instantiated per field.
struct RatField {
  using Elem = Rat;

  long characteristic() const { return 0; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(static_cast<long>(v)); }
  Elem from_big(const BigInt& v) const { return Rat(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  std::string str(const Elem& a) const { return rat_str(a); }
  std::string name() const { return "Q"; }
};

}  // namespace instab
