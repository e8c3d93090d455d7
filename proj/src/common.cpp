#include "instab/common.hpp"

namespace instab {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(BigInt(s), 1);
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt binomial_ll(long n, long k) { return binomial(BigInt(n), k); }

BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  BigInt z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

long require_prime(long p, const std::string& field) {
  if (!is_prime(p)) throw std::invalid_argument(field + ": expected a prime, got " + std::to_string(p));
  return p;
}

}  // namespace instab
