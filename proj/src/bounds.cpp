#include "instab/bounds.hpp"

#include <algorithm>

#include "instab/truncsym.hpp"

namespace instab {

namespace {

// ceil(a / b) for positive b
BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// bits(x) = floor(log2 x) + 1
unsigned long bit_length(const BigInt& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

// Directed fixed-point logarithm: returns L with L <= 2^s * log2(x) < L + 2.
// Classic square-and-extract on the mantissa, with downward truncation to
// keep the working size near 2s bits; the truncation error stays far below
// one output ulp.
BigInt log2_floor_scaled(const BigInt& x, unsigned long s) {
  unsigned long e = bit_length(x) - 1;
  BigInt num = x;
  unsigned long shift = e;  // mantissa num / 2^shift in [1, 2)
  const unsigned long cap = 2 * s + 64;
  BigInt frac = 0;
  for (unsigned long k = 0; k < s; ++k) {
    num *= num;
    shift *= 2;
    frac <<= 1;
    if (bit_length(num) > shift + 1) {  // mantissa reached [2, 4): emit a bit
      frac += 1;
      ++shift;
    }
    unsigned long nb = bit_length(num);
    if (nb > cap) {
      unsigned long drop = nb - cap;
      num >>= drop;
      shift -= drop;
    }
  }
  return (BigInt(e) << s) + frac;
}

// Smallest N with N * log2(p) >= exponent * log2(base), for base not a power
// of p (so the two sides are never exactly equal and the ceiling is pinned
// down after finitely many precision doublings).
BigInt bracketed_minimum(long p, const BigInt& base, const BigInt& exponent,
                         unsigned long& precision_out) {
  for (unsigned long s = 64;; s *= 2) {
    BigInt lp = log2_floor_scaled(BigInt(p), s);
    BigInt lb = log2_floor_scaled(base, s);
    BigInt lo = ceil_div(exponent * lb, lp + 2);
    BigInt hi = ceil_div(exponent * (lb + 2), lp);
    if (lo == hi) {
      precision_out = s;
      return lo;
    }
    if (s > (1UL << 20)) throw std::logic_error("log bracketing failed to converge");
  }
}

}  // namespace

BoundResult minimal_power_bound(long p, const BigInt& base, const BigInt& exponent,
                                long bit_budget) {
  if (p < 2) throw std::invalid_argument("p: must be at least 2");
  if (base < 1 || exponent < 0) throw std::invalid_argument("bound term out of range");

  BoundResult result;
  result.certificate.base = base;
  result.certificate.exponent = exponent;

  auto finish_exact = [&](const BigInt& n_min, const BigInt& target) {
    result.n_min = n_min;
    result.certificate.exact = true;
    result.certificate.target = target;
    if (!n_min.fits_ulong_p()) throw std::logic_error("exact certificate out of range");
    result.certificate.p_power = pow_big(BigInt(p), n_min.get_ui());
    result.certificate.p_power_prev =
        n_min > 0 ? pow_big(BigInt(p), n_min.get_ui() - 1) : BigInt(0);
    if (result.certificate.p_power < target ||
        (n_min > 0 && result.certificate.p_power_prev >= target))
      throw std::logic_error("bound certificate failed");
  };

  if (base == 1 || exponent == 0) {
    finish_exact(0, 1);
    return result;
  }

  // base = p^j: the comparison can tie exactly, answer j * exponent
  BigInt stripped = base;
  long j = 0;
  while (mpz_divisible_ui_p(stripped.get_mpz_t(), static_cast<unsigned long>(p))) {
    stripped /= p;
    ++j;
  }
  bool power_of_p = (stripped == 1);

  bool materializable = exponent.fits_ulong_p() &&
                        exponent * static_cast<long>(bit_length(base)) <= bit_budget;
  if (power_of_p) {
    BigInt n_min = exponent * j;
    if (materializable && n_min.fits_ulong_p()) {
      finish_exact(n_min, pow_big(base, exponent.get_ui()));
    } else {
      result.n_min = n_min;
      result.certificate.exact = false;
      result.certificate.log_precision = 0;
    }
    return result;
  }

  unsigned long precision = 0;
  BigInt n = bracketed_minimum(p, base, exponent, precision);
  if (materializable) {
    BigInt target = pow_big(base, exponent.get_ui());
    // the bracket already pinned n down; settle by exact comparison anyway
    while (n > 0 && pow_big(BigInt(p), n.get_ui() - 1) >= target) --n;
    while (pow_big(BigInt(p), n.get_ui()) < target) ++n;
    finish_exact(n, target);
    return result;
  }
  result.n_min = n;
  result.certificate.exact = false;
  result.certificate.log_precision = precision;
  return result;
}

namespace {

// Keep the worse of two terms: larger n_min, ties broken toward the larger
// materialized target so the recorded witness is the binding one.
bool improves(const BoundResult& candidate, const BoundResult& best, bool has_best) {
  if (!has_best) return true;
  if (candidate.n_min != best.n_min) return candidate.n_min > best.n_min;
  if (candidate.certificate.exact && best.certificate.exact)
    return candidate.certificate.target > best.certificate.target;
  return false;
}

constexpr long max_range_terms = 200000;

}  // namespace

BoundResult single_rep_bound(long p, long m, long d) {
  if (m < 1 || d < 1) throw std::invalid_argument("m, d: must be at least 1");
  BoundResult result = minimal_power_bound(p, BigInt(d), BigInt(m));
  return result;
}

BoundResult extension_bound(long p, long m, long d) {
  if (m < 1 || d < 1) throw std::invalid_argument("m, d: must be at least 1");
  if (p < 2) throw std::invalid_argument("p: must be at least 2");
  if (m - 1 > max_range_terms)
    throw budget_error("range-budget", "extension bound sweeps " + std::to_string(m - 1) +
                                           " terms, over the range-budget of " +
                                           std::to_string(max_range_terms));
  BoundResult best;
  bool has_best = false;
  for (long r = 1; r < m; ++r) {
    BoundResult term = minimal_power_bound(p, BigInt(d) * r, binomial_ll(m, r));
    term.witness_r = r;
    if (improves(term, best, has_best)) {
      best = term;
      has_best = true;
    }
  }
  if (!has_best) {
    best = minimal_power_bound(p, 1, 0);  // empty range
    best.certificate.base = 0;
  }
  return best;
}

BoundResult truncated_power_bound(long p, int n, int l) {
  require_prime(p, "p");
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (l < 1 || static_cast<long>(l) > static_cast<long>(n) * (p - 1))
    throw std::invalid_argument("l: must satisfy 1 <= l <= n(p-1)");
  BigInt kdim = tl_dim(p, n, l);
  if (kdim > max_range_terms)
    throw budget_error("range-budget", "truncated power bound sweeps " + kdim.get_str() +
                                           " terms, over the range-budget of " +
                                           std::to_string(max_range_terms));
  long K = kdim.get_si();
  BoundResult best;
  bool has_best = false;
  for (long r = 1; r <= K; ++r) {  // inclusive upper end
    BoundResult term = minimal_power_bound(p, BigInt(l) * r, binomial_ll(K, r));
    term.witness_r = r;
    if (improves(term, best, has_best)) {
      best = term;
      has_best = true;
    }
  }
  if (!has_best) {
    best = minimal_power_bound(p, 1, 0);
    best.certificate.base = 0;
  }
  return best;
}

BoundResult frobenius_image_bound(long p, int n, long m, long d) {
  require_prime(p, "p");
  if (n < 1 || m < 1 || d < 1) throw std::invalid_argument("n, m, d: must be at least 1");
  long l_max = static_cast<long>(n) * (p - 1);
  BoundResult best;
  bool has_best = false;
  long total_terms = 0;
  for (long l = 1; l <= l_max; ++l) {
    BigInt kdim = tl_dim(p, n, static_cast<int>(l));
    BigInt mk = kdim * m;
    if (mk > max_range_terms || (total_terms += mk.get_si()) > max_range_terms)
      throw budget_error("range-budget",
                         "bound sweep exceeds the range-budget of " +
                             std::to_string(max_range_terms) + " terms (at l=" +
                             std::to_string(l) + ")");
    long top = mk.get_si();
    for (long r = 1; r < top; ++r) {
      BoundResult term = minimal_power_bound(p, BigInt(d + l) * r, binomial(mk, r));
      term.witness_r = r;
      term.witness_l = l;
      if (improves(term, best, has_best)) {
        best = term;
        has_best = true;
      }
    }
  }
  if (!has_best) {
    best = minimal_power_bound(p, 1, 0);
    best.certificate.base = 0;
  }
  return best;
}

BigInt functor_rank(const std::string& kind, int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("n, d: out of range");
  if (kind == "tensor") return pow_big(BigInt(n), static_cast<unsigned long>(d));
  if (kind == "sym") return binomial_ll(n + d - 1, d);
  if (kind == "wedge") {
    if (d > n) throw std::invalid_argument("d: wedge rank requires d <= n");
    return binomial_ll(n, d);
  }
  throw std::invalid_argument("kind: expected tensor, sym or wedge");
}

}  // namespace instab
