#include "instab/truncsym.hpp"

#include <algorithm>
#include <cstdlib>

#include "instab/linalg.hpp"

namespace instab {

long l_p(long l, long p) {
  if (l < 0) throw std::invalid_argument("l: must be nonnegative");
  if (p < 2) throw std::invalid_argument("p: must be at least 2");
  return l / p;
}

namespace {

void compositions_rec(int n, int l, int cap, std::vector<int>& partial,
                      std::vector<std::vector<int>>& out) {
  if (n == 1) {
    if (l <= cap) {
      partial.push_back(l);
      out.push_back(partial);
      partial.pop_back();
    }
    return;
  }
  int lo = std::max(0, l - cap * (n - 1));
  int hi = std::min(cap, l);
  for (int k = lo; k <= hi; ++k) {
    partial.push_back(k);
    compositions_rec(n - 1, l - k, cap, partial, out);
    partial.pop_back();
  }
}

std::vector<std::vector<int>> compositions_capped(int n, int l, int cap) {
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (l < 0) throw std::invalid_argument("l: must be nonnegative");
  std::vector<std::vector<int>> out;
  if (cap < 0) return out;
  std::vector<int> partial;
  partial.reserve(n);
  compositions_rec(n, l, cap, partial, out);
  return out;
}

long checked_pow(int n, int l, long limit) {
  long v = 1;
  for (int i = 0; i < l; ++i) {
    if (v > limit / n) return limit + 1;
    v *= n;
  }
  return v;
}

long require_tensor_budget(int n, int l, long budget) {
  if (budget <= 0) budget = tensor_budget();
  long words = checked_pow(n, l, budget);
  if (words > budget)
    throw budget_error("tensor-budget",
                       "tensor power size " + std::to_string(n) + "^" + std::to_string(l) +
                           " exceeds the tensor-budget of " + std::to_string(budget) +
                           " (set INSTAB_TENSOR_BUDGET to raise)");
  return words;
}

}  // namespace

long tensor_budget() {
  if (const char* env = std::getenv("INSTAB_TENSOR_BUDGET")) {
    long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 4096;
}

std::vector<std::vector<int>> compositions(int n, int l) {
  return compositions_capped(n, l, l);
}

std::vector<std::vector<int>> bounded_compositions(int n, int l, long p) {
  if (p < 2) throw std::invalid_argument("p: must be at least 2");
  int cap = static_cast<int>(std::min<long>(p - 1, l));
  return compositions_capped(n, l, cap);
}

BigInt count_bounded_compositions(int n, int l, long p) {
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (l < 0) throw std::invalid_argument("l: must be nonnegative");
  if (p < 2) throw std::invalid_argument("p: must be at least 2");
  // column DP over parts; kept polynomial so large grids never enumerate
  std::vector<BigInt> count(l + 1, 0);
  count[0] = 1;
  for (int part = 0; part < n; ++part) {
    std::vector<BigInt> next(l + 1, 0);
    for (int total = 0; total <= l; ++total) {
      if (count[total] == 0) continue;
      long max_add = std::min<long>(p - 1, l - total);
      for (long add = 0; add <= max_add; ++add) next[total + add] += count[total];
    }
    count = std::move(next);
  }
  return count[l];
}

BigInt tl_dim_closed_corrected(long p, int n, int l) {
  BigInt acc = 0;
  long qmax = l_p(l, p);
  for (long q = 0; q <= qmax; ++q) {
    BigInt term = binomial_ll(n, q) * binomial_ll(n + l - p * q - 1, n - 1);
    acc += (q % 2 == 0) ? term : -term;
  }
  return acc;
}

BigInt tl_dim_closed_printed(long p, int n, int l) {
  BigInt acc = 0;
  long qmax = l_p(l, p);
  for (long q = 0; q <= qmax; ++q) {
    BigInt term = binomial_ll(n, q) * binomial_ll(n + l - q - 1, l - p * q);
    acc += (q % 2 == 0) ? term : -term;
  }
  return acc;
}

TlDimReport tl_dim_report(long p, int n, int l) {
  require_prime(p, "p");
  TlDimReport report;
  report.enumerated = count_bounded_compositions(n, l, p);
  report.closed_printed = tl_dim_closed_printed(p, n, l);
  report.closed_corrected = tl_dim_closed_corrected(p, n, l);
  report.printed_matches = (report.closed_printed == report.enumerated);
  report.corrected_matches = (report.closed_corrected == report.enumerated);
  return report;
}

BigInt tl_dim(long p, int n, int l) {
  require_prime(p, "p");
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (l < 0) throw std::invalid_argument("l: must be nonnegative");
  return tl_dim_closed_corrected(p, n, l);
}

TruncatedBasis tl_basis(int n, int l, long p, long budget) {
  require_prime(p, "p");
  if (l < 1) throw std::invalid_argument("l: must be at least 1");
  require_tensor_budget(n, l, budget);

  TruncatedBasis basis;
  basis.p = p;
  basis.n = n;
  basis.l = l;
  basis.index = bounded_compositions(n, l, p);
  for (const auto& comp : basis.index) {
    long multiplicity = 1;  // prod(k_i!) mod p; nonzero since parts < p
    for (int part : comp)
      for (int f = 2; f <= part; ++f) multiplicity = normalize_mod(multiplicity * f, p);

    // all words with the given content, built in ascending word order
    std::vector<int> word;
    word.reserve(l);
    for (int letter = 0; letter < n; ++letter)
      for (int rep = 0; rep < comp[letter]; ++rep) word.push_back(letter);
    std::sort(word.begin(), word.end());
    SparseVec vec;
    do {
      long idx = 0;
      for (int letter : word) idx = idx * n + letter;
      vec.entries.emplace_back(idx, multiplicity);
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(vec.entries.begin(), vec.entries.end());
    basis.vectors.push_back(std::move(vec));
  }
  return basis;
}

long tl_basis_rank(const TruncatedBasis& basis) {
  FpEliminator elim(basis.p);
  long rank = 0;
  for (const SparseVec& vec : basis.vectors)
    if (elim.add_row(vec.entries)) ++rank;
  return rank;
}

BigInt invariants_dim(int n, int l, long p, long budget) {
  require_prime(p, "p");
  if (l < 1) throw std::invalid_argument("l: must be at least 1");
  long words = require_tensor_budget(n, l, budget);

  FpEliminator elim(p);
  // rows x_{w.sigma} - x_w for each adjacent transposition sigma and word w
  std::vector<long> pow(l, 1);
  for (int i = l - 2; i >= 0; --i) pow[i] = pow[i + 1] * n;
  std::vector<int> word(l, 0);
  for (long idx = 0; idx < words; ++idx) {
    long v = idx;
    for (int i = l - 1; i >= 0; --i) {
      word[i] = static_cast<int>(v % n);
      v /= n;
    }
    for (int t = 0; t + 1 < l; ++t) {
      if (word[t] == word[t + 1]) continue;
      long swapped = idx + (word[t + 1] - word[t]) * pow[t] + (word[t] - word[t + 1]) * pow[t + 1];
      if (swapped < idx) continue;  // each unordered pair once
      elim.add_row({{idx, 1}, {swapped, p - 1}});
    }
  }
  return BigInt(words - elim.rank());
}

}  // namespace instab
