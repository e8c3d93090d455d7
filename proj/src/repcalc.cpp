#include "instab/repcalc.hpp"

#include <algorithm>
#include <numeric>

namespace instab {

namespace {

void check_shape(const RepSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("rep: n and m must be at least 1");
  if (spec.p != 0) require_prime(spec.p, "p");
  if (static_cast<int>(spec.entries.size()) != spec.m ||
      static_cast<int>(spec.denom.size()) != spec.m)
    throw std::invalid_argument("rep: entries/denom must be m x m");
  for (int i = 0; i < spec.m; ++i) {
    if (static_cast<int>(spec.entries[i].size()) != spec.m ||
        static_cast<int>(spec.denom[i].size()) != spec.m)
      throw std::invalid_argument("rep: entries/denom must be m x m");
    for (int j = 0; j < spec.m; ++j) {
      if (spec.entries[i][j].nvars() != spec.n * spec.n ||
          spec.entries[i][j].characteristic() != spec.p)
        throw std::invalid_argument("rep: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") lives in the wrong polynomial ring");
      if (spec.denom[i][j] < 0)
        throw std::invalid_argument("rep: denom exponents must be nonnegative");
    }
  }
}

// divide out det powers so that a_ij > 0 implies det does not divide f_ij
void reduce_entry(Poly& f, int& a, const Poly& det) {
  while (a > 0 && !f.is_zero()) {
    auto quotient = divide_exact(f, det);
    if (!quotient) return;
    f = std::move(*quotient);
    --a;
  }
  if (f.is_zero()) a = 0;
}

BigInt factorial_big(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::vector<std::vector<int>> subsets_lex(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> sel(r);
  std::iota(sel.begin(), sel.end(), 0);
  for (;;) {
    out.push_back(sel);
    int i = r - 1;
    while (i >= 0 && sel[i] == m - r + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

}  // namespace

Poly det_poly(int n, long p) {
  std::vector<std::vector<Poly>> vars(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vars[i][j] = Poly::variable(var_index(i, j, n), n * n, p);
  return poly_det(vars);
}

RepSpec standard_rep(int n, long p) {
  RepSpec spec;
  spec.n = n;
  spec.m = n;
  spec.p = p;
  spec.entries.assign(n, std::vector<Poly>(n));
  spec.denom.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) spec.entries[i][j] = Poly::variable(var_index(i, j, n), n * n, p);
  check_shape(spec);
  return spec;
}

RepSpec det_rep(int n, long p) {
  RepSpec spec;
  spec.n = n;
  spec.m = 1;
  spec.p = p;
  spec.entries = {{det_poly(n, p)}};
  spec.denom = {{0}};
  return spec;
}

RepSpec det_inverse_rep(int n, long p) {
  RepSpec spec;
  spec.n = n;
  spec.m = 1;
  spec.p = p;
  spec.entries = {{Poly::constant(1, n * n, p)}};
  spec.denom = {{1}};
  return spec;
}

RepSpec adjoint_rep(int n, long p) {
  int nv = n * n;
  // adjugate entries: adj[l][j] = (-1)^{j+l} * minor with row j, col l removed
  std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) {
      if (n == 1) {
        adj[l][j] = Poly::constant(1, nv, p);
        continue;
      }
      std::vector<std::vector<Poly>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (int c = 0; c < n; ++c) {
          if (c == l) continue;
          row.push_back(Poly::variable(var_index(r, c, n), nv, p));
        }
        minor.push_back(std::move(row));
      }
      Poly cofactor = poly_det(minor);
      adj[l][j] = ((j + l) % 2 == 0) ? cofactor : -cofactor;
    }

  RepSpec spec;
  spec.n = n;
  spec.m = nv;
  spec.p = p;
  spec.entries.assign(nv, std::vector<Poly>(nv));
  spec.denom.assign(nv, std::vector<int>(nv, 1));
  Poly det = det_poly(n, p);
  // basis E_{kl} in row-major order; the action sends E_{kl} to
  // (T E_{kl} adj(T)) / det with (i,j) coefficient T_ik * adj[l][j]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Poly f = Poly::variable(var_index(i, k, n), nv, p) * adj[l][j];
          int a = 1;
          reduce_entry(f, a, det);
          spec.entries[i * n + j][k * n + l] = std::move(f);
          spec.denom[i * n + j][k * n + l] = a;
        }
  return spec;
}

RepSpec sym_rep(int n, int l, long p) {
  if (l < 0) throw std::invalid_argument("l: must be nonnegative");
  auto comps = compositions(n, l);
  int m = static_cast<int>(comps.size());
  std::map<std::vector<int>, int> comp_index;
  for (int i = 0; i < m; ++i) comp_index.emplace(comps[i], i);

  RepSpec spec;
  spec.n = n;
  spec.m = m;
  spec.p = p;
  spec.entries.assign(m, std::vector<Poly>(m, Poly(n * n, p)));
  spec.denom.assign(m, std::vector<int>(m, 0));

  // expand prod_i (sum_j T_ji e_j)^{k_i} one source column at a time
  for (int col = 0; col < m; ++col) {
    const std::vector<int>& k = comps[col];
    struct Partial {
      std::vector<int> row_counts;  // how many of each e_j picked so far
      Poly monomial;
      BigInt coeff;
    };
    std::vector<Partial> frontier{{std::vector<int>(n, 0), Poly::constant(1, n * n, p), 1}};
    for (int i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      auto splits = compositions(n, k[i]);
      std::vector<Partial> next;
      BigInt k_fact = factorial_big(k[i]);
      for (const Partial& part : frontier)
        for (const auto& split : splits) {
          Partial np = part;
          BigInt multinomial = k_fact;
          for (int j = 0; j < n; ++j) {
            if (split[j] == 0) continue;
            multinomial /= factorial_big(split[j]);
            np.row_counts[j] += split[j];
            std::vector<int> exps(n * n, 0);
            exps[var_index(j, i, n)] = split[j];
            Poly mono(n * n, p);
            mono.add_term(std::move(exps), 1);
            np.monomial = np.monomial * mono;
          }
          np.coeff *= multinomial;
          next.push_back(std::move(np));
        }
      frontier = std::move(next);
    }
    for (const Partial& part : frontier) {
      int row = comp_index.at(part.row_counts);
      Poly scaled = part.monomial * Poly::constant(part.coeff, n * n, p);
      spec.entries[row][col] = spec.entries[row][col] + scaled;
    }
  }
  return spec;
}

RepSpec truncated_sym_rep(int n, long p, int l) {
  require_prime(p, "p");
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (l < 1 || static_cast<long>(l) > static_cast<long>(n) * (p - 1))
    throw std::invalid_argument("l: must satisfy 1 <= l <= n(p-1)");

  auto comps = bounded_compositions(n, l, p);
  int m = static_cast<int>(comps.size());
  int nv = n * n;

  std::vector<long> multiplicity(m);  // prod(k_i!) mod p
  for (int i = 0; i < m; ++i) {
    long c = 1;
    for (int part : comps[i])
      for (int f = 2; f <= part; ++f) c = normalize_mod(c * f, p);
    multiplicity[i] = c;
  }

  RepSpec spec;
  spec.n = n;
  spec.m = m;
  spec.p = p;
  spec.entries.assign(m, std::vector<Poly>(m, Poly(nv, p)));
  spec.denom.assign(m, std::vector<int>(m, 0));

  // representative word for each target composition: the sorted word
  std::vector<std::vector<int>> rep_word(m);
  for (int i = 0; i < m; ++i)
    for (int letter = 0; letter < n; ++letter)
      for (int r = 0; r < comps[i][letter]; ++r) rep_word[i].push_back(letter);

  for (int col = 0; col < m; ++col) {
    std::vector<int> word = rep_word[col];  // ascending, so permutations enumerate all words
    do {
      // the column's basis vector maps the representative word of each row
      // composition to the product of matrix coordinates picked slotwise
      for (int row = 0; row < m; ++row) {
        std::vector<int> exps(nv, 0);
        for (int t = 0; t < l; ++t) ++exps[var_index(rep_word[row][t], word[t], n)];
        long coeff =
            normalize_mod(multiplicity[col] * inv_mod(multiplicity[row], p), p);
        spec.entries[row][col].add_term(std::move(exps), coeff);
      }
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return spec;
}

DegreeProfile rep_degree(const RepSpec& spec) {
  check_shape(spec);
  DegreeProfile profile;
  long a = 0;
  for (const auto& row : spec.denom)
    for (int v : row) a = std::max<long>(a, v);
  long d = 0;
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j) {
      if (spec.entries[i][j].is_zero()) continue;
      long cleared = spec.entries[i][j].degree() + spec.n * (a - spec.denom[i][j]);
      d = std::max(d, cleared);
    }
  profile.d = d;
  profile.a = a;
  profile.is_polynomial = (a == 0);
  return profile;
}

RepSpec tensor_product(const RepSpec& s1, const RepSpec& s2) {
  check_shape(s1);
  check_shape(s2);
  if (s1.n != s2.n || s1.p != s2.p)
    throw std::invalid_argument("tensor: rank or characteristic mismatch");
  RepSpec out;
  out.n = s1.n;
  out.m = s1.m * s2.m;
  out.p = s1.p;
  out.entries.assign(out.m, std::vector<Poly>(out.m));
  out.denom.assign(out.m, std::vector<int>(out.m, 0));
  Poly det = det_poly(out.n, out.p);
  for (int i1 = 0; i1 < s1.m; ++i1)
    for (int j1 = 0; j1 < s1.m; ++j1)
      for (int i2 = 0; i2 < s2.m; ++i2)
        for (int j2 = 0; j2 < s2.m; ++j2) {
          Poly f = s1.entries[i1][j1] * s2.entries[i2][j2];
          int a = s1.denom[i1][j1] + s2.denom[i2][j2];
          reduce_entry(f, a, det);
          out.entries[i1 * s2.m + i2][j1 * s2.m + j2] = std::move(f);
          out.denom[i1 * s2.m + i2][j1 * s2.m + j2] = a;
        }
  return out;
}

RepSpec wedge_lift(const RepSpec& spec, int r) {
  check_shape(spec);
  if (r < 1 || r > spec.m) throw std::invalid_argument("r: must satisfy 1 <= r <= m");
  BigInt dim = binomial_ll(spec.m, r);
  if (dim > 4096)
    throw budget_error("minor-budget", "wedge lift of dimension " + dim.get_str() +
                                           " exceeds the minor-budget of 4096");
  int a = 0;
  for (const auto& row : spec.denom)
    for (int v : row) a = std::max(a, v);
  Poly det = det_poly(spec.n, spec.p);
  std::vector<Poly> det_pow{Poly::constant(1, spec.n * spec.n, spec.p)};
  for (int e = 1; e <= a; ++e) det_pow.push_back(det_pow.back() * det);

  // clear every entry to the common denominator det^a before taking minors
  std::vector<std::vector<Poly>> cleared(spec.m, std::vector<Poly>(spec.m));
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j)
      cleared[i][j] = spec.entries[i][j] * det_pow[a - spec.denom[i][j]];

  auto subsets = subsets_lex(spec.m, r);
  int mm = static_cast<int>(subsets.size());
  RepSpec out;
  out.n = spec.n;
  out.m = mm;
  out.p = spec.p;
  out.entries.assign(mm, std::vector<Poly>(mm));
  out.denom.assign(mm, std::vector<int>(mm, 0));
  for (int bi = 0; bi < mm; ++bi)
    for (int bj = 0; bj < mm; ++bj) {
      std::vector<std::vector<Poly>> sub(r, std::vector<Poly>(r));
      for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) sub[x][y] = cleared[subsets[bi][x]][subsets[bj][y]];
      Poly f = poly_det(sub);
      int aa = a * r;
      reduce_entry(f, aa, det);
      out.entries[bi][bj] = std::move(f);
      out.denom[bi][bj] = aa;
    }
  return out;
}

std::vector<Weight> functor_weights(const Functor& f, int n, long p) {
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  std::vector<Weight> out;
  switch (f.kind) {
    case Functor::Kind::tensor_power: {
      if (f.degree < 0) throw std::invalid_argument("l: must be nonnegative");
      long words = 1;
      for (int i = 0; i < f.degree; ++i) {
        words *= n;
        if (words > tensor_budget())
          throw budget_error("tensor-budget", "tensor power exceeds the tensor-budget of " +
                                                  std::to_string(tensor_budget()));
      }
      std::vector<int> word(f.degree, 0);
      for (long idx = 0; idx < words; ++idx) {
        long v = idx;
        for (int t = f.degree - 1; t >= 0; --t) {
          word[t] = static_cast<int>(v % n);
          v /= n;
        }
        Weight w(n, 0);
        for (int letter : word) ++w[letter];
        out.push_back(std::move(w));
      }
      break;
    }
    case Functor::Kind::sym: {
      if (f.degree < 0) throw std::invalid_argument("l: must be nonnegative");
      for (const auto& comp : compositions(n, f.degree)) out.emplace_back(comp.begin(), comp.end());
      break;
    }
    case Functor::Kind::wedge: {
      if (f.degree < 0 || f.degree > n)
        throw std::invalid_argument("r: must satisfy 0 <= r <= n");
      if (f.degree == 0) {
        out.emplace_back(n, 0);
        break;
      }
      for (const auto& subset : subsets_lex(n, f.degree)) {
        Weight w(n, 0);
        for (int i : subset) w[i] = 1;
        out.push_back(std::move(w));
      }
      break;
    }
    case Functor::Kind::truncated: {
      require_prime(p, "p");
      if (f.degree < 0) throw std::invalid_argument("l: must be nonnegative");
      for (const auto& comp : bounded_compositions(n, f.degree, p))
        out.emplace_back(comp.begin(), comp.end());
      break;
    }
  }
  return out;
}

void validate_rep(const RepSpec& spec) {
  check_shape(spec);
  Poly det = det_poly(spec.n, spec.p);
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j)
      if (spec.denom[i][j] > 0 && !spec.entries[i][j].is_zero() &&
          divide_exact(spec.entries[i][j], det))
        throw std::invalid_argument("entries(" + std::to_string(i) + "," + std::to_string(j) +
                                    "): numerator divisible by det; reduce the entry");
  auto check_identity = [&](auto field) {
    auto id = identity_mat(field, spec.n);
    auto rho = evaluate(spec, field, id);
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < spec.m; ++j) {
        bool want_one = (i == j);
        if (field.eq(rho.at(i, j), want_one ? field.one() : field.zero())) continue;
        throw std::invalid_argument("entries: evaluation at the identity is not the identity at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
  };
  if (spec.p == 0)
    check_identity(RatField{});
  else
    check_identity(GF(spec.p));
}

std::vector<Weight> diagonal_weights(const RepSpec& spec) {
  check_shape(spec);
  int n = spec.n;
  // restriction to diag(t_1..t_n): keep terms supported on the diagonal slots
  auto restrict_diag = [&](const Poly& f) {
    std::map<std::vector<int>, BigInt> kept;
    for (const auto& [exps, coeff] : f.terms()) {
      bool diagonal = true;
      std::vector<int> diag_exps(n, 0);
      for (int i = 0; i < n && diagonal; ++i)
        for (int j = 0; j < n; ++j) {
          int e = exps[var_index(i, j, n)];
          if (i == j)
            diag_exps[i] = e;
          else if (e != 0)
            diagonal = false;
        }
      if (!diagonal) continue;
      auto [it, inserted] = kept.emplace(std::move(diag_exps), coeff);
      if (!inserted) {
        it->second += coeff;
        if (spec.p != 0) it->second = ((it->second % spec.p) + spec.p) % spec.p;
        if (it->second == 0) kept.erase(it);
      }
    }
    return kept;
  };

  std::vector<Weight> out(spec.m);
  for (int col = 0; col < spec.m; ++col) {
    for (int row = 0; row < spec.m; ++row) {
      auto terms = restrict_diag(spec.entries[row][col]);
      if (row != col) {
        if (!terms.empty())
          throw std::invalid_argument(
              "entries: basis vector " + std::to_string(col) +
              " is not a torus eigenvector (off-diagonal action at row " + std::to_string(row) + ")");
        continue;
      }
      if (terms.size() != 1)
        throw std::invalid_argument("entries: diagonal action on basis vector " +
                                    std::to_string(col) + " is not a single monomial");
      const auto& [exps, coeff] = *terms.begin();
      if (coeff != 1)
        throw std::invalid_argument("entries: diagonal action on basis vector " +
                                    std::to_string(col) + " has coefficient != 1");
      Weight w(n, 0);
      for (int i = 0; i < n; ++i) w[i] = exps[i] - spec.denom[col][col];
      out[col] = std::move(w);
    }
  }
  return out;
}

}  // namespace instab
