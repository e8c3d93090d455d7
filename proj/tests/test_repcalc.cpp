#include <doctest.h>

#include <algorithm>

#include "instab/repcalc.hpp"

using namespace instab;

namespace {

template <class F>
Mat<typename F::Elem> random_invertible(const F& field, int n, SplitMix64& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Mat<typename F::Elem> g(n, n, field.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = field.from_int(rng.range(-3, 3));
    if (!field.is_zero(field_det(field, g))) return g;
  }
  throw std::runtime_error("no invertible sample");
}

template <class F>
bool multiplicative(const RepSpec& spec, const F& field, int pairs, SplitMix64& rng) {
  auto id_ok = [&] {
    auto rho = evaluate(spec, field, identity_mat(field, spec.n));
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < spec.m; ++j)
        if (!field.eq(rho.at(i, j), i == j ? field.one() : field.zero())) return false;
    return true;
  }();
  if (!id_ok) return false;
  for (int round = 0; round < pairs; ++round) {
    auto g = random_invertible(field, spec.n, rng);
    auto h = random_invertible(field, spec.n, rng);
    auto gh = mat_mul(field, g, h);
    auto lhs = evaluate(spec, field, gh);
    auto rhs = mat_mul(field, evaluate(spec, field, g), evaluate(spec, field, h));
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < spec.m; ++j)
        if (!field.eq(lhs.at(i, j), rhs.at(i, j))) return false;
  }
  return true;
}

bool multiplicative(const RepSpec& spec, int pairs, SplitMix64& rng) {
  if (spec.p == 0) return multiplicative(spec, RatField{}, pairs, rng);
  return multiplicative(spec, GF(spec.p), pairs, rng);
}

}  // namespace

TEST_SUITE("repcalc") {

TEST_CASE("degree profile of the basic representations") {
  DegreeProfile std2 = rep_degree(standard_rep(2, 0));
  CHECK(std2.d == 1);
  CHECK(std2.is_polynomial);

  DegreeProfile det3 = rep_degree(det_rep(3, 0));
  CHECK(det3.d == 3);
  CHECK(det3.is_polynomial);

  DegreeProfile inv2 = rep_degree(det_inverse_rep(2, 0));
  CHECK(inv2.d == 0);
  CHECK(inv2.a == 1);
  CHECK_FALSE(inv2.is_polynomial);

  // conjugation action: entries of degree n over det^1
  DegreeProfile ad2 = rep_degree(adjoint_rep(2, 0));
  CHECK(ad2.d == 2);
  CHECK_FALSE(ad2.is_polynomial);
}

TEST_CASE("tensor product") {
  RepSpec std2 = standard_rep(2, 0);
  RepSpec prod = tensor_product(std2, std2);
  CHECK(prod.m == 4);
  CHECK(rep_degree(prod).d == 2);

  // the trivial one-dimensional representation is a unit
  RepSpec triv = sym_rep(2, 0, 0);
  RepSpec same = tensor_product(triv, std2);
  CHECK(same.m == 2);
  CHECK(rep_degree(same).d == 1);
  CHECK(same.entries == std2.entries);

  // det (x) det^-1 collapses to the trivial representation
  RepSpec unit = tensor_product(det_rep(2, 0), det_inverse_rep(2, 0));
  CHECK(unit.m == 1);
  CHECK(rep_degree(unit).d == 0);
  CHECK(rep_degree(unit).is_polynomial);
  CHECK(unit.entries[0][0] == Poly::constant(1, 4, 0));

  CHECK_THROWS_AS(tensor_product(standard_rep(2, 0), standard_rep(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(tensor_product(standard_rep(2, 0), standard_rep(2, 3)), std::invalid_argument);
}

TEST_CASE("wedge lift") {
  RepSpec top = wedge_lift(standard_rep(2, 0), 2);
  CHECK(top.m == 1);
  CHECK(top.entries[0][0] == det_poly(2, 0));
  CHECK(rep_degree(top).d == 2);

  RepSpec same = wedge_lift(standard_rep(3, 0), 1);
  CHECK(same.entries == standard_rep(3, 0).entries);

  RepSpec top3 = wedge_lift(standard_rep(3, 0), 3);
  CHECK(top3.m == 1);
  CHECK(top3.entries[0][0] == det_poly(3, 0));
  CHECK(rep_degree(top3).d == 3);

  CHECK_THROWS_AS(wedge_lift(standard_rep(2, 0), 3), std::invalid_argument);
  CHECK_THROWS_AS(wedge_lift(standard_rep(2, 0), 0), std::invalid_argument);
}

TEST_CASE("truncated power representation in small cases") {
  RepSpec t22 = truncated_sym_rep(2, 2, 2);
  CHECK(t22.m == 1);
  Poly expect(4, 2);
  expect.add_term({1, 0, 0, 1}, 1);  // T11 T22
  expect.add_term({0, 1, 1, 0}, 1);  // T12 T21
  CHECK(t22.entries[0][0] == expect);

  // below the characteristic the truncated power is the symmetric power
  RepSpec t32 = truncated_sym_rep(2, 3, 2);
  RepSpec s32 = sym_rep(2, 2, 3);
  CHECK(t32.m == s32.m);
  CHECK(t32.entries == s32.entries);

  RepSpec rank1 = truncated_sym_rep(1, 5, 3);
  CHECK(rank1.m == 1);
  Poly cube(1, 5);
  cube.add_term({3}, 1);
  CHECK(rank1.entries[0][0] == cube);

  CHECK_THROWS_AS(truncated_sym_rep(2, 2, 3), std::invalid_argument);  // l > n(p-1)
  CHECK_THROWS_AS(truncated_sym_rep(2, 4, 1), std::invalid_argument);  // p not prime
}

TEST_CASE("truncated power at diagonal and permutation matrices") {
  RepSpec t = truncated_sym_rep(2, 3, 3);  // compositions (1,2),(2,1)
  GF f3(3);
  // diagonal action: monomials t^k on the diagonal
  Mat<GF::Elem> diag(2, 2, f3.zero());
  diag.at(0, 0) = f3.from_int(2);
  diag.at(1, 1) = f3.from_int(1);
  auto rho = evaluate(t, f3, diag);
  auto comps = bounded_compositions(2, 3, 3);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i != j) {
        CHECK(f3.is_zero(rho.at(i, j)));
      } else {
        long expect = 1;
        long vals[2] = {2, 1};
        for (int k = 0; k < 2; ++k)
          for (int rep = 0; rep < comps[i][k]; ++rep) expect = (expect * vals[k]) % 3;
        CHECK(f3.eq(rho.at(i, j), f3.from_int(expect)));
      }
    }

  // a permutation matrix permutes the composition basis
  Mat<GF::Elem> swap(2, 2, f3.zero());
  swap.at(0, 1) = f3.one();
  swap.at(1, 0) = f3.one();
  auto tau = evaluate(t, f3, swap);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::vector<int> swapped{comps[j][1], comps[j][0]};
    auto target = std::find(comps.begin(), comps.end(), swapped) - comps.begin();
    for (std::size_t i = 0; i < comps.size(); ++i)
      CHECK(f3.eq(tau.at(i, j),
                  static_cast<long>(i) == target ? f3.one() : f3.zero()));
  }
}

TEST_CASE("functor weights follow the basis orders") {
  Functor wedge1{Functor::Kind::wedge, 1};
  CHECK(functor_weights(wedge1, 2) == std::vector<Weight>{{1, 0}, {0, 1}});

  Functor sym2{Functor::Kind::sym, 2};
  CHECK(functor_weights(sym2, 2) == std::vector<Weight>{{0, 2}, {1, 1}, {2, 0}});

  Functor trunc2{Functor::Kind::truncated, 2};
  CHECK(functor_weights(trunc2, 2, 2) == std::vector<Weight>{{1, 1}});

  Functor tp2{Functor::Kind::tensor_power, 2};
  CHECK(functor_weights(tp2, 2) ==
        std::vector<Weight>{{2, 0}, {1, 1}, {1, 1}, {0, 2}});

  Functor wedge2{Functor::Kind::wedge, 2};
  CHECK(functor_weights(wedge2, 3) ==
        std::vector<Weight>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("constructed representations are multiplicative") {
  SplitMix64 rng(61);
  CHECK(multiplicative(standard_rep(2, 0), 20, rng));
  CHECK(multiplicative(standard_rep(3, 5), 20, rng));
  CHECK(multiplicative(det_rep(2, 0), 20, rng));
  CHECK(multiplicative(det_inverse_rep(2, 3), 20, rng));
  CHECK(multiplicative(adjoint_rep(2, 0), 20, rng));
  CHECK(multiplicative(sym_rep(2, 3, 0), 20, rng));
  CHECK(multiplicative(sym_rep(3, 2, 2), 20, rng));
  CHECK(multiplicative(truncated_sym_rep(2, 2, 2), 20, rng));
  CHECK(multiplicative(truncated_sym_rep(2, 3, 4), 20, rng));
  CHECK(multiplicative(truncated_sym_rep(3, 2, 3), 20, rng));
  CHECK(multiplicative(wedge_lift(standard_rep(3, 0), 2), 20, rng));
  CHECK(multiplicative(tensor_product(standard_rep(2, 3), det_rep(2, 3)), 20, rng));
}

TEST_CASE("degree bounds with the expected equality cases") {
  SplitMix64 rng(67);
  std::vector<RepSpec> pool{standard_rep(2, 0), det_rep(2, 0),      det_inverse_rep(2, 0),
                            sym_rep(2, 2, 0),   adjoint_rep(2, 0),  standard_rep(3, 3),
                            sym_rep(3, 2, 3),   det_rep(3, 3),      det_inverse_rep(3, 3)};
  for (int round = 0; round < 12; ++round) {
    const RepSpec& a = pool[rng.below(6)];  // the char-0 block
    const RepSpec& b = pool[rng.below(6)];
    if (a.n != b.n || a.p != b.p) continue;
    long da = rep_degree(a).d, db = rep_degree(b).d;
    CHECK(rep_degree(tensor_product(a, b)).d <= da + db);
  }
  // equality for standard (x) standard
  CHECK(rep_degree(tensor_product(standard_rep(2, 0), standard_rep(2, 0))).d == 2);

  for (int n : {2, 3})
    for (int r = 1; r <= n; ++r)
      CHECK(rep_degree(wedge_lift(standard_rep(n, 0), r)).d == r);  // d = 1, so dr = r

  CHECK(rep_degree(wedge_lift(sym_rep(2, 2, 0), 2)).d <= 2 * 2);

  for (long p : {2L, 3L, 5L})
    for (int n = 1; n <= 3; ++n)
      for (int l = 1; l <= std::min<long>(4, n * (p - 1)); ++l) {
        RepSpec t = truncated_sym_rep(n, p, l);
        CHECK(rep_degree(t).d <= l);
        if (l < p) CHECK(rep_degree(t).d == l);
      }
}

TEST_CASE("diagonal weights recover the eigenbasis data") {
  auto w_std = diagonal_weights(standard_rep(2, 0));
  CHECK(w_std == std::vector<Weight>{{1, 0}, {0, 1}});

  auto w_det = diagonal_weights(det_rep(2, 0));
  CHECK(w_det == std::vector<Weight>{{1, 1}});

  auto w_inv = diagonal_weights(det_inverse_rep(2, 0));
  CHECK(w_inv == std::vector<Weight>{{-1, -1}});

  // conjugation: E_11, E_12, E_21, E_22 have weights 0, e1-e2, e2-e1, 0
  auto w_ad = diagonal_weights(adjoint_rep(2, 0));
  CHECK(w_ad == std::vector<Weight>{{0, 0}, {1, -1}, {-1, 1}, {0, 0}});

  auto w_t = diagonal_weights(truncated_sym_rep(2, 3, 2));
  std::vector<Weight> expect;
  for (const auto& comp : bounded_compositions(2, 2, 3)) expect.emplace_back(comp.begin(), comp.end());
  CHECK(w_t == expect);
}

TEST_CASE("truncated matrix agrees with the tensor-power action on basis vectors") {
  // Apply g tensor-power-wise to each symmetrized basis vector and compare
  // with the column of the constructed matrix; this checks the construction
  // against a completely independent route through the ambient tensor power.
  SplitMix64 rng(83);
  for (long p : {2L, 3L})
    for (int n = 2; n <= 3; ++n)
      for (int l = 1; l <= std::min<long>(n * (p - 1), 4); ++l) {
        GF field(p);
        RepSpec rep = truncated_sym_rep(n, p, l);
        TruncatedBasis basis = tl_basis(n, l, p);
        long words = 1;
        for (int i = 0; i < l; ++i) words *= n;

        auto g = random_invertible(field, n, rng);
        auto rho = evaluate(rep, field, g);

        for (int col = 0; col < rep.m; ++col) {
          // left side: g^{(x) l} applied to v(k_col), densely
          std::vector<long> lhs(words, 0);
          for (auto [idx, coeff] : basis.vectors[col].entries) {
            std::vector<int> word(l);
            long x = idx;
            for (int t = l - 1; t >= 0; --t) {
              word[t] = static_cast<int>(x % n);
              x /= n;
            }
            std::vector<long> image(words, 0);
            image[0] = 1;
            long span = 1;
            for (int t = 0; t < l; ++t) {
              std::vector<long> next(words, 0);
              for (long idx2 = 0; idx2 < span; ++idx2) {
                if (image[idx2] == 0) continue;
                for (int j = 0; j < n; ++j)
                  next[idx2 * n + j] =
                      normalize_mod(next[idx2 * n + j] + image[idx2] * g.at(j, word[t])[0], p);
              }
              image = std::move(next);
              span *= n;
            }
            for (long w = 0; w < words; ++w)
              lhs[w] = normalize_mod(lhs[w] + coeff * image[w], p);
          }
          // right side: the matrix column applied to the basis vectors
          std::vector<long> rhs(words, 0);
          for (int row = 0; row < rep.m; ++row) {
            long a = rho.at(row, col)[0];
            if (a == 0) continue;
            for (auto [idx, coeff] : basis.vectors[row].entries)
              rhs[idx] = normalize_mod(rhs[idx] + a * coeff, p);
          }
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("functor weights agree with the constructed bases") {
  CHECK(diagonal_weights(sym_rep(2, 2, 0)) == functor_weights({Functor::Kind::sym, 2}, 2));
  CHECK(diagonal_weights(sym_rep(3, 2, 3)) == functor_weights({Functor::Kind::sym, 2}, 3));
  CHECK(diagonal_weights(truncated_sym_rep(2, 3, 2)) ==
        functor_weights({Functor::Kind::truncated, 2}, 2, 3));
  CHECK(diagonal_weights(wedge_lift(standard_rep(3, 0), 2)) ==
        functor_weights({Functor::Kind::wedge, 2}, 3));
  CHECK(diagonal_weights(tensor_product(standard_rep(2, 0), standard_rep(2, 0))) ==
        functor_weights({Functor::Kind::tensor_power, 2}, 2));
}

TEST_CASE("wedge lift reduces denominator entries") {
  RepSpec lifted = wedge_lift(adjoint_rep(2, 0), 2);
  CHECK(lifted.m == 6);
  validate_rep(lifted);  // reduced numerators, identity at the identity
  SplitMix64 rng(79);
  CHECK(multiplicative(lifted, 10, rng));
}

TEST_CASE("validation rejects malformed specs") {
  RepSpec bad = standard_rep(2, 0);
  bad.entries[0][0] = Poly::constant(2, 4, 0);
  CHECK_THROWS_AS(validate_rep(bad), std::invalid_argument);

  RepSpec unreduced = det_rep(2, 0);
  unreduced.denom[0][0] = 1;  // det/det: not in lowest terms
  CHECK_THROWS_AS(validate_rep(unreduced), std::invalid_argument);
}

}  // TEST_SUITE
