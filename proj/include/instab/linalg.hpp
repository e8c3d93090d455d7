#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "instab/common.hpp"
#include "instab/gf.hpp"

namespace instab {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c, const T& init) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, init) {}

  T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Exact solve of A x = b; nullopt when A is singular.
std::optional<RatVec> solve_rational(Mat<Rat> A, RatVec b);

template <class F>
typename F::Elem field_det(const F& field, Mat<typename F::Elem> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows;
  auto det = field.one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!field.is_zero(m.at(row, col))) {
        pivot = row;
        break;
      }
    if (pivot < 0) return field.zero();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = field.neg(det);
    }
    det = field.mul(det, m.at(col, col));
    auto inv = field.inv(m.at(col, col));
    for (int row = col + 1; row < n; ++row) {
      if (field.is_zero(m.at(row, col))) continue;
      auto factor = field.mul(m.at(row, col), inv);
      for (int j = col; j < n; ++j)
        m.at(row, j) = field.sub(m.at(row, j), field.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

template <class F>
Mat<typename F::Elem> mat_mul(const F& field, const Mat<typename F::Elem>& a,
                              const Mat<typename F::Elem>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
  Mat<typename F::Elem> r(a.rows, b.cols, field.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (field.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = field.add(r.at(i, j), field.mul(a.at(i, k), b.at(k, j)));
    }
  return r;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& field, const Mat<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& v) {
  if (a.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<typename F::Elem> r(a.rows, field.zero());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      r[i] = field.add(r[i], field.mul(a.at(i, j), v[j]));
  return r;
}

template <class F>
Mat<typename F::Elem> identity_mat(const F& field, int n) {
  Mat<typename F::Elem> id(n, n, field.zero());
  for (int i = 0; i < n; ++i) id.at(i, i) = field.one();
  return id;
}

// Incremental row reduction over F_p for sparse rows (sorted column/value
// pairs). Rows of the form x_a - x_b stay 2-sparse under reduction, so this
// handles large permutation-difference systems comfortably.
class FpEliminator {
public:
  using Row = std::vector<std::pair<long, long>>;

  explicit FpEliminator(long p) : p_(require_prime(p, "p")) {}

  // Returns true when the row was independent of the pool.
  bool add_row(Row row);
  long rank() const { return static_cast<long>(pool_.size()); }

private:
  long p_;
  std::vector<Row> pool_;                  // pivot-normalized rows
  std::map<long, std::size_t> pivots_;  // leading column -> pool index
};

}  // namespace instab
