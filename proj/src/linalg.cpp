#include "instab/linalg.hpp"

namespace instab {

std::optional<RatVec> solve_rational(Mat<Rat> A, RatVec b) {
  if (A.rows != A.cols || A.rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_rational expects a square system");
  int n = A.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (sgn(A.at(row, col)) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      std::swap(b[pivot], b[col]);
    }
    Rat inv = 1 / A.at(col, col);
    for (int j = col; j < n; ++j) A.at(col, j) *= inv;
    b[col] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || sgn(A.at(row, col)) == 0) continue;
      Rat factor = A.at(row, col);
      for (int j = col; j < n; ++j) A.at(row, j) -= factor * A.at(col, j);
      b[row] -= factor * b[col];
    }
  }
  return b;
}

bool FpEliminator::add_row(Row row) {
  for (auto& [col, val] : row) val = normalize_mod(val, p_);
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }),
            row.end());
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      // normalize leading coefficient to 1 and keep as a new pivot row
      long scale = inv_mod(row.front().second, p_);
      for (auto& [col, val] : row) val = normalize_mod(val * scale, p_);
      pivots_.emplace(row.front().first, pool_.size());
      pool_.push_back(std::move(row));
      return true;
    }
    const Row& pivot_row = pool_[it->second];
    long factor = row.front().second;  // pivot rows are monic
    Row merged;
    merged.reserve(row.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot_row.size()) {
      if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
        merged.push_back(row[i++]);
      } else if (i == row.size() || pivot_row[j].first < row[i].first) {
        merged.emplace_back(pivot_row[j].first, normalize_mod(-factor * pivot_row[j].second, p_));
        ++j;
      } else {
        long v = normalize_mod(row[i].second - factor * pivot_row[j].second, p_);
        if (v != 0) merged.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    row = std::move(merged);
  }
  return false;
}

}  // namespace instab
