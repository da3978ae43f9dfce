#include "susy/linalg.hpp"

namespace susy {

namespace {

// Row echelon elimination in place; returns pivot columns.
std::vector<int> eliminate(RationalMatrix& a, std::vector<Rational>* b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    if (b) std::swap((*b)[pivot], (*b)[row]);
    Rational inv = a[row][col].inverse();
    for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
    if (b) (*b)[row] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational factor = a[r][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      if (b) (*b)[r] -= factor * (*b)[row];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix a) {
  return static_cast<int>(eliminate(a, nullptr).size());
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw domain_error("right-hand side size mismatch");
  std::vector<int> pivots = eliminate(a, &b);
  if (pivots.size() != cols) return std::nullopt;  // rank-deficient
  for (size_t r = pivots.size(); r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;  // inconsistent
  std::vector<Rational> solution(cols, Rational(0));
  for (size_t k = 0; k < pivots.size(); ++k) solution[pivots[k]] = b[k];
  return solution;
}

}  // namespace susy
