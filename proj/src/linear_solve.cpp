#include "linear_solve.hpp"

#include <utility>

namespace deltagames::detail {

LinearSolution solve_linear(std::vector<std::vector<Rational>> matrix,
                            std::vector<Rational> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sgn(matrix[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[row]);
    std::swap(rhs[pivot], rhs[row]);

    const Rational inv = 1 / matrix[row][col];
    for (std::size_t c = col; c < cols; ++c) matrix[row][c] *= inv;
    rhs[row] *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(matrix[r][col]) == 0) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) matrix[r][c] -= factor * matrix[row][c];
      rhs[r] -= factor * rhs[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  LinearSolution result;
  for (std::size_t r = row; r < rows; ++r) {
    if (sgn(rhs[r]) != 0) return result;  // 0 = nonzero
  }
  result.x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < row; ++r) result.x[pivot_col_of_row[r]] = rhs[r];
  result.status = row == cols ? LinearSolution::Status::kUnique
                              : LinearSolution::Status::kUnderdetermined;
  return result;
}

}  // namespace deltagames::detail
