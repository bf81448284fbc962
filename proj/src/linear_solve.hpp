#ifndef DELTAGAMES_SRC_LINEAR_SOLVE_HPP
#define DELTAGAMES_SRC_LINEAR_SOLVE_HPP

#include <vector>

#include "deltagames/rational.hpp"

namespace deltagames::detail {

struct LinearSolution {
  enum class Status { kUnique, kUnderdetermined, kInconsistent };
  Status status = Status::kInconsistent;
  // For kUnderdetermined: the basic solution with every free variable at 0.
  std::vector<Rational> x;
};

// Exact Gauss-Jordan elimination on the square or rectangular system
// matrix * x = rhs. `matrix` is row-major with rhs.size() rows.
LinearSolution solve_linear(std::vector<std::vector<Rational>> matrix,
                            std::vector<Rational> rhs);

}  // namespace deltagames::detail

#endif  // DELTAGAMES_SRC_LINEAR_SOLVE_HPP
