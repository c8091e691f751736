#pragma once

#include <span>
#include <vector>

#include "lapgirth/int_matrix.hpp"

namespace lapgirth {

inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigenvalues of a dense symmetric matrix (row-major, order n) by cyclic
// Jacobi rotations, iterated until the off-diagonal Frobenius mass drops
// below 1e-12 times its initial value. Sorted descending. Throws
// std::runtime_error after 100 sweeps without convergence.
std::vector<double> symmetric_eigenvalues(std::span<const double> a, int n);

std::vector<double> numeric_eigenvalues(const IntegerSymMatrix& m);

}  // namespace lapgirth
