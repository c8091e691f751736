#include "lapgirth/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lapgirth {

namespace {

double off_diagonal_mass(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sum += 2.0 * a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::span<const double> input, int n) {
  if (n < 0 || input.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix data does not match its order");
  }
  std::vector<double> a(input.begin(), input.end());
  const double initial = off_diagonal_mass(a, n);
  const double target = kJacobiRelativeTolerance * initial;

  int sweep = 0;
  for (double mass = initial; mass > target && mass > 0.0; mass = off_diagonal_mass(a, n)) {
    if (++sweep > kJacobiMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle zeroing (p, q); t is the smaller root of
        // t^2 + 2 theta t - 1 = 0.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> numeric_eigenvalues(const IntegerSymMatrix& m) {
  return symmetric_eigenvalues(m.to_doubles(), m.order());
}

}  // namespace lapgirth
