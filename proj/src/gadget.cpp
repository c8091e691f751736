#include "lapgirth/gadget.hpp"

#include <cmath>
#include <stdexcept>

#include "lapgirth/jacobi.hpp"

namespace lapgirth {

IntegerSymMatrix pendant_perturbation(int a, int cycle_length) {
  if (a < 1) throw std::invalid_argument("pendant count a must be >= 1");
  if (cycle_length < 3) throw std::invalid_argument("cycle length must be >= 3");
  IntegerSymMatrix m(cycle_length + 1);
  m.set(0, 0, a);
  m.set(0, cycle_length, -1);
  m.set(cycle_length, cycle_length, 1);
  return m;
}

double pendant_perturbation_rho2(int a) {
  const double x = a;
  return (1.0 + x - std::sqrt(x * x - 2.0 * x + 5.0)) / 2.0;
}

double pendant_slack(int a) {
  const double x = a;
  return (x + std::sqrt(x * x - 2.0 * x + 5.0) - 1.0) / 2.0 - 1.0;
}

Rho2Comparison rho2_case2_gadget(int a, int cycle_length) {
  const IntegerSymMatrix m = pendant_perturbation(a, cycle_length);
  Rho2Comparison out;
  out.closed_form = pendant_perturbation_rho2(a);
  out.numeric = numeric_eigenvalues(m)[1];
  out.slack = pendant_slack(a);
  if (out.slack < 0.0) throw std::logic_error("pendant slack f(a) is negative");
  return out;
}

}  // namespace lapgirth
