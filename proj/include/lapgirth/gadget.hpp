#pragma once

#include "lapgirth/int_matrix.hpp"

namespace lapgirth {

// The (g+1) x (g+1) perturbation used when one cycle vertex carries all
// a = n - g outside vertices as pendants: a at (0, 0), 1 at (g, g),
// -1 at (0, g) and (g, 0), zero elsewhere.
IntegerSymMatrix pendant_perturbation(int a, int cycle_length);

// (1 + a - sqrt(a^2 - 2a + 5)) / 2
double pendant_perturbation_rho2(int a);

// (a + sqrt(a^2 - 2a + 5) - 1) / 2 - 1; non-negative and increasing for
// a >= 1, zero at a = 1.
double pendant_slack(int a);

struct Rho2Comparison {
  double closed_form = 0.0;
  double numeric = 0.0;
  double slack = 0.0;
};

// Closed form vs. the numeric second-largest eigenvalue of
// pendant_perturbation(a, g). Throws std::invalid_argument for a < 1 or
// g < 3, and std::logic_error if the slack comes out negative.
Rho2Comparison rho2_case2_gadget(int a, int cycle_length);

}  // namespace lapgirth
