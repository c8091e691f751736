#pragma once

#include <vector>

#include "lapgirth/polynomial.hpp"

namespace lapgirth {

struct SquareFreeFactor {
  IntegerPolynomial factor;  // primitive, positive leading coefficient
  int multiplicity = 0;
};

// p = c * prod factor_i ^ multiplicity_i with the factors square-free,
// pairwise coprime and non-constant. Ordered by increasing multiplicity.
struct SquareFreeDecomposition {
  std::vector<SquareFreeFactor> factors;
};

// Yun's algorithm over the integers (primitive gcds, exact quotients).
// Throws std::domain_error for the zero polynomial.
SquareFreeDecomposition square_free_decompose(const IntegerPolynomial& p);

// Sturm chain of a square-free polynomial. Successive remainders are
// pseudo-remainders rescaled by positive constants, which leaves every
// sign variation count unchanged.
class SturmChain {
 public:
  explicit SturmChain(const IntegerPolynomial& square_free);

  // Sign variations of the chain at x, zeros skipped.
  int variations_at(const mpq_class& x) const;

  // Distinct roots in (a, b]; requires a < b.
  int count_distinct(const mpq_class& a, const mpq_class& b) const;

  const std::vector<IntegerPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntegerPolynomial> chain_;
};

struct FactorRootCount {
  int multiplicity = 0;
  int distinct_roots = 0;       // in (a, b]
  bool vanishes_at_lower = false;
  bool vanishes_at_upper = false;
};

struct IntervalRootCount {
  int count = 0;  // with multiplicity
  int multiplicity_at_lower = 0;
  int multiplicity_at_upper = 0;
  std::vector<FactorRootCount> per_factor;  // parallel to the decomposition
};

// Real roots of p in the half-open interval (a, b], counted with
// multiplicity. Throws std::invalid_argument unless a < b and
// std::domain_error if p is zero.
int count_roots_in_interval(const IntegerPolynomial& p, const mpq_class& a, const mpq_class& b);

IntervalRootCount count_roots_in_interval(const SquareFreeDecomposition& d,
                                          const mpq_class& a, const mpq_class& b);

// Multiplicity of x as a root of p (0 if not a root).
int root_multiplicity(const SquareFreeDecomposition& d, const mpq_class& x);

}  // namespace lapgirth
