#include "lapgirth/root_counting.hpp"

#include <stdexcept>

namespace lapgirth {

SquareFreeDecomposition square_free_decompose(const IntegerPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  SquareFreeDecomposition out;
  const IntegerPolynomial a = p.primitive_part();
  if (a.degree() == 0) return out;

  const IntegerPolynomial da = a.derivative();
  const IntegerPolynomial c = gcd(a, da);
  IntegerPolynomial w = exact_quotient(a, c);
  IntegerPolynomial y = exact_quotient(da, c);
  IntegerPolynomial z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    const IntegerPolynomial g = gcd(w, z);
    if (g.degree() > 0) out.factors.push_back({g, i});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  return out;
}

SturmChain::SturmChain(const IntegerPolynomial& square_free) {
  if (square_free.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(square_free);
  IntegerPolynomial next = square_free.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const IntegerPolynomial& prev = chain_[chain_.size() - 2];
    IntegerPolynomial r = pseudo_remainder(prev, chain_.back());
    if (r.is_zero()) break;
    // -rem, divided by its (positive) content
    const mpz_class content = r.content();
    std::vector<mpz_class> scaled(r.coefficients().size());
    for (std::size_t k = 0; k < scaled.size(); ++k) {
      mpz_divexact(scaled[k].get_mpz_t(), r.coefficients()[k].get_mpz_t(), content.get_mpz_t());
      scaled[k] = -scaled[k];
    }
    next = IntegerPolynomial(std::move(scaled));
  }
}

int SturmChain::variations_at(const mpq_class& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::count_distinct(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) throw std::invalid_argument("degenerate interval: need a < b");
  return variations_at(a) - variations_at(b);
}

IntervalRootCount count_roots_in_interval(const SquareFreeDecomposition& d,
                                          const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw std::invalid_argument("degenerate interval: need a < b");
  IntervalRootCount out;
  for (const auto& f : d.factors) {
    FactorRootCount fc;
    fc.multiplicity = f.multiplicity;
    fc.distinct_roots = SturmChain(f.factor).count_distinct(a, b);
    fc.vanishes_at_lower = f.factor.sign_at(a) == 0;
    fc.vanishes_at_upper = f.factor.sign_at(b) == 0;
    out.count += fc.distinct_roots * f.multiplicity;
    if (fc.vanishes_at_lower) out.multiplicity_at_lower += f.multiplicity;
    if (fc.vanishes_at_upper) out.multiplicity_at_upper += f.multiplicity;
    out.per_factor.push_back(fc);
  }
  return out;
}

int count_roots_in_interval(const IntegerPolynomial& p, const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw std::invalid_argument("degenerate interval: need a < b");
  return count_roots_in_interval(square_free_decompose(p), a, b).count;
}

int root_multiplicity(const SquareFreeDecomposition& d, const mpq_class& x) {
  int m = 0;
  for (const auto& f : d.factors) {
    if (f.factor.sign_at(x) == 0) m += f.multiplicity;
  }
  return m;
}

}  // namespace lapgirth
