#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lapgirth/graph.hpp"
#include "lapgirth/polynomial.hpp"
#include "lapgirth/root_counting.hpp"

namespace lapgirth {

// 4 sin^2(k pi / m), kept in the reduced form 0 <= k/m <= 1/2 so that equal
// values have equal tags.
struct SineSquared {
  long k = 0;
  long m = 1;

  static SineSquared make(long k, long m);
  friend bool operator==(const SineSquared&, const SineSquared&) = default;
};

class SpectralValue {
 public:
  SpectralValue(const mpq_class& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  SpectralValue(SineSquared s) : value_(s) {}       // NOLINT(google-explicit-constructor)

  double approx() const;
  // Exact rational value when there is one (every 4 sin^2 with k/m in
  // {0, 1/6, 1/4, 1/3, 1/2} is an integer).
  std::optional<mpq_class> as_rational() const;
  // "3", "5/2", or "4sin^2(1pi/5)".
  std::string to_string() const;

  friend bool operator==(const SpectralValue& a, const SpectralValue& b);

 private:
  std::variant<mpq_class, SineSquared> value_;
};

// Multiset of Laplacian eigenvalues in closed form, ascending by value.
struct ClosedFormSpectrum {
  struct Entry {
    SpectralValue value;
    int multiplicity;
  };
  std::vector<Entry> entries;

  int order() const;
  // Every eigenvalue repeated by multiplicity, descending.
  std::vector<double> values_descending() const;
  // "0, 2x2, 3, 5"
  std::string to_string() const;
};

// Laplacian spectrum of C_n: 4 sin^2(k pi / n), k = 1..n. Requires n >= 3.
ClosedFormSpectrum cycle_spectrum(int n);
// Laplacian spectrum of P_n: 4 sin^2((n - k) pi / 2n), k = 1..n.
ClosedFormSpectrum path_spectrum(int n);
// K_{r1..rt}: 0, n - r_i with multiplicity r_i - 1, n with multiplicity
// t - 1. Requires t >= 2.
ClosedFormSpectrum multipartite_spectrum(std::span<const int> parts);

// Exact count of Laplacian eigenvalues in (lower, upper] plus the
// evidence it was computed from.
struct IntervalCountCertificate {
  mpq_class lower;
  mpq_class upper;
  IntegerPolynomial characteristic;
  SquareFreeDecomposition decomposition;
  IntervalRootCount roots;

  int count() const { return roots.count; }
  bool lower_is_eigenvalue() const { return roots.multiplicity_at_lower > 0; }
  bool upper_is_eigenvalue() const { return roots.multiplicity_at_upper > 0; }
};

// Characteristic polynomial of L(G), its square-free decomposition and one
// Sturm chain per factor, built once and reused for many interval queries.
class ExactLaplacianSpectrum {
 public:
  explicit ExactLaplacianSpectrum(const Graph& g);

  // Eigenvalues in (lower, upper] with multiplicity; requires lower < upper.
  int count(const mpq_class& lower, const mpq_class& upper) const;
  // Multiplicity of x as an eigenvalue.
  int multiplicity(const mpq_class& x) const;
  IntervalCountCertificate certificate(const mpq_class& lower, const mpq_class& upper) const;

  const IntegerPolynomial& characteristic() const { return characteristic_; }
  const SquareFreeDecomposition& decomposition() const { return decomposition_; }

 private:
  IntegerPolynomial characteristic_;
  SquareFreeDecomposition decomposition_;
  std::vector<SturmChain> chains_;
};

// m_G(lower, upper]. Throws std::invalid_argument unless lower < upper.
IntervalCountCertificate m_interval(const Graph& g, const mpq_class& lower, const mpq_class& upper);

// All Laplacian eigenvalues, descending.
std::vector<double> laplacian_eigenvalues(const Graph& g);

// k-th largest Laplacian eigenvalue, 1 <= k <= n. Throws std::out_of_range.
double mu_k(const Graph& g, int k);

inline constexpr double kEndpointEpsilon = 1e-6;

struct HybridCount {
  int count = 0;
  int resolved_exactly = 0;  // numeric eigenvalues that fell within epsilon of an endpoint
};

// Counts `numeric` eigenvalues in (lower, upper]. Values within
// kEndpointEpsilon of an endpoint are not trusted; the exact engine counts
// that neighbourhood instead.
HybridCount hybrid_interval_count(const ExactLaplacianSpectrum& exact, std::span<const double> numeric,
                                  const mpq_class& lower, const mpq_class& upper);

}  // namespace lapgirth
