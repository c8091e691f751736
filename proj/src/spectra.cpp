#include "lapgirth/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lapgirth/int_matrix.hpp"
#include "lapgirth/jacobi.hpp"

namespace lapgirth {

SineSquared SineSquared::make(long k, long m) {
  if (m <= 0) throw std::invalid_argument("sine tag needs a positive denominator");
  long r = ((k % m) + m) % m;
  if (2 * r > m) r = m - r;
  const long d = std::gcd(r, m);
  return {r / d, m / d};
}

double SpectralValue::approx() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  const auto& s = std::get<SineSquared>(value_);
  const double x = std::sin(std::numbers::pi * static_cast<double>(s.k) / static_cast<double>(s.m));
  return 4.0 * x * x;
}

std::optional<mpq_class> SpectralValue::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  const auto& s = std::get<SineSquared>(value_);
  if (s.k == 0) return mpq_class(0);
  if (s.k != 1) return std::nullopt;
  switch (s.m) {
    case 2: return mpq_class(4);
    case 3: return mpq_class(3);
    case 4: return mpq_class(2);
    case 6: return mpq_class(1);
    default: return std::nullopt;
  }
}

std::string SpectralValue::to_string() const {
  if (auto q = as_rational()) return q->get_str();
  const auto& s = std::get<SineSquared>(value_);
  return "4sin^2(" + std::to_string(s.k) + "pi/" + std::to_string(s.m) + ")";
}

bool operator==(const SpectralValue& a, const SpectralValue& b) {
  const auto qa = a.as_rational();
  const auto qb = b.as_rational();
  if (qa && qb) return *qa == *qb;
  if (qa || qb) return false;
  return std::get<SineSquared>(a.value_) == std::get<SineSquared>(b.value_);
}

int ClosedFormSpectrum::order() const {
  int n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

std::vector<double> ClosedFormSpectrum::values_descending() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.approx());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string ClosedFormSpectrum::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.value.to_string();
    if (e.multiplicity > 1) out += "×" + std::to_string(e.multiplicity);
  }
  return out;
}

namespace {

void add_value(ClosedFormSpectrum& s, const SpectralValue& v, int multiplicity) {
  if (multiplicity <= 0) return;
  for (auto& e : s.entries) {
    if (e.value == v) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  s.entries.push_back({v, multiplicity});
}

void sort_ascending(ClosedFormSpectrum& s) {
  std::sort(s.entries.begin(), s.entries.end(),
            [](const auto& a, const auto& b) { return a.value.approx() < b.value.approx(); });
}

}  // namespace

ClosedFormSpectrum cycle_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("cycle spectrum needs n >= 3");
  ClosedFormSpectrum s;
  for (int k = 1; k <= n; ++k) add_value(s, SineSquared::make(k, n), 1);
  sort_ascending(s);
  return s;
}

ClosedFormSpectrum path_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("path spectrum needs n >= 1");
  ClosedFormSpectrum s;
  for (int k = 1; k <= n; ++k) add_value(s, SineSquared::make(n - k, 2L * n), 1);
  sort_ascending(s);
  return s;
}

ClosedFormSpectrum multipartite_spectrum(std::span<const int> parts) {
  if (parts.size() < 2) throw std::invalid_argument("multipartite spectrum needs at least two parts");
  int n = 0;
  for (int r : parts) {
    if (r < 1) throw std::invalid_argument("part sizes must be positive");
    n += r;
  }
  ClosedFormSpectrum s;
  add_value(s, mpq_class(0), 1);
  for (int r : parts) add_value(s, mpq_class(n - r), r - 1);
  add_value(s, mpq_class(n), static_cast<int>(parts.size()) - 1);
  sort_ascending(s);
  return s;
}

ExactLaplacianSpectrum::ExactLaplacianSpectrum(const Graph& g)
    : characteristic_(char_poly(laplacian(g))),
      decomposition_(square_free_decompose(characteristic_)) {
  chains_.reserve(decomposition_.factors.size());
  for (const auto& f : decomposition_.factors) chains_.emplace_back(f.factor);
}

int ExactLaplacianSpectrum::count(const mpq_class& lower, const mpq_class& upper) const {
  if (!(lower < upper)) throw std::invalid_argument("degenerate interval: need lower < upper");
  int total = 0;
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    total += decomposition_.factors[i].multiplicity * chains_[i].count_distinct(lower, upper);
  }
  return total;
}

int ExactLaplacianSpectrum::multiplicity(const mpq_class& x) const {
  return root_multiplicity(decomposition_, x);
}

IntervalCountCertificate ExactLaplacianSpectrum::certificate(const mpq_class& lower,
                                                             const mpq_class& upper) const {
  if (!(lower < upper)) throw std::invalid_argument("degenerate interval: need lower < upper");
  IntervalCountCertificate cert;
  cert.lower = lower;
  cert.upper = upper;
  cert.characteristic = characteristic_;
  cert.decomposition = decomposition_;
  cert.roots = count_roots_in_interval(decomposition_, lower, upper);
  return cert;
}

IntervalCountCertificate m_interval(const Graph& g, const mpq_class& lower, const mpq_class& upper) {
  if (!(lower < upper)) throw std::invalid_argument("degenerate interval: need lower < upper");
  return ExactLaplacianSpectrum(g).certificate(lower, upper);
}

std::vector<double> laplacian_eigenvalues(const Graph& g) { return numeric_eigenvalues(laplacian(g)); }

double mu_k(const Graph& g, int k) {
  if (k < 1 || k > g.order()) throw std::out_of_range("eigenvalue index out of range");
  return laplacian_eigenvalues(g)[static_cast<std::size_t>(k) - 1];
}

HybridCount hybrid_interval_count(const ExactLaplacianSpectrum& exact, std::span<const double> numeric,
                                  const mpq_class& lower, const mpq_class& upper) {
  if (!(lower < upper)) throw std::invalid_argument("degenerate interval: need lower < upper");
  const double a = lower.get_d();
  const double b = upper.get_d();
  HybridCount out;
  bool near_lower = false;
  bool near_upper = false;
  for (double x : numeric) {
    if (std::abs(x - a) <= kEndpointEpsilon) {
      near_lower = true;
      ++out.resolved_exactly;
    } else if (std::abs(x - b) <= kEndpointEpsilon) {
      near_upper = true;
      ++out.resolved_exactly;
    } else if (x > a && x <= b) {
      ++out.count;
    }
  }
  const mpq_class eps(1, 1000000);
  // If the interval is shorter than two epsilons the neighbourhoods overlap;
  // the exact count over the whole interval is then the only sound answer.
  if ((near_lower || near_upper) && upper - lower <= 2 * eps) return {exact.count(lower, upper), out.resolved_exactly};
  if (near_lower) out.count += exact.count(lower, lower + eps);
  if (near_upper) out.count += exact.count(upper - eps, upper);
  return out;
}

}  // namespace lapgirth
