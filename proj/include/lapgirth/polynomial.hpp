#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace lapgirth {

// Dense univariate polynomial with arbitrary-precision integer
// coefficients, ascending by degree. Trailing zeros are trimmed, so the
// zero polynomial has no coefficients and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<mpz_class> ascending);
  IntegerPolynomial(std::initializer_list<long> ascending);

  static IntegerPolynomial monomial(const mpz_class& coeff, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  mpz_class coefficient(int k) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  // Sign of p(num/den), den > 0, computed exactly as sign(den^d * p(num/den)).
  int sign_at(const mpq_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  IntegerPolynomial derivative() const;
  mpz_class content() const;
  // Divided by the content, leading coefficient made positive.
  IntegerPolynomial primitive_part() const;

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const mpz_class& c, const IntegerPolynomial& p);
  IntegerPolynomial operator-() const;

  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "x^3 - 6*x^2 + 9*x"
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

// Remainder r of |lc(b)|^(deg a - deg b + 1) * a by b. The multiplier is
// positive, so r has the sign pattern of the true remainder scaled by a
// positive constant. Throws std::domain_error if b is zero.
IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b);

// Quotient a / b when b divides a over the rationals and the quotient has
// integer coefficients (always the case for primitive b). Throws
// std::domain_error otherwise.
IntegerPolynomial exact_quotient(const IntegerPolynomial& a, const IntegerPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

// Arbitrary-precision rational from "7", "-3/2", "2.75", "-1e-6".
// Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

std::string rational_to_string(const mpq_class& q);

}  // namespace lapgirth
