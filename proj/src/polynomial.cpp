#include "lapgirth/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lapgirth {

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntegerPolynomial IntegerPolynomial::monomial(const mpz_class& coeff, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntegerPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int IntegerPolynomial::sign_at(const mpq_class& x) const {
  if (is_zero()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = coeffs_.back();
  mpz_class den_power = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_power *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_power;
  }
  return sgn(acc);
}

mpq_class IntegerPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

double IntegerPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntegerPolynomial(std::move(d));
}

mpz_class IntegerPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), c.get_mpz_t());
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const mpz_class& c, const IntegerPolynomial& p) {
  std::vector<mpz_class> out(p.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * p.coeffs_[k];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -coeffs_[k];
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = (mag == 1) && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const mpz_class lc_abs = abs(b.leading());
  const int lc_sign = sgn(b.leading());
  const int db = b.degree();
  std::vector<mpz_class> r = a.coefficients();
  int steps = a.degree() - db + 1;
  int deg = a.degree();
  const auto& bc = b.coefficients();
  while (deg >= db && deg >= 0) {
    // r <- |lc(b)| r - sgn(lc(b)) lc(r) x^(deg - db) b
    const mpz_class lead = lc_sign > 0 ? r[deg] : mpz_class(-r[deg]);
    const int shift = deg - db;
    for (int k = 0; k <= deg; ++k) r[k] *= lc_abs;
    for (int k = 0; k <= db; ++k) mpz_submul(r[k + shift].get_mpz_t(), lead.get_mpz_t(), bc[k].get_mpz_t());
    --steps;
    while (deg >= 0 && r[deg] == 0) --deg;
  }
  r.resize(static_cast<std::size_t>(deg + 1));
  if (steps > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lc_abs.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= scale;
  }
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial exact_quotient(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> r = a.coefficients();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  const int db = b.degree();
  for (int deg = a.degree(); deg >= db; --deg) {
    if (r[deg] == 0) continue;
    if (!mpz_divisible_p(r[deg].get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[deg].get_mpz_t(), b.leading().get_mpz_t());
    const int shift = deg - db;
    for (int k = 0; k <= db; ++k) mpz_submul(r[k + shift].get_mpz_t(), t.get_mpz_t(), bc[k].get_mpz_t());
    q[shift] = t;
  }
  for (int k = 0; k < db; ++k) {
    if (r[k] != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntegerPolynomial(std::move(q));
}

IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial x = a.primitive_part();
  IntegerPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntegerPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

mpq_class parse_rational(const std::string& text) {
  const auto fail = [&]() -> mpq_class {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  if (text.find('/') != std::string::npos) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    mpz_class p, q;
    if (num.empty() || den.empty() || p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0 || q == 0) {
      return fail();
    }
    mpq_class r(p, q);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  mpz_class digits = 0;
  long exponent = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (after_point) --exponent;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    ++i;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(i), &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != text.size() - i || std::labs(e) > 10000) return fail();
    exponent += e;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class r = exponent >= 0 ? mpq_class(digits * scale) : mpq_class(digits, scale);
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace lapgirth
