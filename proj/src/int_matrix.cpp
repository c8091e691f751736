#include "lapgirth/int_matrix.hpp"

#include <stdexcept>

namespace lapgirth {

IntegerSymMatrix::IntegerSymMatrix(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("matrix order must be non-negative");
  a_.resize(static_cast<std::size_t>(order) * order);
}

IntegerSymMatrix::IntegerSymMatrix(const std::vector<std::vector<long>>& rows)
    : IntegerSymMatrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw std::invalid_argument("matrix rows are ragged");
    for (int j = 0; j < n_; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      a_[index(i, j)] = rows[i][j];
    }
  }
}

IntegerSymMatrix IntegerSymMatrix::diagonal(std::span<const long> values) {
  IntegerSymMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.n_; ++i) m.a_[m.index(i, i)] = values[i];
  return m;
}

void IntegerSymMatrix::set(int i, int j, const mpz_class& value) {
  a_[index(i, j)] = value;
  a_[index(j, i)] = value;
}

IntegerSymMatrix IntegerSymMatrix::principal_submatrix(std::span<const int> indices) const {
  for (int idx : indices) {
    if (idx < 0 || idx >= n_) throw std::out_of_range("principal submatrix index");
  }
  IntegerSymMatrix m(static_cast<int>(indices.size()));
  for (int i = 0; i < m.n_; ++i) {
    for (int j = 0; j < m.n_; ++j) {
      m.a_[m.index(i, j)] = (*this)(indices[i], indices[j]);
    }
  }
  return m;
}

IntegerSymMatrix IntegerSymMatrix::padded(int order) const {
  if (order < n_) throw std::invalid_argument("cannot pad to a smaller order");
  IntegerSymMatrix m(order);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m.a_[m.index(i, j)] = (*this)(i, j);
  }
  return m;
}

IntegerSymMatrix operator+(const IntegerSymMatrix& a, const IntegerSymMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix orders differ");
  IntegerSymMatrix m(a.n_);
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
  return m;
}

std::vector<double> IntegerSymMatrix::to_doubles() const {
  std::vector<double> out(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].get_d();
  return out;
}

IntegerSymMatrix laplacian(const Graph& g) {
  const int n = g.order();
  IntegerSymMatrix m(n);
  for (int v = 0; v < n; ++v) m.set(v, v, g.degree(v));
  for (const auto& [u, v] : g.edges()) m.set(u, v, -1);
  return m;
}

IntegerPolynomial char_poly(const IntegerSymMatrix& m) {
  const int n = m.order();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[n] = 1;
  if (n == 0) return IntegerPolynomial(std::move(coeffs));

  // Sparse rows of M.
  std::vector<std::vector<std::pair<int, mpz_class>>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != 0) rows[i].emplace_back(j, m(i, j));
    }
  }

  // N_1 = I; we carry P_k = M N_k and form N_(k+1) = P_k + c I.
  std::vector<mpz_class> prod(static_cast<std::size_t>(n) * n);
  std::vector<mpz_class> next(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, v] : rows[i]) prod[static_cast<std::size_t>(i) * n + j] = v;
  }
  for (int k = 1; k <= n; ++k) {
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += prod[static_cast<std::size_t>(i) * n + i];
    mpz_class c = -trace;
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("Faddeev-LeVerrier division not exact");
    }
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = c;
    if (k == n) break;
    // N_(k+1) = P_k + c I, then P_(k+1) = M N_(k+1).
    for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i) * n + i] += c;
    for (int i = 0; i < n; ++i) {
      mpz_class* out_row = &next[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) out_row[j] = 0;
      for (const auto& [l, v] : rows[i]) {
        const mpz_class* in_row = &prod[static_cast<std::size_t>(l) * n];
        for (int j = 0; j < n; ++j) {
          mpz_addmul(out_row[j].get_mpz_t(), v.get_mpz_t(), in_row[j].get_mpz_t());
        }
      }
    }
    std::swap(prod, next);
  }
  return IntegerPolynomial(std::move(coeffs));
}

}  // namespace lapgirth
