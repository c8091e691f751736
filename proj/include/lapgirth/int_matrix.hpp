#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "lapgirth/graph.hpp"
#include "lapgirth/polynomial.hpp"

namespace lapgirth {

// Symmetric matrix with arbitrary-precision integer entries, row-major.
class IntegerSymMatrix {
 public:
  explicit IntegerSymMatrix(int order);
  // Throws std::invalid_argument if `rows` is ragged or not symmetric.
  explicit IntegerSymMatrix(const std::vector<std::vector<long>>& rows);

  static IntegerSymMatrix diagonal(std::span<const long> values);

  int order() const { return n_; }
  const mpz_class& operator()(int i, int j) const { return a_[index(i, j)]; }
  // Writes both (i, j) and (j, i).
  void set(int i, int j, const mpz_class& value);

  IntegerSymMatrix principal_submatrix(std::span<const int> indices) const;
  // Pads with zero rows/columns up to `order`.
  IntegerSymMatrix padded(int order) const;

  friend IntegerSymMatrix operator+(const IntegerSymMatrix& a, const IntegerSymMatrix& b);
  friend bool operator==(const IntegerSymMatrix&, const IntegerSymMatrix&) = default;

  std::vector<double> to_doubles() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<mpz_class> a_;
};

// L(G) = D(G) - A(G).
IntegerSymMatrix laplacian(const Graph& g);

// det(xI - M) by the Faddeev-LeVerrier recurrence
//   N_k = M N_(k-1) + c_(n-k+1) I,  c_(n-k) = -tr(M N_k) / k,
// every division exact. Zero entries of M are skipped in the products.
IntegerPolynomial char_poly(const IntegerSymMatrix& m);

}  // namespace lapgirth
