#pragma once

#include <vector>

#include "chipart/polynomial.hpp"

namespace chipart {

/// Dense row-major square matrix; just enough for Hurwitz minors.
template <Scalar T>
class SquareMatrix {
 public:
  explicit SquareMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size * size), T(0)) {}

  int size() const noexcept { return size_; }
  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * size_ + c); }

  int size_;
  std::vector<T> data_;
};

/// Leading i x i block of the Hurwitz matrix of p. With 1-based (row, col)
/// the entry is a_{2col - row} (a_0 = 1, zero outside 0..n); the returned
/// matrix is 0-based. Throws IndexOutOfRange unless 1 <= i <= degree.
template <Scalar T>
SquareMatrix<T> hurwitz_matrix(const Polynomial<T>& p, int i);

/// Determinant by elimination: fraction-free Bareiss over integers for
/// rationals (rows are scaled to clear denominators first), partial
/// pivoting for doubles.
template <Scalar T>
T determinant(const SquareMatrix<T>& m);

/// Laplace expansion along the first column. Exponential cost; intended for
/// sizes up to 4 where it serves as a second, independent code path.
template <Scalar T>
T determinant_cofactor(const SquareMatrix<T>& m);

/// Delta_i, the i-th leading principal Hurwitz minor.
template <Scalar T>
T hurwitz_minor_det(const Polynomial<T>& p, int i);

/// Delta_1 .. Delta_n.
template <Scalar T>
std::vector<T> hurwitz_minors(const Polynomial<T>& p);

/// a1 a2 - a3 (a3 reads as 0 below degree 3).
template <Scalar T>
T delta2(const Polynomial<T>& p);

/// Factored Delta_4 with A = a5 - a1 a4, B = a7 - a1 a6, D = Delta_2:
///   -a2 A D - a4 D^2 - A^2 - B D.
/// Valid for every degree >= 4; coefficients past the degree read as 0.
template <Scalar T>
T delta4_factored(const Polynomial<T>& p);

/// The eleven-term first-column expansion of the 4 x 4 Hurwitz minor.
template <Scalar T>
T delta4_expanded(const Polynomial<T>& p);

}  // namespace chipart
