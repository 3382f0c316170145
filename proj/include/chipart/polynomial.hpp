#pragma once

#include <span>
#include <vector>

#include "chipart/error.hpp"
#include "chipart/scalar.hpp"

namespace chipart {

/// Monic real polynomial p(s) = s^n + a1 s^(n-1) + ... + an.
///
/// Only a1..an are stored; the leading 1 is implicit. Instances are
/// immutable once built.
template <Scalar T>
class Polynomial {
 public:
  /// Throws LengthMismatch unless coeffs.size() == degree >= 1, and
  /// NonFiniteCoefficient for NaN/inf in the float domain.
  Polynomial(int degree, std::vector<T> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }

  /// a_k with the Hurwitz-matrix conventions: a_0 = 1, a_k = 0 for k < 0 or
  /// k > n. Never throws.
  T coeff(int k) const {
    if (k == 0) return T(1);
    if (k < 0 || k > degree()) return T(0);
    return coeffs_[static_cast<std::size_t>(k - 1)];
  }

  /// a1..an in order.
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<T> coeffs_;
};

template <Scalar T>
Polynomial<T> make_polynomial(int degree, std::vector<T> coeffs) {
  return Polynomial<T>(degree, std::move(coeffs));
}

/// Correctly rounded conversion; overflow raises NonFiniteCoefficient.
Polynomial<double> to_float(const Polynomial<Rational>& p);

/// Exact conversion of each double.
Polynomial<Rational> to_exact(const Polynomial<double>& p);

/// True iff a_i > 0 for every i = 1..n.
template <Scalar T>
bool all_coeffs_positive(const Polynomial<T>& p) {
  for (const T& a : p.coeffs()) {
    if (!(a > T(0))) return false;
  }
  return true;
}

/// Divides a raw coefficient list [c0, c1, ..., cn] (c0 the leading
/// coefficient) through by c0. Throws PreconditionUnmet if c0 is zero.
template <Scalar T>
Polynomial<T> normalize_monic(std::span<const T> raw);

extern template class Polynomial<Rational>;
extern template class Polynomial<double>;

}  // namespace chipart
