#include "chipart/hurwitz.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace chipart {

namespace {

void require_minor_index(int degree, int i) {
  if (i < 1 || i > degree) {
    throw Error(ErrorKind::IndexOutOfRange,
                "minor index " + std::to_string(i) + " outside 1.." + std::to_string(degree));
  }
}

void require_degree(int degree, int minimum, const char* what) {
  if (degree < minimum) {
    throw Error(ErrorKind::DegreeTooSmall, std::string(what) + " needs degree >= " +
                                               std::to_string(minimum) + ", got " +
                                               std::to_string(degree));
  }
}

Rational bareiss_determinant(const SquareMatrix<Rational>& m) {
  const int n = m.size();
  if (n == 0) return Rational(1);

  // Clear denominators row by row: det(m) = det(scaled) / prod(row scale).
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  mpz_class scale_product = 1;
  for (int r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (int c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    scale_product *= row_lcm;
    for (int c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).raw();
      a[static_cast<std::size_t>(r * n + c)] = q.get_num() * (row_lcm / q.get_den());
    }
  }
  auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<std::size_t>(r * n + c)]; };

  int sign = 1;
  mpz_class previous_pivot = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return Rational(0);
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        mpz_class t = at(k, k) * at(r, c) - at(r, k) * at(k, c);
        mpz_divexact(at(r, c).get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      at(r, k) = 0;
    }
    previous_pivot = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return Rational(det, scale_product);
}

double pivoted_determinant(const SquareMatrix<double>& m) {
  const int n = m.size();
  SquareMatrix<double> a = m;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    }
    if (a(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det = -det;
    }
    det *= a(k, k);
    for (int r = k + 1; r < n; ++r) {
      const double factor = a(r, k) / a(k, k);
      for (int c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return det;
}

template <Scalar T>
SquareMatrix<T> drop_row_col(const SquareMatrix<T>& m, int row, int col) {
  SquareMatrix<T> out(m.size() - 1);
  for (int r = 0, rr = 0; r < m.size(); ++r) {
    if (r == row) continue;
    for (int c = 0, cc = 0; c < m.size(); ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

template <Scalar T>
SquareMatrix<T> hurwitz_matrix(const Polynomial<T>& p, int i) {
  require_minor_index(p.degree(), i);
  SquareMatrix<T> m(i);
  for (int r = 1; r <= i; ++r) {
    for (int c = 1; c <= i; ++c) m(r - 1, c - 1) = p.coeff(2 * c - r);
  }
  return m;
}

template <Scalar T>
T determinant(const SquareMatrix<T>& m) {
  if constexpr (is_exact_v<T>) {
    return bareiss_determinant(m);
  } else {
    return pivoted_determinant(m);
  }
}

template <Scalar T>
T determinant_cofactor(const SquareMatrix<T>& m) {
  const int n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T sum(0);
  for (int r = 0; r < n; ++r) {
    if (m(r, 0) == T(0)) continue;
    const T term = m(r, 0) * determinant_cofactor(drop_row_col(m, r, 0));
    if (r % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

template <Scalar T>
T hurwitz_minor_det(const Polynomial<T>& p, int i) {
  return determinant(hurwitz_matrix(p, i));
}

template <Scalar T>
std::vector<T> hurwitz_minors(const Polynomial<T>& p) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out.push_back(hurwitz_minor_det(p, i));
  return out;
}

template <Scalar T>
T delta2(const Polynomial<T>& p) {
  require_degree(p.degree(), 2, "Delta_2");
  return p.coeff(1) * p.coeff(2) - p.coeff(3);
}

template <Scalar T>
T delta4_factored(const Polynomial<T>& p) {
  require_degree(p.degree(), 4, "Delta_4");
  const T a1 = p.coeff(1), a2 = p.coeff(2), a4 = p.coeff(4);
  const T A = p.coeff(5) - a1 * a4;
  const T B = p.coeff(7) - a1 * p.coeff(6);
  const T D = delta2(p);
  return -a2 * A * D - a4 * D * D - A * A - B * D;
}

template <Scalar T>
T delta4_expanded(const Polynomial<T>& p) {
  require_degree(p.degree(), 4, "Delta_4");
  const T a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3), a4 = p.coeff(4);
  const T a5 = p.coeff(5), a6 = p.coeff(6), a7 = p.coeff(7);
  const T two(2);
  return a1 * a2 * a3 * a4 + two * a1 * a4 * a5 - a1 * a2 * a2 * a5 - a1 * a1 * a4 * a4 -
         a3 * a3 * a4 - a5 * a5 + a2 * a3 * a5 + a1 * a1 * a2 * a6 - a1 * a3 * a6 -
         a1 * a2 * a7 + a3 * a7;
}

#define CHIPART_INSTANTIATE(T)                                                 \
  template SquareMatrix<T> hurwitz_matrix<T>(const Polynomial<T>&, int);      \
  template T determinant<T>(const SquareMatrix<T>&);                          \
  template T determinant_cofactor<T>(const SquareMatrix<T>&);                 \
  template T hurwitz_minor_det<T>(const Polynomial<T>&, int);                 \
  template std::vector<T> hurwitz_minors<T>(const Polynomial<T>&);            \
  template T delta2<T>(const Polynomial<T>&);                                 \
  template T delta4_factored<T>(const Polynomial<T>&);                        \
  template T delta4_expanded<T>(const Polynomial<T>&);

CHIPART_INSTANTIATE(Rational)
CHIPART_INSTANTIATE(double)

#undef CHIPART_INSTANTIATE

}  // namespace chipart
