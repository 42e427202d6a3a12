#include "gcdpat/matrix.hpp"

#include <utility>

#include "gcdpat/error.hpp"

namespace gcdpat {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  std::vector<Integer> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

namespace {

// Forward Bareiss elimination over the first n columns of an n x (n + extra)
// matrix. Returns the signed determinant of the leading square block, or 0.
Integer bareiss_forward(IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t width = m.cols();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = div_exact(t, prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? prev : Integer(-prev);
}

}  // namespace

Integer bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss_forward(m);
}

ScaledSolution bareiss_solve_scaled(IntMatrix m, const std::vector<Integer>& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  IntMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  const Integer det = bareiss_forward(aug);
  if (det == 0) return {Integer(0), {}};
  // Each det*x_i is an integer by Cramer's rule, so every division is exact.
  std::vector<Integer> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Integer acc = det * aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= aug(i, j) * y[j];
    if (!divides(aug(i, i), acc)) throw Error(ErrorCode::Internal, "inexact back substitution");
    y[i] = div_exact(acc, aug(i, i));
  }
  return {det, std::move(y)};
}

IntMatrix hermite_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    // Fold every lower row into pivot_row with 2x2 unimodular transforms.
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Integer a = m(pivot_row, c);
      const Integer b = m(r, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer a_g = div_exact(a, g);
      const Integer b_g = div_exact(b, g);
      // [s t; -b/g a/g] has determinant 1.
      for (std::size_t j = c; j < cols; ++j) {
        const Integer top = s * m(pivot_row, j) + t * m(r, j);
        const Integer bottom = a_g * m(r, j) - b_g * m(pivot_row, j);
        m(pivot_row, j) = top;
        m(r, j) = bottom;
      }
    }
    if (m(pivot_row, c) == 0) continue;
    if (m(pivot_row, c) < 0) {
      for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) = -m(pivot_row, j);
    }
    const Integer pivot = m(pivot_row, c);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(r, j) -= q * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return m;
}

}  // namespace gcdpat
