#pragma once

#include <utility>

#include <Eigen/Core>

#include "colorlink/laurent.hpp"

namespace colorlink {

/// Fraction-free (Bareiss) elimination over an integral domain whose scalar
/// type provides `exact_div`. Pivots on the first row with a nonzero entry in
/// the current column; an all-zero column yields 0.
template <typename Derived>
typename Derived::Scalar fraction_free_det(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(input.rows() == input.cols());
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);

  Mat m = input;
  Scalar previous(1);
  bool negate = false;
  const Scalar zero(0);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k) == zero) ++pivot;
    if (pivot == n) return zero;
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar numerator = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(numerator, previous);
      }
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Exact determinant of a Laurent-polynomial matrix. Each row is first scaled
/// by a monomial so that its entries are ordinary polynomials, then the
/// fraction-free elimination runs and the monomials are put back.
LaurentPoly bareiss_det(const PolyMatrix& matrix);

}  // namespace colorlink
