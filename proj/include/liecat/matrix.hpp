#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "liecat/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<liecat::Scalar> : GenericNumTraits<liecat::Scalar> {
  using Real = liecat::Scalar;
  using NonInteger = liecat::Scalar;
  using Nested = liecat::Scalar;
  using Literal = liecat::Scalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace liecat {

/// Coordinates of generator images, one column per generator:
/// column i holds the coefficients of phi(x_i). With this convention the
/// matrix of phi∘psi is the product matrix(phi) * matrix(psi).
using MatrixN = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact Gaussian elimination; pivots are chosen as the first nonzero entry.
template <typename Derived>
Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  MatrixN a = m;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

/// Gauss-Jordan inverse; std::nullopt for a singular matrix.
template <typename Derived>
std::optional<MatrixN> inverse(const Eigen::MatrixBase<Derived>& m) {
  MatrixN a = m;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  MatrixN inv = MatrixN::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    a.row(pivot).swap(a.row(col));
    inv.row(pivot).swap(inv.row(col));
    const Scalar p = a(col, col).inverse();
    a.row(col) *= p;
    inv.row(col) *= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(col);
      inv.row(r) -= factor * inv.row(col);
    }
  }
  return inv;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace liecat
