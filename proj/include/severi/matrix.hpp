#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <utility>

#include "severi/errors.hpp"
#include "severi/integer.hpp"

namespace severi {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Dense exact-integer matrix.
using IntMat = Mat<Integer>;
using IntVec = Vec<Integer>;

/// Builds a matrix from nested row lists, e.g. make_matrix<Integer>({{2, 4}, {6, 8}}).
template <typename Scalar = Integer>
Mat<Scalar> make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Mat<Scalar> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw ArgumentError("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

template <typename Scalar>
Vec<Scalar> ones(Eigen::Index n) {
  return Vec<Scalar>::Constant(n, Scalar(1));
}

template <typename Derived>
bool has_zero_row_sums(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Scalar s(0);
    for (Eigen::Index j = 0; j < x.cols(); ++j) s += x(i, j);
    if (s != Scalar(0)) return false;
  }
  return true;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.rows() != x.cols()) throw ArgumentError("determinant of a non-square matrix");
  const Eigen::Index n = x.rows();
  if (n == 0) return Scalar(1);
  Mat<Scalar> m = x;
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Rank over the rationals, by fraction-free row reduction.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> m = x;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  Scalar prev(1);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = Scalar(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace severi
