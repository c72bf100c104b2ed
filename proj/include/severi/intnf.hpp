#pragma once

// Smith and homogeneous Smith normal forms of exact integer matrices, with
// unimodular transformation certificates.

#include <Eigen/Core>

#include <algorithm>
#include <vector>

#include "severi/errors.hpp"
#include "severi/integer.hpp"
#include "severi/matrix.hpp"

namespace severi {

/// Q·X = D·P with Q, P unimodular and D the Smith normal form of X.
template <typename Scalar>
struct SnfResult {
  Mat<Scalar> Q;
  Mat<Scalar> D;
  Mat<Scalar> P;
};

/// Q·X = A·P with Q unimodular, P unimodular fixing the all-ones vector,
/// and A the homogeneous Smith normal form of X.
template <typename Scalar>
struct HsnfResult {
  Mat<Scalar> Q;
  Mat<Scalar> A;
  Mat<Scalar> P;
};

namespace detail {

template <typename Derived>
void require_well_formed(const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() < 1 || x.cols() < 1) throw ArgumentError("matrix must have at least one row and one column");
}

}  // namespace detail

/// Smith normal form with certificates.
///
/// Elimination always pivots on a nonzero entry of minimal absolute value in
/// the active block (first such entry in row-major order), so the certificates
/// are deterministic. Diagonal signs are fixed by negating rows at the end.
template <typename Derived>
SnfResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  detail::require_well_formed(x);

  const Index s = x.rows(), l = x.cols();
  Mat<Scalar> w = x;
  Mat<Scalar> q = Mat<Scalar>::Identity(s, s);
  Mat<Scalar> p = Mat<Scalar>::Identity(l, l);
  const Index diag = std::min(s, l);
  Index rank = 0;

  for (Index t = 0; t < diag; ++t) {
    bool done = false;
    for (;;) {
      Index pi = -1, pj = -1;
      Scalar best(0);
      for (Index i = t; i < s; ++i) {
        for (Index j = t; j < l; ++j) {
          if (w(i, j) == Scalar(0)) continue;
          Scalar a = int_abs(w(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        done = true;
        break;
      }
      if (pi != t) {
        w.row(pi).swap(w.row(t));
        q.row(pi).swap(q.row(t));
      }
      if (pj != t) {
        w.col(pj).swap(w.col(t));
        p.row(pj).swap(p.row(t));
      }

      bool clean = true;
      const Scalar pivot = w(t, t);
      for (Index i = t + 1; i < s; ++i) {
        if (w(i, t) == Scalar(0)) continue;
        const Scalar k = w(i, t) / pivot;
        if (k != Scalar(0)) {
          w.row(i) -= k * w.row(t);
          q.row(i) -= k * q.row(t);
        }
        if (w(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < l; ++j) {
        if (w(t, j) == Scalar(0)) continue;
        const Scalar k = w(t, j) / pivot;
        if (k != Scalar(0)) {
          // column j -= k * column t; the inverse operation acts on the rows of P
          w.col(j) -= k * w.col(t);
          p.row(t) += k * p.row(j);
        }
        if (w(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole remaining block
      Index bad = -1;
      for (Index i = t + 1; i < s && bad < 0; ++i) {
        for (Index j = t + 1; j < l; ++j) {
          if (w(i, j) % pivot != Scalar(0)) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      w.row(t) += w.row(bad);
      q.row(t) += q.row(bad);
    }
    if (done) break;
    ++rank;
  }

  for (Index t = 0; t < rank; ++t) {
    if (w(t, t) < Scalar(0)) {
      w.row(t) = -w.row(t);
      q.row(t) = -q.row(t);
    }
  }
  return {std::move(q), std::move(w), std::move(p)};
}

/// True iff d is diagonal, its nonzero diagonal entries come first, are
/// positive, and each divides the next.
template <typename Derived>
bool is_snf(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != Scalar(0)) return false;
    }
  }
  const Eigen::Index n = std::min(d.rows(), d.cols());
  bool seen_zero = false;
  for (Eigen::Index t = 0; t < n; ++t) {
    const Scalar a = d(t, t);
    if (a == Scalar(0)) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || a < Scalar(0)) return false;
    if (t > 0 && a % d(t - 1, t - 1) != Scalar(0)) return false;
  }
  return true;
}

/// Invariant factors (alpha_1 | alpha_2 | ... | alpha_r) of x.
template <typename Derived>
std::vector<typename Derived::Scalar> invariant_factors(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto result = snf(x);
  std::vector<Scalar> out;
  const Eigen::Index n = std::min(result.D.rows(), result.D.cols());
  for (Eigen::Index t = 0; t < n && result.D(t, t) != Scalar(0); ++t) out.push_back(result.D(t, t));
  return out;
}

/// Rank over the rationals.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& x) {
  detail::require_well_formed(x);
  return exact_rank(x);
}

/// gcd of all k-by-k minors of x (0 when they all vanish).
///
/// Computed by enumerating minors with exact determinants, so it shares no
/// code path with snf() and can serve as its oracle.
template <typename Derived>
typename Derived::Scalar minor_gcd(const Eigen::MatrixBase<Derived>& x, Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  detail::require_well_formed(x);
  if (k < 1 || k > std::min(x.rows(), x.cols())) throw ArgumentError("minor size out of range");

  std::vector<Index> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
  // advances a k-subset of {0..n-1} in lexicographic order
  auto next = [k](std::vector<Index>& c, Index n) {
    for (Index i = k - 1; i >= 0; --i) {
      auto ui = static_cast<std::size_t>(i);
      if (c[ui] < n - k + i) {
        ++c[ui];
        for (Index j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  };
  auto reset = [k](std::vector<Index>& c) {
    for (Index i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  };

  Scalar g(0);
  Mat<Scalar> sub(k, k);
  reset(rows);
  do {
    reset(cols);
    do {
      for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) sub(i, j) = x(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
      }
      g = gcd(g, exact_determinant(sub));
      if (g == Scalar(1)) return g;
    } while (next(cols, x.cols()));
  } while (next(rows, x.rows()));
  return g;
}

/// Homogeneous Smith normal form of a matrix whose rows sum to zero.
///
/// Takes the SNF certificate (Q, P') of x with its first column erased and
/// extends P' to P = [1 0; u P'] with u = (I - P')·1, so that P·1 = 1 and
/// {0} x Z^{l-1} is P-invariant.
template <typename Derived>
HsnfResult<typename Derived::Scalar> hsnf(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  detail::require_well_formed(x);
  if (!has_zero_row_sums(x)) throw DomainError("hsnf requires every row of the matrix to sum to zero");

  const Index s = x.rows(), l = x.cols();
  if (l == 1) {
    return {Mat<Scalar>::Identity(s, s), Mat<Scalar>(x), Mat<Scalar>::Identity(1, 1)};
  }

  auto [q, d, p_tail] = snf(x.rightCols(l - 1));
  const Vec<Scalar> one = ones<Scalar>(l - 1);
  const Vec<Scalar> u = one - p_tail * one;

  Mat<Scalar> p = Mat<Scalar>::Zero(l, l);
  p(0, 0) = Scalar(1);
  p.block(1, 0, l - 1, 1) = u;
  p.bottomRightCorner(l - 1, l - 1) = p_tail;

  Mat<Scalar> a(s, l);
  a.col(0) = -(d.rowwise().sum());
  a.rightCols(l - 1) = d;
  return {std::move(q), std::move(a), std::move(p)};
}

/// True iff a has zero row sums and erasing its first column leaves an SNF.
template <typename Derived>
bool is_hsnf(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() < 1 || a.cols() < 1) return false;
  if (!has_zero_row_sums(a)) return false;
  return is_snf(a.rightCols(a.cols() - 1));
}

}  // namespace severi
