#pragma once

// Random unimodular generators and brute-force oracles shared by the tests.
// The oracles deliberately avoid the library's own normal-form and
// row-interval code paths.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#include "severi/intnf.hpp"
#include "severi/lattice2.hpp"
#include "severi/matrix.hpp"
#include "severi/polygon.hpp"

namespace severi::testing {

inline Vec2 v2(std::int64_t x, std::int64_t y) { return Vec2(x, y); }

inline LatticePolygon polygon(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pts) {
  std::vector<Vec2> v;
  for (auto [x, y] : pts) v.emplace_back(x, y);
  return validate(v);
}

// Named polygons.
inline LatticePolygon triangle(std::int64_t d) { return polygon({{0, 0}, {d, 0}, {0, d}}); }
inline LatticePolygon unit_square() { return polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline LatticePolygon diamond(std::int64_t r) { return polygon({{r, 0}, {0, r}, {-r, 0}, {0, -r}}); }
inline LatticePolygon skew_triangle() { return polygon({{0, 0}, {2, 0}, {4, 2}}); }

inline IntMat random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> entry(lo, hi);
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

/// Random matrix whose rows sum to zero: the first column balances the rest.
inline IntMat random_homogeneous_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, std::int64_t lo,
                                        std::int64_t hi) {
  IntMat m = random_matrix(rng, rows, cols, lo, hi);
  for (Eigen::Index i = 0; i < rows; ++i) m(i, 0) = -m.row(i).tail(cols - 1).sum();
  return m;
}

struct Unimodular {
  IntMat u;
  IntMat inverse;
};

/// Product of at most `max_ops` elementary row operations (shears with
/// multiplier in [-coeff, coeff], swaps, negations), tracked with its inverse.
inline Unimodular random_gl(std::mt19937_64& rng, Eigen::Index n, int max_ops = 20, int coeff = 3) {
  Unimodular g{IntMat::Identity(n, n), IntMat::Identity(n, n)};
  std::uniform_int_distribution<int> ops(0, max_ops), kind(0, 2);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-coeff, coeff);
  for (int k = ops(rng); k > 0; --k) {
    const Eigen::Index i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0: {
        if (i == j) break;
        const Integer c = mult(rng);
        // E = I + c e_i e_j^T; E^{-1} = I - c e_i e_j^T
        g.u.row(i) += c * g.u.row(j);
        g.inverse.col(j) -= c * g.inverse.col(i);
        break;
      }
      case 1:
        g.u.row(i).swap(g.u.row(j));
        g.inverse.col(i).swap(g.inverse.col(j));
        break;
      default:
        g.u.row(i) = -g.u.row(i);
        g.inverse.col(i) = -g.inverse.col(i);
        break;
    }
  }
  return g;
}

/// Random unimodular P with P·1 = 1, from the generators
///   I + c e_i (e_j − e_m)^T  (i not in {j, m}),  permutations,  I + 2 e_i (e_j − e_i)^T.
inline Unimodular random_glh(std::mt19937_64& rng, Eigen::Index n, int max_ops = 20, int coeff = 3) {
  Unimodular g{IntMat::Identity(n, n), IntMat::Identity(n, n)};
  std::uniform_int_distribution<int> ops(0, max_ops), kind(0, 2);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-coeff, coeff);
  for (int k = ops(rng); k > 0; --k) {
    const Eigen::Index i = idx(rng), j = idx(rng), m = idx(rng);
    IntMat e = IntMat::Identity(n, n), e_inv = IntMat::Identity(n, n);
    switch (kind(rng)) {
      case 0: {
        if (i == j || i == m || j == m) continue;
        const Integer c = mult(rng);
        e(i, j) += c;
        e(i, m) -= c;
        e_inv(i, j) -= c;
        e_inv(i, m) += c;
        break;
      }
      case 1:
        e.row(i).swap(e.row(j));
        e_inv = e.transpose();
        break;
      default:
        if (i == j) continue;
        e(i, i) = -1;
        e(i, j) = 2;
        e_inv = e;  // involution
        break;
    }
    g.u = e * g.u;
    g.inverse = g.inverse * e_inv;
  }
  return g;
}

/// Every lattice L with base ⊆ L ⊆ Z^2, by scanning all canonical triangular bases of index ≤ [Z^2 : base].
inline std::vector<LinearLattice2> brute_force_superlattices(const LinearLattice2& base) {
  std::vector<LinearLattice2> out;
  const std::int64_t idx = base.index();
  for (std::int64_t d1 = 1; d1 <= idx; ++d1) {
    for (std::int64_t d2 = 1; d1 * d2 <= idx; ++d2) {
      for (std::int64_t e = 0; e < d1; ++e) {
        const LinearLattice2 l(d1, e, d2);
        if (l.contains(base.basis().col(0)) && l.contains(base.basis().col(1))) out.push_back(l);
      }
    }
  }
  return out;
}

/// Interior lattice points by scanning the bounding box with strict half-plane tests.
inline std::vector<Vec2> box_scan_interior(const LatticePolygon& p) {
  const auto& v = p.vertices();
  Vec2 lo = v[0], hi = v[0];
  for (const Vec2& w : v) {
    lo = lo.cwiseMin(w);
    hi = hi.cwiseMax(w);
  }
  std::vector<Vec2> out;
  for (std::int64_t y = lo.y(); y <= hi.y(); ++y) {
    for (std::int64_t x = lo.x(); x <= hi.x(); ++x) {
      bool inside = true;
      for (std::size_t i = 0; i < v.size() && inside; ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        const Vec2 e = b - a, d = Vec2(x, y) - a;
        inside = e.x() * d.y() - e.y() * d.x() > 0;
      }
      if (inside) out.emplace_back(x, y);
    }
  }
  return out;
}

/// Lattice points on the boundary, by scanning the bounding box.
inline std::vector<Vec2> box_scan_boundary(const LatticePolygon& p) {
  const auto& v = p.vertices();
  Vec2 lo = v[0], hi = v[0];
  for (const Vec2& w : v) {
    lo = lo.cwiseMin(w);
    hi = hi.cwiseMax(w);
  }
  std::vector<Vec2> out;
  for (std::int64_t y = lo.y(); y <= hi.y(); ++y) {
    for (std::int64_t x = lo.x(); x <= hi.x(); ++x) {
      bool on_edge = false, outside = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        const Vec2 e = b - a, d = Vec2(x, y) - a;
        const std::int64_t c = e.x() * d.y() - e.y() * d.x();
        if (c < 0) outside = true;
        if (c == 0) on_edge = true;
      }
      if (on_edge && !outside) out.emplace_back(x, y);
    }
  }
  return out;
}

/// Component count by brute force: affine lattices M ⊆ Z^2 whose boundary
/// points agree with those of Z^2 and that meet the interior. Such an M holds
/// three vertices, so its index divides twice their triangle's area; every
/// translate of every triangular basis up to that index is scanned.
inline std::int64_t brute_force_component_count(const LatticePolygon& p) {
  const std::vector<Vec2> bd = box_scan_boundary(p);
  const std::vector<Vec2> in = box_scan_interior(p);
  const auto& v = p.vertices();
  const Vec2 e1 = v[1] - v[0], e2 = v[2] - v[0];
  const std::int64_t max_index = std::abs(e1.x() * e2.y() - e1.y() * e2.x());
  std::int64_t count = 0;
  for (std::int64_t d1 = 1; d1 <= max_index; ++d1) {
    for (std::int64_t d2 = 1; d1 * d2 <= max_index; ++d2) {
      for (std::int64_t e = 0; e < d1; ++e) {
        for (std::int64_t bx = 0; bx < d1; ++bx) {
          for (std::int64_t by = 0; by < d2; ++by) {
            const AffineLattice2 m(Vec2(bx, by), LinearLattice2(d1, e, d2));
            bool boundary_ok = true;
            for (const Vec2& b : bd) boundary_ok = boundary_ok && m.contains(b);
            bool meets_interior = false;
            for (const Vec2& q : in) meets_interior = meets_interior || m.contains(q);
            if (boundary_ok && meets_interior) ++count;
          }
        }
      }
    }
  }
  return count;
}

}  // namespace severi::testing
