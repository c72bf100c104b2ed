#pragma once

// Full-rank sublattices of Z^2 and their affine translates.

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "severi/errors.hpp"

namespace severi {

using Vec2 = Eigen::Matrix<std::int64_t, 2, 1>;
using Mat2 = Eigen::Matrix<std::int64_t, 2, 2>;

/// Lexicographic order on integer pairs.
inline bool lex_less(const Vec2& a, const Vec2& b) {
  return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
}

/// A full-rank linear sublattice of Z^2, stored in the unique triangular form
///   basis = [d1 e; 0 d2],  d1 > 0, d2 > 0, 0 <= e < d1,
/// whose columns (d1, 0) and (e, d2) generate the lattice.
class LinearLattice2 {
 public:
  /// Z^2 itself.
  LinearLattice2() : LinearLattice2(1, 0, 1) {}
  /// Takes an already canonical basis; throws ArgumentError otherwise.
  LinearLattice2(std::int64_t d1, std::int64_t e, std::int64_t d2);

  /// Integer span of the given vectors. Throws DegenerateSpanError below rank two.
  static LinearLattice2 span(std::span<const Vec2> generators);

  std::int64_t d1() const { return basis_(0, 0); }
  std::int64_t e() const { return basis_(0, 1); }
  std::int64_t d2() const { return basis_(1, 1); }
  const Mat2& basis() const { return basis_; }

  /// [Z^2 : L] = d1 * d2.
  std::int64_t index() const { return d1() * d2(); }
  bool contains(const Vec2& v) const;
  /// Coordinates c with basis() * c = v. Throws DomainError when v is not in the lattice.
  Vec2 coordinates(const Vec2& v) const;

  friend bool operator==(const LinearLattice2& a, const LinearLattice2& b) { return a.basis_ == b.basis_; }

 private:
  Mat2 basis_;
};

/// A translate p + L of a full-rank sublattice. The basepoint is reduced to the
/// fundamental domain 0 <= x < d1, 0 <= y < d2 of the canonical basis, so equal
/// affine lattices have identical representations.
class AffineLattice2 {
 public:
  /// Z^2 itself.
  AffineLattice2() = default;
  AffineLattice2(const Vec2& basepoint, LinearLattice2 linear);

  const Vec2& basepoint() const { return basepoint_; }
  const LinearLattice2& linear() const { return linear_; }

  std::int64_t index() const { return linear_.index(); }
  bool contains(const Vec2& v) const;
  /// Coordinates of v - basepoint in the canonical basis. Throws DomainError when v is not in the lattice.
  Vec2 coordinates(const Vec2& v) const;

  friend bool operator==(const AffineLattice2& a, const AffineLattice2& b) {
    return a.basepoint_ == b.basepoint_ && a.linear_ == b.linear_;
  }

 private:
  Vec2 basepoint_ = Vec2::Zero();
  LinearLattice2 linear_;
};

/// Smallest affine lattice containing all points.
AffineLattice2 affine_span(std::span<const Vec2> points);

inline bool contains(const AffineLattice2& lattice, const Vec2& v) { return lattice.contains(v); }
inline bool contains(const LinearLattice2& lattice, const Vec2& v) { return lattice.contains(v); }

inline std::int64_t index_in_Z2(const LinearLattice2& lattice) { return lattice.index(); }
inline std::int64_t index_in_Z2(const AffineLattice2& lattice) { return lattice.index(); }

/// [sup : sub]. Throws DomainError unless sub is contained in sup.
std::int64_t lattice_index(const LinearLattice2& sub, const LinearLattice2& sup);

/// Image under (x, y) -> (-y, x).
LinearLattice2 rotate90(const LinearLattice2& lattice);
/// Image under (x, y) -> (y, -x); inverse of rotate90.
LinearLattice2 rotate_minus90(const LinearLattice2& lattice);

/// Lattices N with base ⊆ N ⊆ Z^2, one per divisor d of [Z^2 : base] with
/// [N : base] = d, sorted by d. Requires Z^2 / base to be cyclic; throws
/// StructureError otherwise.
std::vector<LinearLattice2> intermediate_lattices(const LinearLattice2& base);

/// Positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace severi
