#pragma once

// Irreducible components of genus-one Severi varieties on toric surfaces,
// counted and labelled through the intermediate lattices of a polygon.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "severi/intnf.hpp"
#include "severi/lattice2.hpp"
#include "severi/matrix.hpp"
#include "severi/polygon.hpp"

namespace severi {

/// Boundary data of a polygon: the normal matrix A with one column per
/// boundary lattice point, the affine lattice M0 spanned by the boundary
/// points, and the lattice N0 spanned by the facet normals.
struct BoundaryProfile {
  LatticePolygon polygon;
  std::vector<Vec2> boundary;
  std::vector<Facet> facets;
  /// Facet owning each boundary point (column of normals).
  std::vector<std::size_t> owner;
  IntMat normals;  // 2 x l
  AffineLattice2 m0;
  LinearLattice2 n0;
  /// [Z^2 : N0]
  std::int64_t idx;

  std::size_t l() const { return boundary.size(); }
};

BoundaryProfile build_profile(const LatticePolygon& polygon);

/// (m · n_j) for every facet j.
std::vector<std::int64_t> divisor_of_monomial(const BoundaryProfile& profile, const Vec2& m);

struct ComponentSignature {
  /// HSNF certificate of the normal matrix: Q·A = hsnf·P.
  HsnfResult<Integer> certificate;
  /// z = R2(Q)·A / [Z^2 : N0].
  std::vector<std::int64_t> z;
};

/// Signature vector z labelling the components.
///
/// The certificate's second row of Q is the primitive direction of the first
/// facet, which is always admissible; z then vanishes on the first facet block
/// and is constant on every block.
ComponentSignature component_signature(const BoundaryProfile& profile);

/// The normal matrix with e_{i1} − e_{i2} appended as a third row.
/// Indices are 0-based; requires i1 < i2 < l, else ArgumentError.
IntMat diagonal_rank_matrix(const BoundaryProfile& profile, std::size_t i1, std::size_t i2);

/// First pair (i1, i2) in lexicographic order with rank of the augmented matrix equal to 2.
std::optional<std::pair<std::size_t, std::size_t>> width_one_by_rank(const BoundaryProfile& profile);

/// cols(A) − rank(A) for A with zero row sums; DomainError otherwise.
std::int64_t expected_kernel_dimension(const IntMat& a);

struct ComponentDescriptor {
  LinearLattice2 n;
  AffineLattice2 m;
  /// [N : N0]
  std::int64_t d;
  /// [Z^2 : N]
  std::int64_t index_in_Z2;
  std::int64_t torsion_order;
  bool is_empty_locus;
  bool excluded_nonbirational;
  bool contributes;
};

/// One descriptor per intermediate lattice N0 ⊆ N ⊆ Z^2, sorted by [N : N0].
std::vector<ComponentDescriptor> enumerate_components(const LatticePolygon& polygon);
std::vector<ComponentDescriptor> enumerate_components(const BoundaryProfile& profile);

/// Number of irreducible components: the divisor count of [Z^2 : N0], less one
/// when M0 has no interior point of the polygon.
std::int64_t count_components(const LatticePolygon& polygon);

/// Same count by literal check of both lattice conditions over every affine
/// lattice between M0 and Z^2.
std::int64_t count_components_oracle(const LatticePolygon& polygon);

/// l + g − 1.
std::int64_t severi_dimension(const LatticePolygon& polygon, std::int64_t genus);

struct IntermediateInterior {
  AffineLattice2 m;
  std::int64_t interior_points;
};

struct SeveriReport {
  std::int64_t l;
  std::vector<Facet> facets;
  std::int64_t idx;
  std::vector<std::int64_t> divisors;
  std::vector<std::int64_t> invariant_factors;
  AffineLattice2 m0;
  LinearLattice2 n0;
  LatticeWidth width_m0;
  std::vector<IntermediateInterior> interior_counts;
  InteriorClassification classification;
  /// Omitted for polygons with more than kSignatureLimit boundary points.
  std::optional<std::vector<std::int64_t>> signature;
  std::vector<ComponentDescriptor> components;
  std::int64_t component_count;
  std::int64_t severi_dimension;
};

/// Boundary sizes above this skip the dense signature certificate in analyze().
inline constexpr std::size_t kSignatureLimit = 512;

/// Full analysis; throws InvariantViolation if the two counting paths disagree.
SeveriReport analyze(const LatticePolygon& polygon);

}  // namespace severi
