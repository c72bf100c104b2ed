#pragma once

// Convex lattice polygons: validation, facets, lattice point counts, Pick's
// identity, lattice width, and the classification of polygons without
// interior lattice points.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "severi/errors.hpp"
#include "severi/lattice2.hpp"

namespace severi {

/// Largest admissible absolute value of an input coordinate.
inline constexpr std::int64_t kCoordinateBound = 10'000;

enum class PolygonErrorKind { TooFewVertices, DuplicatePoint, ZeroArea, NonConvex, SelfIntersecting, CoordinateBound };

class PolygonError : public Error {
 public:
  PolygonError(PolygonErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  PolygonErrorKind kind() const { return kind_; }

 private:
  PolygonErrorKind kind_;
};

/// A strictly convex lattice polygon with counterclockwise vertices. Only
/// constructible through validate().
class LatticePolygon {
 public:
  const std::vector<Vec2>& vertices() const { return vertices_; }
  /// Input points that lay inside an edge and were dropped during validation.
  const std::vector<Vec2>& collapsed() const { return collapsed_; }
  std::size_t size() const { return vertices_.size(); }

 private:
  friend LatticePolygon validate(std::span<const Vec2> points, std::int64_t bound);
  std::vector<Vec2> vertices_;
  std::vector<Vec2> collapsed_;
};

/// Checks and normalizes an ordered list of points into a polygon.
///
/// Orientation is made counterclockwise, keeping the first surviving input
/// point first; points in the interior of an edge are collapsed. Throws
/// PolygonError for fewer than three vertices, repeated points, zero area,
/// reflex or backtracking corners, self-intersection, or coordinates beyond
/// `bound`.
LatticePolygon validate(std::span<const Vec2> points, std::int64_t bound = kCoordinateBound);

struct Facet {
  std::size_t index;
  Vec2 start;
  Vec2 end;
  Vec2 edge;
  /// Number of primitive segments on the edge.
  std::int64_t length;
  /// Primitive normal pointing into the polygon.
  Vec2 normal;
};

/// Facets in boundary order; facet j runs from vertex j to vertex j+1.
std::vector<Facet> facets(const LatticePolygon& polygon);

/// Lattice points on the boundary, counterclockwise from the first vertex.
/// Facet j contributes its start vertex and the points strictly inside it.
std::vector<Vec2> boundary_points(const LatticePolygon& polygon);

/// Lattice points strictly inside, in lexicographic (y, x) row order.
std::vector<Vec2> interior_points(const LatticePolygon& polygon);

/// Interior points that lie in `lattice`, stopping after `limit` points.
std::vector<Vec2> interior_points_in_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice,
                                             std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Number of interior points in `lattice`, without materializing them.
std::int64_t count_interior_points_in_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice);

/// Twice the Euclidean area (shoelace sum).
std::int64_t twice_area(const LatticePolygon& polygon);

/// Pick's identity measured in `lattice`: 2·Area_L = 2·|int ∩ L| + |bd ∩ L| − 2.
/// Throws DomainError when a vertex is not in `lattice`.
bool verify_pick(const LatticePolygon& polygon, const AffineLattice2& lattice);

struct LatticeWidth {
  std::int64_t width;
  /// Minimizing primitive functional, in the coordinates of the lattice basis.
  /// Sign fixed so the first nonzero entry is positive; ties go to the
  /// lexicographically smallest vector.
  Vec2 direction;
};

/// Lattice width of the polygon with respect to `lattice`. The differences of
/// the vertices must lie in `lattice`.
LatticeWidth lattice_width(const LatticePolygon& polygon, const LinearLattice2& lattice);

/// Same quantity by scanning every primitive functional with sup-norm at most
/// `max_norm`. Only exact when the optimum lies in that box.
LatticeWidth lattice_width_brute_force(const LatticePolygon& polygon, const LinearLattice2& lattice,
                                       std::int64_t max_norm = 25);

/// Maps coordinates c in the lattice frame back to points: linear·c + offset.
struct AffineTransform {
  Mat2 linear;
  Vec2 offset;

  Vec2 apply(const Vec2& c) const { return linear * c + offset; }
};

struct NormalizedPolygon {
  LatticePolygon polygon;
  AffineTransform to_original;
};

/// The polygon in the coordinates of `lattice`, so that `lattice` becomes Z^2.
NormalizedPolygon normalize_to_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice);

/// True iff (polygon, lattice) is equivalent to the triangle (0,0),(2,0),(0,2) in Z^2:
/// a triangle whose sides all have length 2 in `lattice` and whose boundary
/// points affinely generate `lattice`.
bool is_twice_primitive_triangle(const LatticePolygon& polygon, const AffineLattice2& lattice);

enum class InteriorClassification { NonEmptyInterior, WidthOne, TwicePrimitiveTriangle };

std::string_view to_string(InteriorClassification c);

/// Classifies the polygon relative to `lattice`. A polygon without interior
/// points of `lattice` has width one or is twice a primitive triangle; anything
/// else throws InvariantViolation.
InteriorClassification classify_interior_empty(const LatticePolygon& polygon, const AffineLattice2& lattice);

}  // namespace severi
