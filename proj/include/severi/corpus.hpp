#pragma once

// Exhaustive and random polygon generation for verification runs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "severi/lattice2.hpp"
#include "severi/polygon.hpp"

namespace severi {

/// Largest box size accepted for exhaustive enumeration.
inline constexpr std::int64_t kMaxExhaustiveCoordinate = 6;

enum class Dedup { None, Translation };

struct CorpusSpec {
  std::int64_t max_coordinate = 4;
  Dedup dedup = Dedup::Translation;
  std::optional<std::size_t> limit;
};

/// Calls `sink` with every convex lattice polygon whose vertices lie in
/// {0..max_coordinate}^2, in a fixed order, until it returns false or the
/// limit is reached. With translation dedup only polygons touching both axes
/// are produced. Throws ArgumentError when max_coordinate is outside [1, 6].
void enumerate_corpus(const CorpusSpec& spec, const std::function<bool(const LatticePolygon&)>& sink);

std::vector<LatticePolygon> corpus(const CorpusSpec& spec);

/// Strict convex hull, counterclockwise from the lowest-leftmost point.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Convex hull of a handful of uniform points in [-bound, bound]^2, resampled until it has area.
LatticePolygon random_polygon(std::mt19937_64& rng, std::int64_t bound);

/// Product of up to `max_ops` elementary row operations with multipliers in [-coeff, coeff].
Mat2 random_unimodular(std::mt19937_64& rng, int max_ops = 20, int coeff = 3);

struct UnimodularMap {
  Mat2 linear;
  Vec2 offset;
};

/// Image of the polygon under v -> linear·v + offset, re-validated (orientation may flip).
LatticePolygon transform(const LatticePolygon& polygon, const Mat2& linear, const Vec2& offset);
LatticePolygon transform(const LatticePolygon& polygon, const UnimodularMap& map);

/// Random unimodular affine map with offset in [-offset_bound, offset_bound]^2,
/// resampled until the image of `polygon` stays within `coordinate_bound`.
UnimodularMap random_affine_unimodular(std::mt19937_64& rng, const LatticePolygon& polygon,
                                       std::int64_t offset_bound = 8,
                                       std::int64_t coordinate_bound = kCoordinateBound);

}  // namespace severi
