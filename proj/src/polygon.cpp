#include "severi/polygon.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "severi/integer.hpp"

namespace severi {

namespace {

std::int64_t cross(const Vec2& a, const Vec2& b) {
  return checked::sub(checked::mul(a.x(), b.y()), checked::mul(a.y(), b.x()));
}

std::int64_t dot(const Vec2& a, const Vec2& b) {
  return checked::add(checked::mul(a.x(), b.x()), checked::mul(a.y(), b.y()));
}

std::string point_str(const Vec2& p) { return "(" + std::to_string(p.x()) + ", " + std::to_string(p.y()) + ")"; }

// 0 for directions in [0, pi), 1 for [pi, 2pi)
int half_plane(const Vec2& d) { return (d.y() > 0 || (d.y() == 0 && d.x() > 0)) ? 0 : 1; }

bool angle_less(const Vec2& a, const Vec2& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Calls fn(y, lo, hi) for every row y with interior lattice points lo <= x <= hi.
void for_each_interior_row(const LatticePolygon& polygon,
                           const std::function<bool(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  const auto& v = polygon.vertices();
  std::int64_t ymin = v[0].y(), ymax = v[0].y();
  for (const Vec2& p : v) {
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  const std::size_t k = v.size();
  for (std::int64_t y = ymin + 1; y < ymax; ++y) {
    std::optional<std::int64_t> lo, hi;
    bool empty = false;
    for (std::size_t i = 0; i < k && !empty; ++i) {
      const Vec2& a = v[i];
      const Vec2 e = v[(i + 1) % k] - a;
      // strictly left of the edge: e.x*(y - a.y) - e.y*(x - a.x) > 0, i.e. e.y*x < c
      const std::int64_t c = checked::add(checked::mul(e.x(), y - a.y()), checked::mul(e.y(), a.x()));
      if (e.y() > 0) {
        const std::int64_t bound = floor_div<std::int64_t>(c - 1, e.y());
        hi = hi ? std::min(*hi, bound) : bound;
      } else if (e.y() < 0) {
        const std::int64_t bound = floor_div<std::int64_t>(-c, -e.y()) + 1;
        lo = lo ? std::max(*lo, bound) : bound;
      } else if (c <= 0) {
        empty = true;
      }
    }
    if (empty || !lo || !hi || *lo > *hi) continue;
    if (!fn(y, *lo, *hi)) return;
  }
}

// Residue class x ≡ r (mod d1) of lattice points on row y, if the row meets the lattice.
std::optional<std::int64_t> row_residue(const AffineLattice2& lattice, std::int64_t y) {
  const LinearLattice2& lin = lattice.linear();
  const std::int64_t dy = y - lattice.basepoint().y();
  if (floor_mod(dy, lin.d2()) != 0) return std::nullopt;
  const std::int64_t b = dy / lin.d2();
  return floor_mod(checked::add(lattice.basepoint().x(), checked::mul(b, lin.e())), lin.d1());
}

void require_vertices_in(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  for (const Vec2& v : polygon.vertices()) {
    if (!lattice.contains(v)) throw DomainError("polygon vertex " + point_str(v) + " is not in the lattice");
  }
}

}  // namespace

LatticePolygon validate(std::span<const Vec2> points, std::int64_t bound) {
  for (const Vec2& p : points) {
    if (std::abs(p.x()) > bound || std::abs(p.y()) > bound) {
      throw PolygonError(PolygonErrorKind::CoordinateBound,
                         "coordinate of " + point_str(p) + " exceeds the bound " + std::to_string(bound));
    }
  }
  if (points.size() < 3) throw PolygonError(PolygonErrorKind::TooFewVertices, "a polygon needs at least three points");

  std::vector<Vec2> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw PolygonError(PolygonErrorKind::DuplicatePoint, "repeated point " + point_str(sorted[i]));
    }
  }

  const std::size_t n = points.size();
  std::int64_t area2 = 0;
  for (std::size_t i = 0; i < n; ++i) area2 = checked::add(area2, cross(points[i], points[(i + 1) % n]));
  if (area2 == 0) {
    bool collinear = true;
    for (std::size_t i = 2; i < n && collinear; ++i) collinear = cross(points[1] - points[0], points[i] - points[0]) == 0;
    if (collinear) throw PolygonError(PolygonErrorKind::ZeroArea, "points are collinear; the polygon has zero area");
    throw PolygonError(PolygonErrorKind::SelfIntersecting, "polygon boundary intersects itself");
  }

  // counterclockwise, first point kept first
  std::vector<Vec2> ring;
  ring.reserve(n);
  ring.push_back(points[0]);
  if (area2 > 0) {
    ring.insert(ring.end(), points.begin() + 1, points.end());
  } else {
    for (std::size_t i = n - 1; i >= 1; --i) ring.push_back(points[i]);
  }

  LatticePolygon out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = ring[(i + n - 1) % n];
    const Vec2& cur = ring[i];
    const Vec2& next = ring[(i + 1) % n];
    const Vec2 in = cur - prev, outv = next - cur;
    const std::int64_t turn = cross(in, outv);
    if (turn > 0) {
      out.vertices_.push_back(cur);
    } else if (turn == 0 && dot(in, outv) > 0) {
      out.collapsed_.push_back(cur);
    } else {
      throw PolygonError(PolygonErrorKind::NonConvex, "polygon is not convex at " + point_str(cur));
    }
  }

  const auto& v = out.vertices_;
  const std::size_t k = v.size();
  if (k < 3) throw PolygonError(PolygonErrorKind::TooFewVertices, "fewer than three corners after collapsing");

  // with every turn to the left, the edge directions wind around exactly once
  // iff the boundary is simple
  std::size_t descents = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 e0 = v[(i + 1) % k] - v[i];
    const Vec2 e1 = v[(i + 2) % k] - v[(i + 1) % k];
    if (!angle_less(e0, e1)) ++descents;
  }
  if (descents != 1) throw PolygonError(PolygonErrorKind::SelfIntersecting, "polygon boundary winds more than once");
  return out;
}

std::vector<Facet> facets(const LatticePolygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t k = v.size();
  std::vector<Facet> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vec2 edge = v[(j + 1) % k] - v[j];
    const std::int64_t len = gcd(edge.x(), edge.y());
    out.push_back({j, v[j], v[(j + 1) % k], edge, len, Vec2(-edge.y() / len, edge.x() / len)});
  }
  return out;
}

std::vector<Vec2> boundary_points(const LatticePolygon& polygon) {
  std::vector<Vec2> out;
  for (const Facet& f : facets(polygon)) {
    const Vec2 step = f.edge / f.length;
    for (std::int64_t t = 0; t < f.length; ++t) out.push_back(f.start + t * step);
  }
  return out;
}

std::vector<Vec2> interior_points(const LatticePolygon& polygon) {
  std::vector<Vec2> out;
  for_each_interior_row(polygon, [&](std::int64_t y, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t x = lo; x <= hi; ++x) out.emplace_back(x, y);
    return true;
  });
  return out;
}

std::vector<Vec2> interior_points_in_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice,
                                             std::size_t limit) {
  std::vector<Vec2> out;
  if (limit == 0) return out;
  const std::int64_t d1 = lattice.linear().d1();
  for_each_interior_row(polygon, [&](std::int64_t y, std::int64_t lo, std::int64_t hi) {
    const auto r = row_residue(lattice, y);
    if (!r) return true;
    for (std::int64_t x = lo + floor_mod(*r - lo, d1); x <= hi; x += d1) {
      out.emplace_back(x, y);
      if (out.size() >= limit) return false;
    }
    return true;
  });
  return out;
}

std::int64_t count_interior_points_in_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  std::int64_t count = 0;
  const std::int64_t d1 = lattice.linear().d1();
  for_each_interior_row(polygon, [&](std::int64_t y, std::int64_t lo, std::int64_t hi) {
    if (const auto r = row_residue(lattice, y)) {
      count += floor_div(hi - *r, d1) - floor_div(lo - 1 - *r, d1);
    }
    return true;
  });
  return count;
}

std::int64_t twice_area(const LatticePolygon& polygon) {
  const auto& v = polygon.vertices();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = checked::add(s, cross(v[i], v[(i + 1) % v.size()]));
  return s;
}

bool verify_pick(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  require_vertices_in(polygon, lattice);
  const std::int64_t area2 = twice_area(polygon);
  if (area2 % lattice.index() != 0) return false;
  const std::int64_t area2_in_lattice = area2 / lattice.index();
  const std::int64_t interior = count_interior_points_in_lattice(polygon, lattice);
  std::int64_t boundary = 0;
  for (const Vec2& p : boundary_points(polygon)) boundary += lattice.contains(p) ? 1 : 0;
  return area2_in_lattice == 2 * interior + boundary - 2;
}

NormalizedPolygon normalize_to_lattice(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  require_vertices_in(polygon, lattice);
  std::vector<Vec2> coords;
  coords.reserve(polygon.size());
  for (const Vec2& v : polygon.vertices()) coords.push_back(lattice.coordinates(v));
  // the frame change has positive determinant, so orientation and vertex order survive
  return {validate(coords, std::numeric_limits<std::int64_t>::max() / 4),
          {lattice.linear().basis(), lattice.basepoint()}};
}

LatticeWidth lattice_width(const LatticePolygon& polygon, const LinearLattice2& lattice) {
  const LatticePolygon q = normalize_to_lattice(polygon, AffineLattice2(polygon.vertices().front(), lattice)).polygon;
  const auto& v = q.vertices();

  auto width_along = [&](const Vec2& n) {
    std::int64_t lo = dot(n, v[0]), hi = lo;
    for (const Vec2& p : v) {
      const std::int64_t s = dot(n, p);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return hi - lo;
  };

  std::int64_t upper = std::min(width_along(Vec2(1, 0)), width_along(Vec2(0, 1)));
  for (const Facet& f : facets(q)) upper = std::min(upper, width_along(f.normal));

  // An optimal n satisfies |n·u| <= upper and |n·w| <= upper for the two edges
  // u, w at the first vertex, since the triangle they span lies in the polygon.
  const Vec2 u = v[1] - v[0];
  const Vec2 w = v.back() - v[0];
  const std::int64_t det = cross(u, w);

  LatticeWidth best{upper + 1, Vec2::Zero()};
  const std::int64_t x_extent = floor_div(checked::mul(upper, std::abs(u.y()) + std::abs(w.y())), std::abs(det));

  // integer y in [lo, hi] with |a + b*y| <= upper
  auto restrict = [upper](std::int64_t a, std::int64_t b, std::int64_t& lo, std::int64_t& hi) {
    if (b == 0) {
      if (std::abs(a) > upper) hi = lo - 1;
      return;
    }
    std::int64_t l, h;
    if (b > 0) {
      l = -floor_div(upper + a, b);  // ceil((-upper - a) / b)
      h = floor_div(upper - a, b);
    } else {
      l = -floor_div(upper - a, -b);
      h = floor_div(upper + a, -b);
    }
    lo = std::max(lo, l);
    hi = std::min(hi, h);
  };

  for (std::int64_t nx = 0; nx <= x_extent; ++nx) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::min() / 4, hi = std::numeric_limits<std::int64_t>::max() / 4;
    restrict(nx * u.x(), u.y(), lo, hi);
    restrict(nx * w.x(), w.y(), lo, hi);
    if (nx == 0) lo = std::max<std::int64_t>(lo, 1);  // canonical sign: (0, y) with y > 0
    for (std::int64_t ny = lo; ny <= hi; ++ny) {
      if (gcd(nx, ny) != 1) continue;
      const Vec2 n(nx, ny);
      const std::int64_t wd = width_along(n);
      if (wd < best.width || (wd == best.width && lex_less(n, best.direction))) best = {wd, n};
    }
  }
  ensure(best.width <= upper && best.width > 0, "lattice_width: no admissible direction found");
  return best;
}

LatticeWidth lattice_width_brute_force(const LatticePolygon& polygon, const LinearLattice2& lattice,
                                       std::int64_t max_norm) {
  const LatticePolygon q = normalize_to_lattice(polygon, AffineLattice2(polygon.vertices().front(), lattice)).polygon;
  LatticeWidth best{std::numeric_limits<std::int64_t>::max(), Vec2::Zero()};
  for (std::int64_t nx = 0; nx <= max_norm; ++nx) {
    for (std::int64_t ny = nx == 0 ? 1 : -max_norm; ny <= max_norm; ++ny) {
      if (gcd(nx, ny) != 1) continue;
      std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = std::numeric_limits<std::int64_t>::min();
      for (const Vec2& p : q.vertices()) {
        const std::int64_t s = nx * p.x() + ny * p.y();
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (hi - lo < best.width || (hi - lo == best.width && lex_less(Vec2(nx, ny), best.direction))) {
        best = {hi - lo, Vec2(nx, ny)};
      }
    }
  }
  return best;
}

bool is_twice_primitive_triangle(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  if (polygon.size() != 3) return false;
  const LatticePolygon q = normalize_to_lattice(polygon, lattice).polygon;
  for (const Facet& f : facets(q)) {
    if (f.length != 2) return false;
  }
  const std::vector<Vec2> bd = boundary_points(q);
  return affine_span(bd) == AffineLattice2();
}

std::string_view to_string(InteriorClassification c) {
  switch (c) {
    case InteriorClassification::NonEmptyInterior:
      return "NON_EMPTY_INTERIOR";
    case InteriorClassification::WidthOne:
      return "WIDTH_ONE";
    case InteriorClassification::TwicePrimitiveTriangle:
      return "TWICE_PRIMITIVE_TRIANGLE";
  }
  return "UNKNOWN";
}

InteriorClassification classify_interior_empty(const LatticePolygon& polygon, const AffineLattice2& lattice) {
  require_vertices_in(polygon, lattice);
  if (!interior_points_in_lattice(polygon, lattice, 1).empty()) return InteriorClassification::NonEmptyInterior;
  if (lattice_width(polygon, lattice.linear()).width == 1) return InteriorClassification::WidthOne;
  if (is_twice_primitive_triangle(polygon, lattice)) return InteriorClassification::TwicePrimitiveTriangle;
  throw InvariantViolation("polygon without interior lattice points is neither width one nor twice a primitive triangle");
}

}  // namespace severi
