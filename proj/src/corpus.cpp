#include "severi/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "severi/errors.hpp"
#include "severi/integer.hpp"

namespace severi {

namespace {

std::int64_t cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// row-major: by y, then x
bool row_less(const Vec2& a, const Vec2& b) { return a.y() != b.y() ? a.y() < b.y() : a.x() < b.x(); }

class Enumerator {
 public:
  Enumerator(const CorpusSpec& spec, const std::function<bool(const LatticePolygon&)>& sink)
      : spec_(spec), sink_(sink) {
    for (std::int64_t y = 0; y <= spec.max_coordinate; ++y) {
      for (std::int64_t x = 0; x <= spec.max_coordinate; ++x) points_.emplace_back(x, y);
    }
  }

  void run() {
    for (const Vec2& start : points_) {
      if (spec_.dedup == Dedup::Translation && start.y() != 0) break;
      chain_ = {start};
      if (!extend()) return;
    }
  }

 private:
  // false once enumeration must stop
  bool extend() {
    const Vec2 v0 = chain_.front();
    const Vec2 last = chain_.back();
    const Vec2 before = chain_.size() >= 2 ? chain_[chain_.size() - 2] : v0;
    if (chain_.size() >= 3 && closes()) {
      if (!emit()) return false;
    }
    for (const Vec2& p : points_) {
      if (!row_less(v0, p)) continue;
      // strictly increasing angle around the start vertex
      if (chain_.size() >= 2 && cross(last - v0, p - v0) <= 0) continue;
      if (chain_.size() >= 2 && cross(last - before, p - last) <= 0) continue;
      chain_.push_back(p);
      const bool go_on = extend();
      chain_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool closes() const {
    const std::size_t k = chain_.size();
    return cross(chain_[k - 1] - chain_[k - 2], chain_[0] - chain_[k - 1]) > 0;
  }

  bool emit() {
    if (spec_.dedup == Dedup::Translation) {
      std::int64_t min_x = chain_.front().x();
      for (const Vec2& p : chain_) min_x = std::min(min_x, p.x());
      if (min_x != 0) return true;
    }
    if (spec_.limit && emitted_ >= *spec_.limit) return false;
    ++emitted_;
    if (!sink_(validate(chain_))) return false;
    return !(spec_.limit && emitted_ >= *spec_.limit);
  }

  const CorpusSpec& spec_;
  const std::function<bool(const LatticePolygon&)>& sink_;
  std::vector<Vec2> points_;
  std::vector<Vec2> chain_;
  std::size_t emitted_ = 0;
};

}  // namespace

void enumerate_corpus(const CorpusSpec& spec, const std::function<bool(const LatticePolygon&)>& sink) {
  if (spec.max_coordinate < 1 || spec.max_coordinate > kMaxExhaustiveCoordinate) {
    throw ArgumentError("exhaustive corpus needs 1 <= max_coordinate <= " + std::to_string(kMaxExhaustiveCoordinate) +
                        ", got " + std::to_string(spec.max_coordinate));
  }
  if (spec.limit && *spec.limit == 0) return;
  Enumerator(spec, sink).run();
}

std::vector<LatticePolygon> corpus(const CorpusSpec& spec) {
  std::vector<LatticePolygon> out;
  enumerate_corpus(spec, [&](const LatticePolygon& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), row_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Vec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vec2& p : points) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 1]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2& p = points[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 1]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

LatticePolygon random_polygon(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::uniform_int_distribution<int> count(3, 10);
  for (;;) {
    std::vector<Vec2> pts(static_cast<std::size_t>(count(rng)));
    for (Vec2& p : pts) p = Vec2(coord(rng), coord(rng));
    std::vector<Vec2> hull = convex_hull(std::move(pts));
    if (hull.size() >= 3) return validate(hull);
  }
}

Mat2 random_unimodular(std::mt19937_64& rng, int max_ops, int coeff) {
  std::uniform_int_distribution<int> ops(0, max_ops);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> row(0, 1);
  std::uniform_int_distribution<std::int64_t> mult(-coeff, coeff);
  Mat2 m = Mat2::Identity();
  for (int n = ops(rng); n > 0; --n) {
    const int r = row(rng);
    switch (kind(rng)) {
      case 0:
        m.row(r) += mult(rng) * m.row(1 - r);
        break;
      case 1:
        m.row(0).swap(m.row(1));
        break;
      default:
        m.row(r) = -m.row(r);
        break;
    }
  }
  return m;
}

LatticePolygon transform(const LatticePolygon& polygon, const Mat2& linear, const Vec2& offset) {
  std::vector<Vec2> image;
  image.reserve(polygon.size());
  for (const Vec2& v : polygon.vertices()) {
    image.emplace_back(checked::add(checked::add(checked::mul(linear(0, 0), v.x()), checked::mul(linear(0, 1), v.y())),
                                    offset.x()),
                       checked::add(checked::add(checked::mul(linear(1, 0), v.x()), checked::mul(linear(1, 1), v.y())),
                                    offset.y()));
  }
  return validate(image);
}

LatticePolygon transform(const LatticePolygon& polygon, const UnimodularMap& map) {
  return transform(polygon, map.linear, map.offset);
}

UnimodularMap random_affine_unimodular(std::mt19937_64& rng, const LatticePolygon& polygon, std::int64_t offset_bound,
                                       std::int64_t coordinate_bound) {
  std::uniform_int_distribution<std::int64_t> shift(-offset_bound, offset_bound);
  for (;;) {
    UnimodularMap map{random_unimodular(rng), Vec2::Zero()};
    map.offset = Vec2(shift(rng), shift(rng));
    const bool fits = std::ranges::all_of(polygon.vertices(), [&](const Vec2& v) {
      const Vec2 w = map.linear * v + map.offset;
      return std::abs(w.x()) <= coordinate_bound && std::abs(w.y()) <= coordinate_bound;
    });
    if (fits) return map;
  }
}

}  // namespace severi
