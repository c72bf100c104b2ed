#include "severi/lattice2.hpp"

#include <algorithm>
#include <string>

#include "severi/integer.hpp"
#include "severi/intnf.hpp"

namespace severi {

LinearLattice2::LinearLattice2(std::int64_t d1, std::int64_t e, std::int64_t d2) {
  if (d1 <= 0 || d2 <= 0 || e < 0 || e >= d1) {
    throw ArgumentError("lattice basis is not in canonical form: [[" + std::to_string(d1) + ", " + std::to_string(e) +
                        "], [0, " + std::to_string(d2) + "]]");
  }
  basis_ << d1, e, 0, d2;
}

LinearLattice2 LinearLattice2::span(std::span<const Vec2> generators) {
  std::vector<Vec2> gens;
  for (const Vec2& g : generators) {
    if (g != Vec2::Zero()) gens.push_back(g);
  }

  // column Euclid on the y-coordinates until at most one generator has y != 0
  for (;;) {
    std::size_t pivot = gens.size();
    std::size_t with_y = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].y() == 0) continue;
      ++with_y;
      if (pivot == gens.size() || std::abs(gens[i].y()) < std::abs(gens[pivot].y())) pivot = i;
    }
    if (with_y <= 1) break;
    const Vec2 p = gens[pivot];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == pivot || gens[i].y() == 0) continue;
      const std::int64_t q = gens[i].y() / p.y();
      gens[i].x() = checked::sub(gens[i].x(), checked::mul(q, p.x()));
      gens[i].y() -= q * p.y();
    }
  }

  std::int64_t d1 = 0;
  const Vec2* slanted = nullptr;
  for (const Vec2& g : gens) {
    if (g.y() == 0) {
      d1 = gcd(d1, g.x());
    } else {
      slanted = &g;
    }
  }
  if (slanted == nullptr || d1 == 0) throw DegenerateSpanError("generators do not span a rank-two lattice");
  Vec2 c = *slanted;
  if (c.y() < 0) c = -c;
  return LinearLattice2(d1, floor_mod(c.x(), d1), c.y());
}

bool LinearLattice2::contains(const Vec2& v) const {
  if (v.y() % d2() != 0) return false;
  const std::int64_t b = v.y() / d2();
  return checked::sub(v.x(), checked::mul(b, e())) % d1() == 0;
}

Vec2 LinearLattice2::coordinates(const Vec2& v) const {
  if (!contains(v)) throw DomainError("vector is not in the lattice");
  const std::int64_t b = v.y() / d2();
  const std::int64_t a = checked::sub(v.x(), checked::mul(b, e())) / d1();
  return {a, b};
}

AffineLattice2::AffineLattice2(const Vec2& basepoint, LinearLattice2 linear) : linear_(std::move(linear)) {
  Vec2 r = basepoint;
  const std::int64_t k2 = floor_div(r.y(), linear_.d2());
  r.x() = checked::sub(r.x(), checked::mul(k2, linear_.e()));
  r.y() -= k2 * linear_.d2();
  r.x() = floor_mod(r.x(), linear_.d1());
  basepoint_ = r;
}

bool AffineLattice2::contains(const Vec2& v) const {
  return linear_.contains({checked::sub(v.x(), basepoint_.x()), checked::sub(v.y(), basepoint_.y())});
}

Vec2 AffineLattice2::coordinates(const Vec2& v) const {
  return linear_.coordinates({checked::sub(v.x(), basepoint_.x()), checked::sub(v.y(), basepoint_.y())});
}

AffineLattice2 affine_span(std::span<const Vec2> points) {
  if (points.empty()) throw DegenerateSpanError("affine span of an empty point set");
  const Vec2 origin = points.front();
  std::vector<Vec2> diffs;
  diffs.reserve(points.size());
  for (const Vec2& p : points) diffs.emplace_back(checked::sub(p.x(), origin.x()), checked::sub(p.y(), origin.y()));
  return AffineLattice2(origin, LinearLattice2::span(diffs));
}

std::int64_t lattice_index(const LinearLattice2& sub, const LinearLattice2& sup) {
  if (!sup.contains(sub.basis().col(0)) || !sup.contains(sub.basis().col(1))) {
    throw DomainError("lattice_index: the first lattice is not contained in the second");
  }
  return sub.index() / sup.index();
}

LinearLattice2 rotate90(const LinearLattice2& lattice) {
  std::vector<Vec2> gens;
  for (int j = 0; j < 2; ++j) {
    const Vec2 c = lattice.basis().col(j);
    gens.emplace_back(-c.y(), c.x());
  }
  return LinearLattice2::span(gens);
}

LinearLattice2 rotate_minus90(const LinearLattice2& lattice) {
  std::vector<Vec2> gens;
  for (int j = 0; j < 2; ++j) {
    const Vec2 c = lattice.basis().col(j);
    gens.emplace_back(c.y(), -c.x());
  }
  return LinearLattice2::span(gens);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw ArgumentError("divisors of a non-positive integer");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<LinearLattice2> intermediate_lattices(const LinearLattice2& base) {
  // Q·B = D·P, so base = Q^{-1}·D·Z^2 and, in the coordinates y = Q·x, the base
  // lattice is span{e1, idx·e2}.
  IntMat b(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) b(i, j) = base.basis()(i, j);
  }
  const auto [q, d, p] = snf(b);
  if (d(0, 0) != Integer(1)) {
    throw StructureError("Z^2 modulo the lattice is not cyclic (first invariant factor " + d(0, 0).to_string() + ")");
  }
  const std::int64_t idx = d(1, 1).to_i64();
  ensure(idx == base.index(), "intermediate_lattices: second invariant factor differs from the index");

  const Integer det = exact_determinant(q);
  Mat2 q_inv;
  q_inv << (q(1, 1) * det).to_i64(), (-q(0, 1) * det).to_i64(), (-q(1, 0) * det).to_i64(), (q(0, 0) * det).to_i64();

  std::vector<LinearLattice2> out;
  for (std::int64_t dv : divisors(idx)) {
    const Vec2 g1 = q_inv.col(0);
    const Vec2 g2 = q_inv.col(1) * (idx / dv);
    const Vec2 gens[] = {g1, g2};
    out.push_back(LinearLattice2::span(gens));
    ensure(lattice_index(base, out.back()) == dv, "intermediate_lattices: wrong index over the base lattice");
  }
  return out;
}

}  // namespace severi
