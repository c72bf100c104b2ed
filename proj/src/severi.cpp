#include "severi/severi.hpp"

#include <algorithm>
#include <string>

#include "severi/errors.hpp"
#include "severi/integer.hpp"

namespace severi {

namespace {

Mat<Integer> inverse_unimodular2(const Mat<Integer>& q) {
  const Integer det = exact_determinant(q);
  ensure(abs(det) == Integer(1), "expected a unimodular 2x2 matrix");
  Mat<Integer> inv(2, 2);
  inv << q(1, 1) * det, -q(0, 1) * det, -q(1, 0) * det, q(0, 0) * det;
  return inv;
}

}  // namespace

BoundaryProfile build_profile(const LatticePolygon& polygon) {
  BoundaryProfile profile{polygon, {}, facets(polygon), {}, IntMat(), AffineLattice2(), LinearLattice2(), 1};
  std::vector<Vec2> normals;
  for (const Facet& f : profile.facets) {
    normals.push_back(f.normal);
    const Vec2 step = f.edge / f.length;
    for (std::int64_t t = 0; t < f.length; ++t) {
      profile.boundary.push_back(f.start + t * step);
      profile.owner.push_back(f.index);
    }
  }

  const auto l = static_cast<Eigen::Index>(profile.boundary.size());
  profile.normals.resize(2, l);
  for (Eigen::Index i = 0; i < l; ++i) {
    const Vec2& n = profile.facets[profile.owner[static_cast<std::size_t>(i)]].normal;
    profile.normals(0, i) = n.x();
    profile.normals(1, i) = n.y();
  }

  profile.m0 = affine_span(profile.boundary);
  profile.n0 = LinearLattice2::span(normals);
  profile.idx = profile.n0.index();

  ensure(has_zero_row_sums(profile.normals), "normal matrix rows do not sum to zero");
  ensure(rotate90(profile.m0.linear()) == profile.n0, "normal lattice is not the rotated boundary lattice");
  return profile;
}

std::vector<std::int64_t> divisor_of_monomial(const BoundaryProfile& profile, const Vec2& m) {
  std::vector<std::int64_t> out;
  out.reserve(profile.facets.size());
  for (const Facet& f : profile.facets) out.push_back(checked::add(checked::mul(m.x(), f.normal.x()), checked::mul(m.y(), f.normal.y())));
  return out;
}

ComponentSignature component_signature(const BoundaryProfile& profile) {
  const Eigen::Index l = profile.normals.cols();
  const Facet& first = profile.facets.front();
  const Vec2 t = first.edge / first.length;
  // s·(t_y, -t_x) = 1 makes [s; t] unimodular
  const auto [g, sx, sy] = extended_gcd<std::int64_t>(t.y(), -t.x());
  ensure(g == 1, "facet direction is not primitive");

  Mat<Integer> q(2, 2);
  q << sx, sy, t.x(), t.y();
  const IntMat qa = q * profile.normals;
  const Integer idx(profile.idx);

  // rows of P' are forced: Q·A' = diag(1, idx)·P'
  IntMat forced(2, l - 1);
  forced.row(0) = qa.row(0).tail(l - 1);
  for (Eigen::Index j = 1; j < l; ++j) {
    ensure(qa(1, j) % idx == Integer(0), "second certificate row is not divisible by the index");
    forced(1, j - 1) = qa(1, j) / idx;
  }

  // complete the forced rows to a unimodular P'
  const auto completion = snf(forced);
  ensure(completion.D(0, 0) == Integer(1) && completion.D(1, 1) == Integer(1),
         "forced certificate rows do not extend to a unimodular matrix");
  IntMat p_tail = completion.P;
  p_tail.topRows(2) = inverse_unimodular2(completion.Q) * completion.P.topRows(2);

  IntMat d_tail = IntMat::Zero(2, l - 1);
  d_tail(0, 0) = Integer(1);
  d_tail(1, 1) = idx;

  const IntVec one = ones<Integer>(l - 1);
  IntMat p = IntMat::Zero(l, l);
  p(0, 0) = Integer(1);
  p.block(1, 0, l - 1, 1) = one - p_tail * one;
  p.bottomRightCorner(l - 1, l - 1) = p_tail;

  IntMat a(2, l);
  a.col(0) = -(d_tail.rowwise().sum());
  a.rightCols(l - 1) = d_tail;

  ensure(qa == a * p, "signature certificate does not reproduce the normal matrix");
  ensure(is_hsnf(a), "signature certificate is not in homogeneous Smith normal form");

  ComponentSignature out{{std::move(q), std::move(a), std::move(p)}, {}};
  out.z.reserve(static_cast<std::size_t>(l));
  for (Eigen::Index i = 0; i < l; ++i) {
    ensure(qa(1, i) % idx == Integer(0), "signature division is not exact");
    out.z.push_back((qa(1, i) / idx).to_i64());
  }
  return out;
}

IntMat diagonal_rank_matrix(const BoundaryProfile& profile, std::size_t i1, std::size_t i2) {
  if (!(i1 < i2) || i2 >= profile.l()) throw ArgumentError("diagonal_rank_matrix requires i1 < i2 < l");
  const Eigen::Index l = profile.normals.cols();
  IntMat out = IntMat::Zero(3, l);
  out.topRows(2) = profile.normals;
  out(2, static_cast<Eigen::Index>(i1)) = Integer(1);
  out(2, static_cast<Eigen::Index>(i2)) = Integer(-1);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> width_one_by_rank(const BoundaryProfile& profile) {
  for (std::size_t i1 = 0; i1 < profile.l(); ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < profile.l(); ++i2) {
      if (rank(diagonal_rank_matrix(profile, i1, i2)) == 2) return std::make_pair(i1, i2);
    }
  }
  return std::nullopt;
}

std::int64_t expected_kernel_dimension(const IntMat& a) {
  if (a.rows() < 1 || a.cols() < 1) throw ArgumentError("matrix must have at least one row and one column");
  if (!has_zero_row_sums(a)) throw DomainError("kernel dimension requires zero row sums");
  return static_cast<std::int64_t>(a.cols() - rank(a));
}

std::vector<ComponentDescriptor> enumerate_components(const BoundaryProfile& profile) {
  const LatticeWidth width = lattice_width(profile.polygon, profile.m0.linear());
  const InteriorClassification cls = classify_interior_empty(profile.polygon, profile.m0);
  const bool twice_primitive =
      cls == InteriorClassification::TwicePrimitiveTriangle && is_twice_primitive_triangle(profile.polygon, profile.m0);

  std::vector<ComponentDescriptor> out;
  for (const LinearLattice2& n : intermediate_lattices(profile.n0)) {
    const std::int64_t d = lattice_index(profile.n0, n);
    const bool is_base = n == profile.n0;
    ComponentDescriptor c{n,
                          AffineLattice2(profile.m0.basepoint(), rotate_minus90(n)),
                          d,
                          n.index(),
                          d,
                          is_base && width.width == 1,
                          is_base && twice_primitive,
                          false};
    c.contributes = !c.is_empty_locus && !c.excluded_nonbirational;
    ensure(c.index_in_Z2 * d == profile.idx, "component index does not divide the base index");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ComponentDescriptor> enumerate_components(const LatticePolygon& polygon) {
  return enumerate_components(build_profile(polygon));
}

std::int64_t count_components(const LatticePolygon& polygon) {
  const BoundaryProfile profile = build_profile(polygon);
  const auto n = static_cast<std::int64_t>(divisors(profile.idx).size());
  return count_interior_points_in_lattice(polygon, profile.m0) == 0 ? n - 1 : n;
}

std::int64_t count_components_oracle(const LatticePolygon& polygon) {
  std::vector<Vec2> boundary = boundary_points(polygon);
  std::sort(boundary.begin(), boundary.end(), lex_less);
  const AffineLattice2 m0 = affine_span(boundary);

  std::int64_t count = 0;
  for (const LinearLattice2& lin : intermediate_lattices(m0.linear())) {
    const AffineLattice2 m(m0.basepoint(), lin);
    std::vector<Vec2> on_boundary;
    std::copy_if(boundary.begin(), boundary.end(), std::back_inserter(on_boundary),
                 [&](const Vec2& p) { return m.contains(p); });
    const bool same_boundary = on_boundary == boundary;
    const bool has_interior = !interior_points_in_lattice(polygon, m, 1).empty();
    if (same_boundary && has_interior) ++count;
  }
  return count;
}

std::int64_t severi_dimension(const LatticePolygon& polygon, std::int64_t genus) {
  if (genus < 0) throw ArgumentError("genus must be non-negative");
  std::int64_t l = 0;
  for (const Facet& f : facets(polygon)) l += f.length;
  return l + genus - 1;
}

SeveriReport analyze(const LatticePolygon& polygon) {
  const BoundaryProfile profile = build_profile(polygon);

  // same column lattice as the full normal matrix, hence the same invariant factors
  IntMat distinct(2, static_cast<Eigen::Index>(profile.facets.size()));
  for (std::size_t j = 0; j < profile.facets.size(); ++j) {
    distinct(0, static_cast<Eigen::Index>(j)) = profile.facets[j].normal.x();
    distinct(1, static_cast<Eigen::Index>(j)) = profile.facets[j].normal.y();
  }
  std::vector<std::int64_t> factors;
  for (const Integer& a : invariant_factors(distinct)) factors.push_back(a.to_i64());
  ensure(factors.size() == 2 && factors[0] == 1 && factors[1] == profile.idx,
         "invariant factors of the normal matrix are not (1, index)");

  SeveriReport report{static_cast<std::int64_t>(profile.l()),
                      profile.facets,
                      profile.idx,
                      divisors(profile.idx),
                      std::move(factors),
                      profile.m0,
                      profile.n0,
                      lattice_width(polygon, profile.m0.linear()),
                      {},
                      classify_interior_empty(polygon, profile.m0),
                      std::nullopt,
                      enumerate_components(profile),
                      count_components(polygon),
                      severi_dimension(polygon, 1)};

  for (const ComponentDescriptor& c : report.components) {
    report.interior_counts.push_back({c.m, count_interior_points_in_lattice(polygon, c.m)});
  }
  if (profile.l() <= kSignatureLimit) report.signature = component_signature(profile).z;

  const auto contributing =
      std::count_if(report.components.begin(), report.components.end(), [](const auto& c) { return c.contributes; });
  ensure(contributing == report.component_count, "contributing components disagree with the component count");
  const std::int64_t oracle = count_components_oracle(polygon);
  ensure(oracle == report.component_count, "component count " + std::to_string(report.component_count) +
                                               " disagrees with the lattice-enumeration oracle " +
                                               std::to_string(oracle));
  return report;
}

}  // namespace severi
