#include "severi/json_io.hpp"

#include <limits>
#include <string>

namespace severi {

namespace {

std::int64_t exact_int(const Json& j, const char* what) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(u);
  }
  throw FormatError(std::string(what) + " must be an integer in the signed 64-bit range");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Vec2 pair_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(std::string(what) + " must be a pair [x, y]");
  return {exact_int(j[0], what), exact_int(j[1], what)};
}

}  // namespace

IntMat matrix_from_json(const Json& j) {
  const std::int64_t rows = exact_int(field(j, "rows"), "rows");
  const std::int64_t cols = exact_int(field(j, "cols"), "cols");
  if (rows < 1 || cols < 1) throw FormatError("matrix must have at least one row and one column");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<std::int64_t>(entries.size()) != rows) {
    throw FormatError("\"entries\" must hold exactly \"rows\" rows");
  }
  IntMat m(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != cols) {
      throw FormatError("row " + std::to_string(i) + " must hold exactly \"cols\" entries");
    }
    for (std::int64_t k = 0; k < cols; ++k) m(i, k) = exact_int(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  return m;
}

Json to_json(const IntMat& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_i64());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

std::vector<Vec2> points_from_json(const Json& j) {
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw FormatError("\"vertices\" must be an array of [x, y] pairs");
  std::vector<Vec2> out;
  for (const Json& v : vertices) out.push_back(pair_from_json(v, "vertex"));
  return out;
}

Json to_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

Json to_json(const LatticePolygon& polygon) {
  Json vs = Json::array();
  for (const Vec2& v : polygon.vertices()) vs.push_back(to_json(v));
  return Json{{"vertices", std::move(vs)}};
}

Json to_json(const AffineLattice2& lattice) {
  const LinearLattice2& lin = lattice.linear();
  return Json{{"basepoint", to_json(lattice.basepoint())},
              {"basis", Json::array({Json::array({lin.d1(), lin.e()}), Json::array({0, lin.d2()})})}};
}

Json to_json(const LinearLattice2& lattice) { return to_json(AffineLattice2(Vec2::Zero(), lattice)); }

AffineLattice2 affine_lattice_from_json(const Json& j) {
  const Vec2 bp = pair_from_json(field(j, "basepoint"), "basepoint");
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != 2) throw FormatError("\"basis\" must be [[d1, e], [0, d2]]");
  const Vec2 top = pair_from_json(basis[0], "basis row");
  const Vec2 bottom = pair_from_json(basis[1], "basis row");
  if (bottom.x() != 0) throw FormatError("\"basis\" must be upper triangular");
  try {
    return AffineLattice2(bp, LinearLattice2(top.x(), top.y(), bottom.y()));
  } catch (const ArgumentError& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const SnfResult<Integer>& r) {
  return Json{{"Q", to_json(r.Q)}, {"D", to_json(r.D)}, {"P", to_json(r.P)}};
}

Json to_json(const HsnfResult<Integer>& r) {
  return Json{{"Q", to_json(r.Q)}, {"A", to_json(r.A)}, {"P", to_json(r.P)}};
}

Json to_json(const ComponentDescriptor& c) {
  return Json{{"d", c.d},
              {"index_in_Z2", c.index_in_Z2},
              {"torsion_order", c.torsion_order},
              {"N", to_json(c.n)},
              {"M", to_json(c.m)},
              {"is_empty_locus", c.is_empty_locus},
              {"excluded_nonbirational", c.excluded_nonbirational},
              {"contributes", c.contributes}};
}

Json to_json(const std::vector<ComponentDescriptor>& components) {
  Json out = Json::array();
  for (const auto& c : components) out.push_back(to_json(c));
  return out;
}

Json to_json(const SeveriReport& report) {
  Json facet_list = Json::array();
  for (const Facet& f : report.facets) {
    facet_list.push_back(Json{{"index", f.index},
                              {"start", to_json(f.start)},
                              {"end", to_json(f.end)},
                              {"length", f.length},
                              {"normal", to_json(f.normal)}});
  }
  Json interior = Json::array();
  for (std::size_t i = 0; i < report.interior_counts.size(); ++i) {
    interior.push_back(Json{{"d", report.components[i].d},
                            {"M", to_json(report.interior_counts[i].m)},
                            {"interior_points", report.interior_counts[i].interior_points}});
  }

  Json out{{"l", report.l},
           {"facets", std::move(facet_list)},
           {"idx", report.idx},
           {"divisors", report.divisors},
           {"invariant_factors", report.invariant_factors},
           {"M0", to_json(report.m0)},
           {"N0", to_json(report.n0)},
           {"lattice_width_M0", Json{{"width", report.width_m0.width}, {"direction", to_json(report.width_m0.direction)}}},
           {"interior_counts", std::move(interior)},
           {"classification", std::string(to_string(report.classification))}};
  if (report.signature) out["signature"] = *report.signature;
  out["components"] = to_json(report.components);
  out["component_count"] = report.component_count;
  out["severi_dimension"] = report.severi_dimension;
  return out;
}

}  // namespace severi
