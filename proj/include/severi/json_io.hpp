#pragma once

// JSON encodings for matrices, polygons, lattices and reports. Only exact
// integers are accepted or produced.

#include <json.hpp>

#include <vector>

#include "severi/errors.hpp"
#include "severi/intnf.hpp"
#include "severi/lattice2.hpp"
#include "severi/polygon.hpp"
#include "severi/severi.hpp"

namespace severi {

using Json = nlohmann::ordered_json;

/// Malformed JSON document or field.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// {"rows": r, "cols": c, "entries": [[...], ...]}
IntMat matrix_from_json(const Json& j);
Json to_json(const IntMat& m);

/// {"vertices": [[x, y], ...]}
std::vector<Vec2> points_from_json(const Json& j);
Json to_json(const LatticePolygon& polygon);

Json to_json(const Vec2& v);
/// {"basepoint": [x, y], "basis": [[d1, e], [0, d2]]}
Json to_json(const AffineLattice2& lattice);
Json to_json(const LinearLattice2& lattice);
AffineLattice2 affine_lattice_from_json(const Json& j);

Json to_json(const SnfResult<Integer>& r);
Json to_json(const HsnfResult<Integer>& r);

Json to_json(const ComponentDescriptor& c);
Json to_json(const std::vector<ComponentDescriptor>& components);
Json to_json(const SeveriReport& report);

}  // namespace severi
