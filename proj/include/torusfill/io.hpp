#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "torusfill/fillings.hpp"
#include "torusfill/latforms.hpp"

namespace torusfill {

using nlohmann::json;

/// Malformed input file or value.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalars are written as [[radicand, "num", "den"], ...]; zero is [].
/// Accepted on input: that form, JSON integers, and strings such as "3-2*sqrt(2)".
json to_json(const Surd& s);
Surd surd_from_json(const json& j);

json to_json(const Point2& p);
Point2 point_from_json(const json& j);

/// {"polygons": [[point, ...], ...]}
json to_json(const Region& r);
Region region_from_json(const json& j);

/// {"basis": [g1, g2]}
json to_json(const Lattice2& L);
Lattice2 lattice_from_json(const json& j);

/// {"axis": "x1"|"x2", "breakpoints": [...], "slopes": [...], "anchor": [point, value], "jumps": [...]}
json to_json(const Shear& s);
Shear shear_from_json(const json& j);

json to_json(const ShearSequence& seq);
ShearSequence sequence_from_json(const json& j);

/// Full record including recomputable verdicts (written, never read back as truth).
json to_json(const FillingCertificate& c, int digits);

/// {"n": 2|3, "upper": [b12, b13, ...]} for integral forms of size 2n.
IntMatrix int_matrix_from_json(const json& j);
/// Same schema with n = 2 and surd entries.
SurdMatrix4 surd_matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& b);
json matrix_to_json(const SurdMatrix4& b);

/// Scalar record {"exact": triples, "text": "...", "decimal": "..."} for reports.
json scalar_report(const Surd& s, int digits);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace torusfill
