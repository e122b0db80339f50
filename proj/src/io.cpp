#include "torusfill/io.hpp"

#include <fstream>

namespace torusfill {

namespace {

Rational rational_from_json(const json& num, const json& den) {
  auto text = [](const json& v) -> std::string {
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    throw IoError("rational part must be an integer or a string");
  };
  try {
    Rational q(text(num) + "/" + text(den));
    if (q.get_den() == 0) throw IoError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw IoError("bad integer in scalar");
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Surd> surds_from_json(const json& j) {
  if (!j.is_array()) throw IoError("expected an array of scalars");
  std::vector<Surd> out;
  for (const auto& e : j) out.push_back(surd_from_json(e));
  return out;
}

json surds_to_json(const std::vector<Surd>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

}  // namespace

json to_json(const Surd& s) {
  json a = json::array();
  for (const auto& [rad, c] : s.terms()) a.push_back({rad, c.get_num().get_str(), c.get_den().get_str()});
  return a;
}

Surd surd_from_json(const json& j) {
  if (j.is_number_integer()) return Surd(Rational(j.get<long>()));
  if (j.is_string()) {
    try {
      return parse_surd(j.get<std::string>());
    } catch (const std::exception& e) {
      throw IoError(std::string("bad scalar: ") + e.what());
    }
  }
  if (!j.is_array()) throw IoError("scalar must be an integer, a string or a list of [radicand, num, den]");
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || t[0].get<std::uint64_t>() == 0) {
      throw IoError("scalar term must be [radicand >= 1, num, den]");
    }
    terms.emplace_back(t[0].get<std::uint64_t>(), rational_from_json(t[1], t[2]));
  }
  return Surd::from_terms(terms);
}

json to_json(const Point2& p) { return {to_json(p.x1), to_json(p.x2)}; }

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw IoError("point must be [scalar, scalar]");
  return {surd_from_json(j[0]), surd_from_json(j[1])};
}

json to_json(const Region& r) {
  json polys = json::array();
  for (const auto& p : r.pieces) {
    json pts = json::array();
    for (const auto& v : p.vertices()) pts.push_back(to_json(v));
    polys.push_back(pts);
  }
  return {{"polygons", polys}};
}

Region region_from_json(const json& j) {
  const json& polys = field(j, "polygons");
  if (!polys.is_array()) throw IoError("\"polygons\" must be an array");
  Region r;
  for (const auto& poly : polys) {
    if (!poly.is_array()) throw IoError("polygon must be an array of points");
    std::vector<Point2> pts;
    for (const auto& p : poly) pts.push_back(point_from_json(p));
    try {
      r.pieces.push_back(ConvexPolygon::from_vertices(pts));
    } catch (const GeomError& e) {
      throw IoError(std::string("bad polygon: ") + e.what());
    }
  }
  return r;
}

json to_json(const Lattice2& L) { return {{"basis", {to_json(L.g1), to_json(L.g2)}}}; }

Lattice2 lattice_from_json(const json& j) {
  const json& b = field(j, "basis");
  if (!b.is_array() || b.size() != 2) throw IoError("\"basis\" must hold two vectors");
  try {
    return Lattice2::from_basis(point_from_json(b[0]), point_from_json(b[1]));
  } catch (const TorusError& e) {
    throw IoError(std::string("bad lattice: ") + e.what());
  }
}

json to_json(const Shear& s) {
  return {{"axis", to_string(s.axis)},
          {"breakpoints", surds_to_json(s.f.breakpoints())},
          {"slopes", surds_to_json(s.f.slopes())},
          {"anchor", {to_json(s.f.anchor_point()), to_json(s.f.anchor_value())}},
          {"jumps", surds_to_json(s.f.jumps())}};
}

Shear shear_from_json(const json& j) {
  const std::string axis = field(j, "axis").is_string() ? j.at("axis").get<std::string>() : "";
  if (axis != "x1" && axis != "x2") throw IoError("axis must be \"x1\" or \"x2\"");
  Surd ap, av;
  if (j.contains("anchor")) {
    const json& a = j.at("anchor");
    if (!a.is_array() || a.size() != 2) throw IoError("anchor must be [point, value]");
    ap = surd_from_json(a[0]);
    av = surd_from_json(a[1]);
  }
  std::vector<Surd> jumps;
  if (j.contains("jumps")) jumps = surds_from_json(j.at("jumps"));
  try {
    return {axis == "x1" ? Axis::x1 : Axis::x2,
            PLFunction(surds_from_json(field(j, "breakpoints")), surds_from_json(field(j, "slopes")), ap, av, jumps)};
  } catch (const ShearError& e) {
    throw IoError(std::string("bad shear: ") + e.what());
  }
}

json to_json(const ShearSequence& seq) {
  json shears = json::array();
  for (const auto& s : seq.shears) shears.push_back(to_json(s));
  return {{"source", to_json(seq.source)}, {"shears", shears}};
}

ShearSequence sequence_from_json(const json& j) {
  ShearSequence seq;
  seq.source = region_from_json(field(j, "source"));
  const json& shears = field(j, "shears");
  if (!shears.is_array()) throw IoError("\"shears\" must be an array");
  for (const auto& s : shears) seq.shears.push_back(shear_from_json(s));
  return seq;
}

json scalar_report(const Surd& s, int digits) {
  return {{"exact", to_json(s)}, {"text", s.to_string()}, {"decimal", s.to_decimal(digits)}};
}

json to_json(const FillingCertificate& c, int digits) {
  json violations = json::array();
  for (const auto& v : c.composition.violations) {
    violations.push_back({{"first", v.first}, {"second", v.second}, {"overlap_area", to_json(v.overlap_area)}});
  }
  json collision = nullptr;
  if (c.injectivity.collision) {
    const auto& k = *c.injectivity.collision;
    collision = {{"a", k.a}, {"b", k.b}, {"v", to_json(k.v)}, {"overlap_area", to_json(k.overlap_area)}};
  }
  json pieces = json::array();
  for (std::size_t i = 0; i < c.symplecticity.size(); ++i) {
    for (const auto& p : c.symplecticity[i].pieces) {
      pieces.push_back({{"shear", i}, {"slab", p.slab}, {"slope", to_json(p.slope)}, {"ok", p.symplectic}});
    }
  }
  return {{"name", c.name},
          {"sequence", to_json(c.sequence)},
          {"final_region", to_json(c.final_region)},
          {"lattice", to_json(c.lattice)},
          {"verdicts",
           {{"composable", c.composition.ok},
            {"injective", c.injectivity.ok},
            {"fundamental_domain", c.fundamental_domain},
            {"symplectic", c.symplectic},
            {"area_preserved", c.area_preserved()},
            {"valid", c.valid()}}},
          {"composition_violations", violations},
          {"collision", collision},
          {"translates_checked", c.injectivity.translates_checked},
          {"source_area", scalar_report(c.source_area, digits)},
          {"final_area", scalar_report(c.final_area, digits)},
          {"covered_fraction", scalar_report(c.covered_fraction, digits)},
          {"symplecticity", pieces}};
}

namespace {

std::pair<std::size_t, std::vector<Surd>> matrix_entries(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || (n.get<long>() != 2 && n.get<long>() != 3)) throw IoError("\"n\" must be 2 or 3");
  const std::size_t dim = 2 * n.get<std::size_t>();
  auto upper = surds_from_json(field(j, "upper"));
  if (upper.size() != dim * (dim - 1) / 2) throw IoError("\"upper\" has the wrong length");
  return {dim, upper};
}

}  // namespace

IntMatrix int_matrix_from_json(const json& j) {
  const auto [dim, upper] = matrix_entries(j);
  IntMatrix b(dim, std::vector<Integer>(dim, 0));
  std::size_t idx = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) {
      const Surd& s = upper[idx++];
      if (!s.is_rational() || s.to_rational().get_den() != 1) throw IoError("integral form expected");
      b[r][c] = s.to_rational().get_num();
      b[c][r] = -b[r][c];
    }
  }
  return b;
}

SurdMatrix4 surd_matrix_from_json(const json& j) {
  const auto [dim, upper] = matrix_entries(j);
  if (dim != 4) throw IoError("surd forms must have n = 2");
  std::array<Surd, 6> u;
  std::copy(upper.begin(), upper.end(), u.begin());
  return alternating4(u);
}

json matrix_to_json(const IntMatrix& b) {
  json upper = json::array();
  for (std::size_t r = 0; r < b.size(); ++r) {
    for (std::size_t c = r + 1; c < b.size(); ++c) upper.push_back(to_json(Surd(Rational(b[r][c]))));
  }
  return {{"n", b.size() / 2}, {"upper", upper}};
}

json matrix_to_json(const SurdMatrix4& b) {
  json upper = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = r + 1; c < 4; ++c) upper.push_back(to_json(b[r][c]));
  }
  return {{"n", 2}, {"upper", upper}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace torusfill
