#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <mpfr.h>

#include "CLI11.hpp"
#include "torusfill/io.hpp"
#include "torusfill/seshadri.hpp"
#include "torusfill/svg.hpp"

using namespace torusfill;

namespace {

constexpr int kVerified = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

int display_digits() {
  if (const char* env = std::getenv("TORUSFILL_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1000) return static_cast<int>(v);
  }
  return 30;
}

std::string sqrt_decimal(const Surd& s, int digits) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t x;
  mpfr_init2(x, prec);
  mpfr_set_str(x, s.to_decimal(digits + 10).c_str(), 10, MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

Lattice2 lattice_option(const std::vector<std::string>& shorthand, const std::string& file, const json* fallback) {
  if (!shorthand.empty()) return Lattice2::rectangular(parse_surd(shorthand[0]), parse_surd(shorthand[1]));
  if (!file.empty()) return lattice_from_json(read_json_file(file));
  if (fallback && fallback->contains("lattice")) return lattice_from_json(fallback->at("lattice"));
  throw IoError("no lattice given (use --lattice mu1 mu2 or --lattice-file)");
}

struct ConstructArgs {
  std::string name;
  long k = 1;
  std::string eps = "0";
  std::string orientation = "+-";
  std::string out = "out.json";
  std::string certificate;
};

FillingCertificate build(const ConstructArgs& a) {
  const Surd eps = parse_surd(a.eps);
  if (a.name == "example1") return example_T2k2(a.k);
  if (a.name == "example2") return example_eight_ninths(eps, parse_orientation(a.orientation));
  if (a.name == "example3") return example_fortynine_fiftieths(eps);
  if (a.name == "theorem1") return theorem1_filling(eps);
  if (a.name == "family") return family_filling(a.k);
  if (a.name == "cube") return cube_filling(a.k);
  if (a.name == "polydisc") return polydisc_filling(a.k);
  throw IoError("unknown construction " + a.name);
}

int cmd_construct(const ConstructArgs& a) {
  const FillingCertificate c = build(a);
  const json cert = to_json(c, display_digits());
  if (a.certificate.empty()) {
    std::cout << cert.dump(2) << '\n';
  } else {
    write_json_file(a.certificate, cert);
  }
  if (!a.out.empty()) write_json_file(a.out, to_json(c.final_region));
  return c.valid() ? kVerified : kFailed;
}

struct VerifyArgs {
  std::string input;
  std::vector<std::string> lattice;
  std::string lattice_file;
  bool as_json = false;
};

int cmd_verify(const VerifyArgs& a) {
  const json in = read_json_file(a.input);
  const auto start = std::chrono::steady_clock::now();
  const Lattice2 L = lattice_option(a.lattice, a.lattice_file, &in);
  const int digits = display_digits();

  // Region from whichever form the file has; verdicts in the file are ignored.
  std::optional<ShearSequence> seq;
  Region region;
  if (in.contains("polygons")) {
    region = region_from_json(in);
  } else if (in.contains("sequence")) {
    seq = sequence_from_json(in.at("sequence"));
  } else if (in.contains("source") && in.contains("shears")) {
    seq = sequence_from_json(in);
  } else {
    throw IoError(a.input + ": expected a region, a shear sequence or a certificate");
  }

  json report{{"input", a.input}, {"lattice", to_json(L)}};
  bool ok = true;
  if (seq) {
    const FillingCertificate c = certify("verify", *seq, L);
    region = c.final_region;
    report["composable"] = c.composition.ok;
    report["symplectic"] = c.symplectic;
    report["area_preserved"] = c.area_preserved();
    ok = c.composition.ok && c.symplectic && c.area_preserved();
  }
  if (!pieces_disjoint(region)) {
    report["pieces_disjoint"] = false;
    ok = false;
  }
  const InjectivityVerdict inj = injects(region, L);
  report["injective"] = inj.ok;
  report["translates_checked"] = inj.translates_checked;
  ok = ok && inj.ok;
  if (inj.collision) {
    const auto& k = *inj.collision;
    report["collision"] = {{"a", k.a}, {"b", k.b}, {"overlap_area", scalar_report(k.overlap_area, digits)}};
  }
  const Surd fraction = region_area(region) / L.covolume();
  report["fundamental_domain"] = inj.ok && fraction == Surd(1);
  report["covered_fraction"] = scalar_report(fraction, digits);
  report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (a.as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    if (seq) std::cout << "composable: " << yn(report["composable"]) << '\n';
    std::cout << "injective: " << yn(inj.ok) << '\n';
    if (inj.collision) {
      std::cout << "collision: translate (" << inj.collision->a << ", " << inj.collision->b << "), overlap "
                << inj.collision->overlap_area.to_string() << '\n';
    }
    std::cout << "fundamental-domain: " << yn(report["fundamental_domain"]) << '\n';
    std::cout << "covered-fraction: " << fraction.to_string() << " ~ " << fraction.to_decimal(digits) << '\n';
  }
  return ok ? kVerified : kFailed;
}

int cmd_type(const std::string& path, bool as_json) {
  const IntMatrix b = int_matrix_from_json(read_json_file(path));
  const PolarizationType t = polarization_type(b);
  if (as_json) {
    json divisors = json::array(), u = json::array();
    for (const auto& d : t.divisors) divisors.push_back(d.get_str());
    for (const auto& row : t.basis_change) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.get_str());
      u.push_back(r);
    }
    std::cout << json{{"type", divisors}, {"basis_change", u}}.dump(2) << '\n';
  } else {
    std::cout << "type: (";
    for (std::size_t i = 0; i < t.divisors.size(); ++i) std::cout << (i ? ", " : "") << t.divisors[i];
    std::cout << ")\n";
  }
  return kVerified;
}

int cmd_period_lattice(const std::string& path, long k_max, long bound) {
  const int digits = display_digits();
  const SurdMatrix4 b = surd_matrix_from_json(read_json_file(path));
  const NormalizedBasis nb = normalize_basis(b, k_max);
  const PeriodLatticeSolution sol = build_period_lattice(nb.form);
  const NoCurveCertificate cert = verify_no_curves(sol);
  const auto relation = integrality_search(sol, bound);

  json u = json::array();
  for (const auto& row : nb.basis_change) u.push_back(row);
  auto sc = [&](const Surd& s) { return scalar_report(s, digits); };
  json out{{"normalized_form", matrix_to_json(nb.form)},
           {"basis_change", u},
           {"orientation_flipped", nb.orientation_flipped},
           {"block_case", nb.block_case},
           {"p", sc(sol.p)},
           {"q", sc(sol.q)},
           {"r", sc(sol.r)},
           {"s", sc(sol.s)},
           {"D", sc(sol.D)},
           {"x", sc(sol.x)},
           {"y", sc(sol.y)},
           {"u", sc(sol.u)},
           {"v", sc(sol.v)},
           {"rho_squared", sc(sol.rho2)},
           {"rho_decimal", sqrt_decimal(sol.rho2, 50)},
           {"v_zero", sol.v_zero},
           {"perturbation_radicand", sol.perturbation_radicand},
           {"certificate",
            {{"D_positive", cert.D_positive},
             {"compatible", cert.compatible},
             {"independent", cert.independent},
             {"product_irrational", cert.product_irrational},
             {"x_positive", cert.x_positive},
             {"positive_definite", cert.positive_definite},
             {"failures", cert.failures}}},
           {"integrality_bound", bound},
           {"integer_relation", relation ? json(*relation) : json(nullptr)}};
  std::cout << out.dump(2) << '\n';
  return cert.ok() && !relation ? kVerified : kFailed;
}

int cmd_seshadri(long d_max, const std::string& format) {
  const auto rows = table(d_max);
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json row{{"d", r.d}, {"epsilon", r.epsilon.to_string()}, {"fraction", r.p_lower.get_str()}};
      row["k0"] = r.pell ? json(r.pell->k0.get_str()) : json(nullptr);
      row["l0"] = r.pell ? json(r.pell->l0.get_str()) : json(nullptr);
      out.push_back(row);
    }
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "d,k0,l0,fraction\n";
    for (const auto& r : rows) {
      std::cout << r.d << ',' << (r.pell ? r.pell->k0.get_str() : "") << ',' << (r.pell ? r.pell->l0.get_str() : "")
                << ',' << r.p_lower.get_str() << '\n';
    }
  } else {
    std::printf("%4s %8s %8s  %s\n", "d", "k0", "l0", "eps^2/(2d)");
    for (const auto& r : rows) {
      std::printf("%4ld %8s %8s  %s\n", r.d, r.pell ? r.pell->k0.get_str().c_str() : "",
                  r.pell ? r.pell->l0.get_str().c_str() : "", r.p_lower.get_str().c_str());
    }
  }
  return kVerified;
}

int cmd_pell(long n) {
  const PellSolution s = pell_min(n);
  std::cout << "k0 = " << s.k0 << "\nl0 = " << s.l0 << '\n';
  return kVerified;
}

int cmd_svg(const std::string& input, const std::vector<std::string>& lattice, const std::string& lattice_file,
            const std::string& out) {
  const json in = read_json_file(input);
  const Lattice2 L = lattice_option(lattice, lattice_file, &in);
  Region r;
  if (in.contains("polygons")) {
    r = region_from_json(in);
  } else if (in.contains("final_region")) {
    r = region_from_json(in.at("final_region"));
  } else {
    throw IoError(input + ": expected a region or a certificate");
  }
  const std::string svg = render_svg(r, L);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream f(out);
    if (!f) throw IoError("cannot write " + out);
    f << svg;
  }
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic torus fillings by piecewise-linear shears"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a filling and write its certificate");
  construct->add_option("name", ca.name, "example1|example2|example3|theorem1|family|cube|polydisc")->required();
  construct->add_option("--k", ca.k, "Family parameter");
  construct->add_option("--eps", ca.eps, "Shrinking parameter, e.g. 1/100");
  construct->add_option("--orientation", ca.orientation, "Example 2 shear signs: ++, +-, -+, --");
  construct->add_option("--out", ca.out, "Final region file (empty: none)");
  construct->add_option("--certificate", ca.certificate, "Certificate file (default: stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Recompute composability and injectivity");
  verify->add_option("input", va.input, "Region, shear sequence or certificate JSON")->required();
  verify->add_option("--lattice", va.lattice, "Rectangular lattice mu1 mu2")->expected(2);
  verify->add_option("--lattice-file", va.lattice_file, "Lattice JSON {\"basis\": ...}");
  verify->add_flag("--json", va.as_json, "JSON report");

  std::string matrix_path;
  bool type_json = false;
  auto* type = app.add_subcommand("type", "Polarization type of an integral form");
  type->add_option("matrix", matrix_path, "Matrix JSON {\"n\": .., \"upper\": [..]}")->required();
  type->add_flag("--json", type_json, "JSON output");

  long k_max = 10, bound = 20;
  auto* period = app.add_subcommand("period-lattice", "Normalize an irrational form and build a curve-free period lattice");
  period->add_option("matrix", matrix_path, "Matrix JSON with n = 2")->required();
  period->add_option("--kmax", k_max, "Transvection search range");
  period->add_option("--bound", bound, "Integrality search box");

  long d_max = 30;
  std::string format = "table";
  auto* sesh = app.add_subcommand("seshadri", "Seshadri bounds for T(1, d)");
  sesh->add_option("--dmax", d_max, "Largest d")->check(CLI::PositiveNumber);
  sesh->add_option("--format", format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));

  long pell_n = 0;
  auto* pell = app.add_subcommand("pell", "Minimal solution of l^2 - N k^2 = 1");
  pell->add_option("N", pell_n, "Nonsquare N >= 2")->required();

  std::string svg_in, svg_out, svg_lattice_file;
  std::vector<std::string> svg_lattice;
  auto* svg = app.add_subcommand("svg", "Draw a region with its lattice translates");
  svg->add_option("input", svg_in, "Region or certificate JSON")->required();
  svg->add_option("--lattice", svg_lattice, "Rectangular lattice mu1 mu2")->expected(2);
  svg->add_option("--lattice-file", svg_lattice_file, "Lattice JSON");
  svg->add_option("--out", svg_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kVerified : kMalformed;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(va);
    if (*type) return cmd_type(matrix_path, type_json);
    if (*period) return cmd_period_lattice(matrix_path, k_max, bound);
    if (*sesh) return cmd_seshadri(d_max, format);
    if (*pell) return cmd_pell(pell_n);
    if (*svg) return cmd_svg(svg_in, svg_lattice, svg_lattice_file, svg_out);
  } catch (const std::exception& e) {
    // Library preconditions (degenerate form, eps out of range, ...) are input errors.
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
