#include "torusfill/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace torusfill {

namespace {

constexpr double kScale = 200.0;

// Source region first, then one color per neighbouring translate.
constexpr std::array<const char*, 9> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                              "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

struct Bounds {
  double lo1 = std::numeric_limits<double>::infinity(), hi1 = -lo1, lo2 = lo1, hi2 = -lo1;
  void add(double x, double y) {
    lo1 = std::min(lo1, x);
    hi1 = std::max(hi1, x);
    lo2 = std::min(lo2, y);
    hi2 = std::max(hi2, y);
  }
};

std::string points(const std::vector<Point2>& vs, const Point2& shift, Bounds& b) {
  std::string out;
  for (const auto& v : vs) {
    const double x = (v.x1 + shift.x1).to_double() * kScale;
    const double y = -(v.x2 + shift.x2).to_double() * kScale;
    b.add(x, y);
    if (!out.empty()) out += ' ';
    out += num(x) + ',' + num(y);
  }
  return out;
}

}  // namespace

std::string render_svg(const Region& r, const Lattice2& L) {
  Bounds b;
  std::ostringstream body;
  int color = 1;
  for (long a = -1; a <= 1; ++a) {
    for (long c = -1; c <= 1; ++c) {
      if (a == 0 && c == 0) continue;
      const Point2 shift = L.vector(a, c);
      body << "  <g fill=\"" << kPalette[color++] << "\" fill-opacity=\"0.35\" stroke=\"#444444\" stroke-width=\"0.5\">\n";
      for (const auto& p : r.pieces) body << "    <polygon points=\"" << points(p.vertices(), shift, b) << "\"/>\n";
      body << "  </g>\n";
    }
  }
  const Point2 zero{Surd(0), Surd(0)};
  body << "  <g fill=\"" << kPalette[0] << "\" fill-opacity=\"0.8\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& p : r.pieces) body << "    <polygon points=\"" << points(p.vertices(), zero, b) << "\"/>\n";
  body << "  </g>\n";
  body << "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" stroke-dasharray=\"8,4\" points=\""
       << points(fundamental_parallelogram(L).vertices(), zero, b) << "\"/>\n";

  const double pad = 10;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(b.lo1 - pad) << ' '
      << num(b.lo2 - pad) << ' ' << num(b.hi1 - b.lo1 + 2 * pad) << ' ' << num(b.hi2 - b.lo2 + 2 * pad) << "\" width=\""
      << num(b.hi1 - b.lo1 + 2 * pad) << "\" height=\"" << num(b.hi2 - b.lo2 + 2 * pad) << "\">\n"
      << body.str() << "</svg>\n";
  return svg.str();
}

}  // namespace torusfill
