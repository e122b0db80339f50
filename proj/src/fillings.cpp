#include "torusfill/fillings.hpp"

#include <algorithm>

namespace torusfill {

namespace {

Surd q(long n, long d = 1) { return Surd::rational(n, d); }

ConvexPolygon poly(std::vector<Point2> v) { return ConvexPolygon::from_vertices(std::move(v)); }

}  // namespace

Region diamond(const Surd& a) {
  if (a.sign() <= 0) throw FillingError("diamond size must be positive");
  const Surd h = a / 2;
  return {{poly({{h, 0}, {0, h}, {-h, 0}, {0, -h}})}};
}

void DistortedDiamond::validate() const {
  if (!(a > Surd(1))) throw FillingError("distorted diamond needs a > 1");
  if (h_top.sign() < 0 || h_bot.sign() < 0 || w_left.sign() <= 0 || w_right.sign() <= 0) {
    throw FillingError("distorted diamond parts must be nonnegative");
  }
  if (h_top + h_bot != a - 1) throw FillingError("triangle heights must sum to a - 1");
  if (w_left + w_right != Surd(1)) throw FillingError("flap widths must sum to 1");
}

Region distorted_diamond(const DistortedDiamond& s) {
  s.validate();
  const Surd d = s.d(), h = q(1, 2);
  Region r;
  r.pieces.push_back(rectangle(-d, d, -h, h));
  if (s.h_top.sign() > 0) r.pieces.push_back(poly({{-d, h}, {d, h}, {0, h + s.h_top}}));
  if (s.h_bot.sign() > 0) r.pieces.push_back(poly({{-d, -h}, {0, -h - s.h_bot}, {d, -h}}));
  r.pieces.push_back(poly({{-d, -h}, {-d, h}, {-d - s.w_left, 0}}));
  r.pieces.push_back(poly({{d, -h}, {d + s.w_right, 0}, {d, h}}));
  return r;
}

FillingCertificate certify(std::string name, ShearSequence seq, const Lattice2& lattice) {
  FillingCertificate c;
  c.name = std::move(name);
  c.lattice = lattice;
  c.final_region = seq.final_region();
  c.composition = check_composable(seq);
  c.injectivity = injects(c.final_region, lattice);
  c.source_area = region_area(seq.source);
  c.final_area = region_area(c.final_region);
  c.covered_fraction = c.final_area / lattice.covolume();
  c.fundamental_domain = c.injectivity.ok && c.final_area == lattice.covolume();
  for (const auto& s : seq.shears) {
    c.symplecticity.push_back(induced_4d_check(s));
    c.symplectic = c.symplectic && c.symplecticity.back().ok;
  }
  c.sequence = std::move(seq);
  return c;
}

FillingCertificate example_T2k2(long k) {
  if (k < 1) throw FillingError("k must be positive");
  ShearSequence seq{diamond(Surd(2 * k)), {{Axis::x1, PLFunction::linear(2 * k - 1)}}};
  return certify("example1 k=" + std::to_string(k), std::move(seq), Lattice2::rectangular(2 * k * k, 1));
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::pp: return "++";
    case Orientation::pm: return "+-";
    case Orientation::mp: return "-+";
    case Orientation::mm: return "--";
  }
  return "?";
}

Orientation parse_orientation(const std::string& s) {
  for (Orientation o : {Orientation::pp, Orientation::pm, Orientation::mp, Orientation::mm}) {
    if (to_string(o) == s) return o;
  }
  throw FillingError("orientation must be one of ++ +- -+ --");
}

FillingCertificate example_eight_ninths(const Surd& eps, Orientation o) {
  if (eps.sign() < 0 || !(eps < q(1, 10))) throw FillingError("eps must lie in [0, 1/10)");
  const PLFunction f({q(-1, 3), q(1, 3)}, {1, 0, 1});
  const bool first_plus = o == Orientation::pp || o == Orientation::pm;
  const bool second_plus = o == Orientation::pp || o == Orientation::mp;
  ShearSequence seq{diamond(q(4, 3) - eps),
                    {{Axis::x1, first_plus ? f : f.negated()}, {Axis::x2, second_plus ? f : f.negated()}}};
  return certify("example2 " + to_string(o) + " eps=" + eps.to_string(), std::move(seq),
                 Lattice2::rectangular(1, 1));
}

FillingCertificate example_fortynine_fiftieths(const Surd& eps) {
  if (eps.sign() < 0 || !(eps < q(1, 20))) throw FillingError("eps must lie in [0, 1/20)");
  // Diamond centred at (1/5, 1/2): the rectangle (0, 2/5) x (0, 1) stays fixed.
  const Region src = translate(diamond(q(7, 5) - eps), {q(1, 5), q(1, 2)});
  // Flaps: x2-shear lowering the right flap and raising the left one.
  const PLFunction g({q(-1, 10), 0, q(2, 5), q(1, 2)}, {q(-1, 2), -1, 0, -1, q(-1, 2)}, q(1, 5), 0);
  // Triangles: top moved left by 2/5, bottom right by 2/5, plus slope 1/2.
  PLFunction f;
  if (eps.is_zero()) {
    f = PLFunction({0, 1}, {q(1, 2), 0, q(1, 2)}, q(1, 2), 0, {q(-2, 5), q(-2, 5)});
  } else {
    const Surd e4 = eps / 4;
    f = PLFunction({-e4, 0, 1 - e4, 1}, {q(1, 2), -(q(2, 5) - e4) / e4, 0, -q(2, 5) / e4, q(1, 2)}, q(1, 2), 0);
  }
  ShearSequence seq{src, {{Axis::x2, g}, {Axis::x1, f}}};
  return certify("example3 eps=" + eps.to_string(), std::move(seq), Lattice2::rectangular(1, 1));
}

Theorem1Constants theorem1_constants() {
  Theorem1Constants c;
  c.b = 3 - 2 * Surd::sqrt(2);
  c.w_left = (1 + c.b) / 2;
  c.w_right = (1 - c.b) / 2;
  c.h_top = 2 * c.b / (1 + c.b);
  c.h_bot = 4 * c.b * c.b / (1 - c.b * c.b);
  return c;
}

FillingCertificate theorem1_filling(const Surd& eps) {
  if (eps.sign() < 0 || eps > q(1, 10)) throw FillingError("eps must lie in [0, 1/10]");
  const auto [b, W, wr, ht, hb] = theorem1_constants();
  const Surd a = Surd::sqrt(2), d = (a - 1) / 2, half = q(1, 2);
  // Rectangle (0, 2d) x (-1/2, 1/2); the right rectangle (2d, 1) receives both flaps,
  // the left flap (-W, 0) already projects onto it.
  Region src = translate(distorted_diamond({a, ht, hb, W, wr}), {d, 0});
  if (!eps.is_zero()) {
    const Surd lam = (a - eps) / a;
    AffineMap2 m;
    m.linear[0][0] = lam;
    m.linear[1][1] = lam;
    m.translation = {d * (1 - lam), 0};
    src = apply_affine(m, src);
  }

  // Empty bottom triangle left by the flaps, in coordinates local to the right
  // rectangle: zero on (0, b), apex (wr, ht), zero again at W.
  auto t_bot = [&](const Surd& x) {
    if (x <= b) return Surd(0);
    if (x <= wr) return ht * (x - b) / (wr - b);
    return ht * (W - x) / (W - wr);
  };
  // Flap columns are translated so the right flap rests on t_bot and the left flap on top of it.
  auto g_left = [&](const Surd& x) {
    const Surd right_len = x < wr ? 1 - x / wr : Surd(0);
    return t_bot(x) + right_len - half + x / (2 * W);
  };
  auto g_right = [&](const Surd& x) { return t_bot(x) - x / (2 * wr); };
  auto slope = [](auto fn, const Surd& u, const Surd& v) { return (fn(v) - fn(u)) / (v - u); };
  const PLFunction g({b - W, wr - W, 0, 2 * d, 2 * d + b, 2 * d + wr},
                     {slope(g_left, 0, b), slope(g_left, b, wr), slope(g_left, wr, W), 0, slope(g_right, 0, b),
                      slope(g_right, b, wr), slope(g_right, b, wr)});

  // Top triangle moves left by wr into the bottom gap, the bottom triangle right by wr
  // into the top gap; the extra slopes tilt the apexes onto the gap apexes.
  const Surd st = (wr / 2 - b) / ht, sb = (wr / 2 - b) / hb;
  PLFunction f;
  if (eps.is_zero()) {
    f = PLFunction({-half, half}, {sb, 0, st}, 0, 0, {-wr, -wr});
  } else {
    const Surd dl = eps / 4;
    f = PLFunction({-half - dl, -half, half - dl, half}, {sb, -(wr - dl) / dl, 0, -wr / dl, st});
  }
  ShearSequence seq{std::move(src), {{Axis::x2, g}, {Axis::x1, f}}};
  return certify("theorem1 eps=" + eps.to_string(), std::move(seq), Lattice2::rectangular(1, 1));
}

FillingCertificate family_filling(long k) {
  if (k < 1) throw FillingError("k must be positive");
  const long kk = (k + 1) * (k + 1);
  const Surd a = q(2 * k + 1, k + 1), r = q(k, k + 1), half = q(1, 2);
  const Surd ws = q(2 * k * k + 2 * k + 1, 2 * kk), mu = r + ws, o = ws - half, c = q(1, 2 * kk);

  // Slice j (j = 1 at the base) has height j/(k+1)^2 and x1-slope 1/(2j).
  std::vector<Surd> cum{Surd(0)};
  for (long j = 1; j <= k; ++j) cum.push_back(cum.back() + q(j, kk));

  // Height profile of the sheared top triangle over the strip right of the
  // rectangle, in strip coordinates X; its base starts at X = c.
  std::vector<std::pair<Surd, Surd>> left{{c, 0}}, right{{c + r, 0}};
  for (long j = 1; j <= k; ++j) {
    const Surd hj = q(j, kk), sj = q(1, 2 * j);
    left.push_back({left.back().first + hj * (1 + sj), cum[j]});
    right.push_back({right.back().first - hj * (1 - sj), cum[j]});
  }
  auto gap = [&](const Surd& x) {
    if (x <= c || x >= c + r) return Surd(0);
    const auto& chain = x <= left.back().first ? left : right;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const auto& [x0, y0] = chain[i];
      const auto& [x1, y1] = chain[i + 1];
      if ((x - x0).sign() * (x - x1).sign() <= 0) return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
    }
    return Surd(0);
  };
  std::vector<Surd> kinks{c, c + r, half, o, ws, Surd(0)};
  for (const auto& [x, y] : left) kinks.push_back(x);
  for (const auto& [x, y] : right) kinks.push_back(x);
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  // Right flap rests on the gap; the left flap (wrapped by mu) on top of the right flap.
  auto g_right = [&](const Surd& x) { return gap(x) - x; };
  auto g_left = [&](const Surd& x) { return gap(x) + (x < half ? 1 - 2 * x : Surd(0)) - (ws - x); };
  std::vector<std::pair<Surd, Surd>> nodes;
  for (const auto& x : kinks) {
    if (x >= o && x <= ws) nodes.push_back({x - mu + r / 2, g_left(x)});
  }
  for (const auto& x : kinks) {
    if (x >= 0 && x <= half) nodes.push_back({x + r / 2, g_right(x)});
  }
  const PLFunction g = PLFunction::through(nodes);

  std::vector<Surd> bps, slopes, jumps;
  for (long j = k - 1; j >= 1; --j) {
    bps.push_back(-half - cum[j]);
    jumps.push_back(0);
  }
  for (long j = k; j >= 1; --j) slopes.push_back(q(1, 2 * j));
  bps.push_back(-half);
  bps.push_back(half);
  jumps.push_back(r + c);
  jumps.push_back(r + c);
  slopes.push_back(0);
  for (long j = 1; j <= k; ++j) slopes.push_back(q(1, 2 * j));
  for (long j = 1; j <= k - 1; ++j) {
    bps.push_back(half + cum[j]);
    jumps.push_back(0);
  }
  const PLFunction f(bps, slopes, 0, 0, jumps);

  ShearSequence seq{diamond(a), {{Axis::x2, g}, {Axis::x1, f}}};
  return certify("family k=" + std::to_string(k), std::move(seq), Lattice2::rectangular(mu, 1));
}

FillingCertificate cube_filling(long k) {
  if (k < 1) throw FillingError("k must be positive");
  const Surd h = q(k, 2);
  ShearSequence seq{{{rectangle(-h, h, -h, h)}}, {{Axis::x1, PLFunction::linear(k)}}};
  return certify("cube k=" + std::to_string(k), std::move(seq), Lattice2::rectangular(k * k, 1));
}

FillingCertificate polydisc_filling(long k) {
  if (k < 1) throw FillingError("k must be positive");
  const Surd w = q(1, 2 * k), h = q(k, 2);
  ShearSequence seq{{{rectangle(-w, w, -h, h)}}, {{Axis::x1, PLFunction::linear(q(1, k))}}};
  return certify("polydisc k=" + std::to_string(k), std::move(seq), Lattice2::rectangular(1, 1));
}

}  // namespace torusfill
