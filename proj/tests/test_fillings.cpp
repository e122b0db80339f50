#include <random>

#include "doctest.h"
#include "torusfill/fillings.hpp"

using namespace torusfill;

namespace {

Surd q(long n, long d = 1) { return Surd::rational(n, d); }

// Number of lattice translates of p that lie strictly inside some piece of r.
int preimages(const Region& r, const Lattice2& L, const Point2& p) {
  int n = 0;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      const Point2 t = p + L.vector(a, b);
      const double x = t.x1.to_double(), y = t.x2.to_double();
      for (const auto& piece : r.pieces) {
        const Box bx = piece.box();
        if (x < bx.lo1 - 1e-9 || x > bx.hi1 + 1e-9 || y < bx.lo2 - 1e-9 || y > bx.hi2 + 1e-9) continue;
        n += piece.contains_interior(t);
      }
    }
  }
  return n;
}

// Exact oracle: random rational points of the fundamental parallelogram are
// covered at most once (exactly once for a fundamental domain).
void check_cover(const FillingCertificate& c, bool full, int samples = 150) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> u(1, 9972);
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const Surd s = q(u(rng), 9973), t = q(u(rng), 9973);
    const int n = preimages(c.final_region, c.lattice, s * c.lattice.g1 + t * c.lattice.g2);
    CHECK(n <= 1);
    if (full) CHECK(n == 1);
    hits += n;
  }
  if (!full) CHECK(hits < samples);
}

void check_valid(const FillingCertificate& c) {
  CHECK(c.composition.ok);
  CHECK(c.injectivity.ok);
  CHECK(c.symplectic);
  CHECK(c.area_preserved());
  CHECK(c.valid());
  CHECK(pieces_disjoint(c.final_region));
}

}  // namespace

TEST_CASE("diamonds") {
  CHECK(region_area(diamond(2)) == Surd(2));
  CHECK(region_area(diamond(q(4, 3))) == q(8, 9));
  CHECK(region_area(diamond(Surd::sqrt(2))) == Surd(1));
  CHECK_THROWS_AS(diamond(0), FillingError);

  const DistortedDiamond sym{2, q(1, 2), q(1, 2), q(1, 2), q(1, 2)};
  const Region r = distorted_diamond(sym);
  CHECK(r.pieces.size() == 5);
  CHECK(region_area(r) == Surd(2));
  CHECK(pieces_disjoint(r));
  // The symmetric distorted diamond of size 2 is the diamond itself.
  CHECK(region_overlap_area(r, diamond(2)) == Surd(2));

  const auto t = theorem1_constants();
  const DistortedDiamond th{Surd::sqrt(2), t.h_top, t.h_bot, t.w_left, t.w_right};
  CHECK(region_area(distorted_diamond(th)) == Surd(1));
  CHECK(th.w_right == (1 - t.b) / 2);
  CHECK_THROWS_AS(distorted_diamond({2, q(1, 2), q(1, 3), q(1, 2), q(1, 2)}), FillingError);
  CHECK_THROWS_AS(distorted_diamond({2, q(1, 2), q(1, 2), q(1, 2), q(2, 3)}), FillingError);
}

TEST_CASE("example 1") {
  for (long k = 1; k <= 5; ++k) {
    const auto c = example_T2k2(k);
    check_valid(c);
    CHECK(c.fundamental_domain);
    CHECK(c.covered_fraction == Surd(1));
    const Surd m(2 * k * k - k);
    CHECK(c.final_region.pieces[0] == ConvexPolygon::from_vertices({{k, 0}, {m, k}, {-k, 0}, {-m, -k}}));
    // Long edges through (+-k, 0) with slope 1/(2k-1): vertical distance 1 between them.
    const Surd slope = q(1, 2 * k - 1);
    CHECK(Surd(k) * slope - (-Surd(k)) * slope == q(2 * k, 2 * k - 1));
    CHECK(Surd(0) - (Surd(-2 * k) * slope) - q(2 * k, 2 * k - 1) + 1 == Surd(1));
    if (k <= 2) check_cover(c, true);
  }
}

TEST_CASE("example 2") {
  for (Orientation o : {Orientation::pp, Orientation::pm, Orientation::mp, Orientation::mm}) {
    const auto c = example_eight_ninths(0, o);
    check_valid(c);
    CHECK(c.covered_fraction == q(8, 9));
    CHECK(1 - c.final_area == 4 * q(1, 6) * q(1, 6));
  }
  check_cover(example_eight_ninths(0, Orientation::pm), false);
  // (++) and (--) are mirror images under x1 -> -x1.
  AffineMap2 mirror;
  mirror.linear[0][0] = -1;
  const Region pp = example_eight_ninths(0, Orientation::pp).final_region;
  const Region mm = example_eight_ninths(0, Orientation::mm).final_region;
  CHECK(region_overlap_area(apply_affine(mirror, pp), mm) == q(8, 9));

  Surd prev = 0;
  for (long n : {10, 100, 1000}) {
    const auto c = example_eight_ninths(q(1, n + 1));
    check_valid(c);
    CHECK(c.covered_fraction >= q(8, 9) - 5 * q(1, n + 1));
    CHECK(c.covered_fraction >= prev);
    prev = c.covered_fraction;
  }
  CHECK(example_eight_ninths(q(1, 100)).covered_fraction > q(83, 100));
  CHECK_THROWS_AS(example_eight_ninths(q(1, 10)), FillingError);
  CHECK(parse_orientation("-+") == Orientation::mp);
  CHECK_THROWS_AS(parse_orientation("+"), FillingError);
}

TEST_CASE("example 3") {
  const auto c = example_fortynine_fiftieths(0);
  check_valid(c);
  CHECK(c.covered_fraction == q(49, 50));
  CHECK(1 - c.final_area == q(1, 50));
  CHECK(q(7, 5) * q(7, 5) / 2 == c.covered_fraction);
  check_cover(c, false);

  const Surd e = q(1, 100), e4 = e / 4;
  const auto ce = example_fortynine_fiftieths(e);
  check_valid(ce);
  const Shear& f = ce.sequence.shears[1];
  CHECK(f.apply({e4, 1 - e4}) == Point2{e4, 1 - e4});
  CHECK(f.apply({q(2, 5) - e4, 1 - e4}) == Point2{q(2, 5) - e4, 1 - e4});
  CHECK(f.apply({e / 2, 1}) == Point2{q(-2, 5) + e / 2, 1});
  CHECK(f.apply({q(2, 5) - e / 2, 1}) == Point2{-e / 2, 1});
  CHECK(f.apply({e / 2, 0}) == Point2{e / 2, 0});
  CHECK(f.apply({3 * e4, -e4}) == Point2{q(2, 5) + e / 2, -e4});
  CHECK(f.apply({q(2, 5) - 3 * e4, -e4}) == Point2{q(4, 5) - e, -e4});
  CHECK(ce.covered_fraction == (q(7, 5) - e) * (q(7, 5) - e) / 2);
  CHECK_THROWS_AS(example_fortynine_fiftieths(q(1, 20)), FillingError);
}

TEST_CASE("theorem 1") {
  const auto t = theorem1_constants();
  const Surd r2 = Surd::sqrt(2);
  CHECK(t.b * t.b - 6 * t.b + 1 == Surd(0));
  CHECK(t.h_top == 1 - r2 / 2);
  CHECK(t.h_bot == 3 * r2 / 2 - 2);
  CHECK(t.h_top + t.h_bot == (1 - t.b) / 2);
  CHECK(t.h_top + t.h_bot == 2 * t.b / (1 - t.b));
  CHECK(t.h_top == 1 - (1 - t.b) / (1 + t.b));
  // Interval oracle on the decimal values.
  CHECK(std::abs(t.h_top.to_double() - 0.29289) < 1e-5);
  CHECK(std::abs(t.h_bot.to_double() - 0.12132) < 1e-5);

  const auto c = theorem1_filling(0);
  check_valid(c);
  CHECK(c.fundamental_domain);
  CHECK(c.covered_fraction == Surd(1));
  check_cover(c, true, 60);

  Surd prev = 0;
  for (long n : {10, 100, 1000}) {
    const auto ce = theorem1_filling(q(1, n));
    check_valid(ce);
    CHECK(ce.covered_fraction >= prev);
    prev = ce.covered_fraction;
  }
  CHECK(prev >= q(99, 100));
}

TEST_CASE("family, cube and polydisc fillings") {
  for (long k = 1; k <= 3; ++k) {
    const auto c = family_filling(k);
    check_valid(c);
    CHECK(c.fundamental_domain);
    CHECK(c.lattice.covolume() == q((2 * k + 1) * (2 * k + 1), 2 * (k + 1) * (k + 1)));
    CHECK(region_area(diamond(q(2 * k + 1, k + 1))) == c.lattice.covolume());
    check_cover(c, true, 60);
  }
  // k = 2: slices of heights 1/9 and 2/9 with slopes 1/2 and 1/4.
  const auto fam2 = family_filling(2);
  const auto& f2 = fam2.sequence.shears[1].f;
  CHECK(f2.breakpoints().back() == q(1, 2) + q(1, 9));
  CHECK(f2.slopes().back() == q(1, 4));
  CHECK(f2.slopes()[f2.slopes().size() - 2] == q(1, 2));
  // k = 1: the top triangle lands over x1 in (3/8, 7/8) with apex at 3/4.
  const auto fam1 = family_filling(1);
  const Shear& f1 = fam1.sequence.shears[1];
  CHECK(f1.apply({q(-1, 4), q(1, 2) + q(1, 1000000)}).x1 > q(3, 8));
  CHECK(f1.apply({0, q(3, 4)}) == Point2{q(3, 4), q(3, 4)});

  for (long k = 1; k <= 3; ++k) {
    const auto c = cube_filling(k);
    check_valid(c);
    CHECK(c.fundamental_domain);
    check_cover(c, true, 60);
  }
  const Box b = cube_filling(2).final_region.box();
  CHECK(b.lo1 == doctest::Approx(-3));
  CHECK(b.hi1 == doctest::Approx(3));
  const auto p = polydisc_filling(2);
  check_valid(p);
  CHECK(p.covered_fraction == Surd(1));
  CHECK(p.fundamental_domain);
}
