#include "doctest.h"
#include "torusfill/shears.hpp"

using namespace torusfill;

namespace {

Surd q(long n, long d = 1) { return Surd::rational(n, d); }

Region diamond(const Surd& a) {
  const Surd h = a / 2;
  return {{ConvexPolygon::from_vertices({{h, 0}, {0, h}, {-h, 0}, {0, -h}})}};
}

// f = 0 on [-1/3, 1/3], slope one outside.
PLFunction dead_zone() { return PLFunction({q(-1, 3), q(1, 3)}, {1, 0, 1}); }

}  // namespace

TEST_CASE("pl function values") {
  const auto f = dead_zone();
  CHECK(f.continuous());
  CHECK(f(0) == Surd(0));
  CHECK(f(q(1, 2)) == q(1, 6));
  CHECK(f(q(-1, 2)) == q(-1, 6));
  CHECK(f.intercept(2) == q(-1, 3));
  CHECK(f.intercept(0) == q(1, 3));
  CHECK_FALSE(f.slab_of(q(1, 3)));
  CHECK(*f.slab_of(q(1, 4)) == 1);
  CHECK(f.is_identity_on_slab(1));
  CHECK(f.negated()(q(1, 2)) == q(-1, 6));

  // Anchor away from zero, irrational breakpoint, and a jump.
  const PLFunction g({Surd::sqrt(2)}, {0, 2}, 5, 1, {q(1, 2)});
  CHECK_FALSE(g.continuous());
  // Right slab: 2t - 9; left value at sqrt(2) is 2 sqrt(2) - 9 - 1/2, constant leftwards.
  CHECK(g(0) == 2 * Surd::sqrt(2) - q(19, 2));
  CHECK(g(5) == Surd(1));
  CHECK(g(Surd::sqrt(2)) == g.value_on_slab(1, Surd::sqrt(2)));
  CHECK(g.value_on_slab(1, Surd::sqrt(2)) - g.value_on_slab(0, Surd::sqrt(2)) == q(1, 2));

  CHECK_THROWS_AS(PLFunction({1, 0}, {0, 0, 0}), ShearError);
  CHECK_THROWS_AS(PLFunction({1}, {0}), ShearError);
}

TEST_CASE("plane image of a linear shear") {
  for (long k = 1; k <= 4; ++k) {
    const Shear s{Axis::x1, PLFunction::linear(2 * k - 1)};
    const Region img = plane_image(s, diamond(2 * k));
    REQUIRE(img.pieces.size() == 1);
    // Parallelogram with vertices (+-k, 0), +-((2k-1)k + 0, k) shifted: oracle by direct vertex map.
    const Surd c(2 * k - 1);
    const auto expect = ConvexPolygon::from_vertices({{k, 0}, {c * k, k}, {-k, 0}, {-c * k, -k}});
    CHECK(img.pieces[0] == expect);
    CHECK(region_area(img) == Surd(2 * k * k));
  }
}

TEST_CASE("dead zone shear on the 4/3 diamond") {
  const Shear s1{Axis::x1, dead_zone()};
  const Region src = diamond(q(4, 3));
  const Region img = plane_image(s1, src);
  CHECK(img.pieces.size() == 3);
  CHECK(pieces_disjoint(img));
  CHECK(region_area(img) == q(8, 9));
  CHECK(region_area(moved_set(s1, src)) == q(8, 9) - region_area(fixed_set(s1, src)));
  // Fixed band |x2| < 1/3 of the diamond: hexagon of area 8/9 - 2 * (1/3)^2 = 2/3.
  CHECK(region_area(fixed_set(s1, src)) == q(2, 3));
  // Pointwise agreement with the piece maps.
  CHECK(s1.apply({0, q(1, 2)}) == Point2{q(1, 6), q(1, 2)});

  const Shear s2{Axis::x2, dead_zone().negated()};
  const ShearSequence seq{src, {s1, s2}};
  CHECK(check_composable(seq).ok);
  const Region fin = seq.final_region();
  CHECK(region_area(fin) == q(8, 9));
  CHECK(pieces_disjoint(fin));
  // The final image sits in the box [-2/3, 2/3]^2 with no vertex beyond 1/3 in x1 of the tips.
  const Box b = fin.box();
  CHECK(b.hi1 <= 2.0 / 3 + 1e-12);
  CHECK(b.hi2 <= 2.0 / 3 + 1e-12);

  // Same shear twice moves the same tip twice.
  const ShearSequence bad{src, {s1, Shear{Axis::x1, dead_zone()}}};
  const auto v = check_composable(bad);
  CHECK_FALSE(v.ok);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].overlap_area == q(2, 9));
}

TEST_CASE("induced maps are symplectic") {
  for (Axis a : {Axis::x1, Axis::x2}) {
    const Shear s{a, PLFunction({q(-1, 3), Surd::sqrt(2)}, {q(7, 5), 0, -Surd::sqrt(3)})};
    const auto rec = induced_4d_check(s);
    CHECK(rec.ok);
    CHECK(rec.pieces.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(s.slab_map(i).area_preserving());
      CHECK(fiber_map_on_slab(s, i).area_preserving());
    }
  }
  // A non-shear Jacobian fails the same test.
  Matrix4 j = induced_jacobian(Axis::x1, 2);
  j[3][2] = 0;
  const Matrix4 om = standard_symplectic_gram();
  CHECK_FALSE(multiply(transpose(j), multiply(om, j)) == om);

  const Shear s{Axis::x1, dead_zone()};
  CHECK_FALSE(fiber_parallelogram(s, {0, q(1, 3)}));
  const auto fib = fiber_parallelogram(s, {0, 1});
  REQUIRE(fib);
  CHECK((*fib)({1, 0}) == Point2{1, -1});
}
