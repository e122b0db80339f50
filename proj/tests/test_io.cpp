#include "doctest.h"
#include "torusfill/io.hpp"

using namespace torusfill;

TEST_CASE("scalar serialization") {
  const Surd s = Surd::rational(3, 7) - Surd::sqrt(2, Rational(5, 2)) + Surd::sqrt(15);
  CHECK(surd_from_json(to_json(s)) == s);
  CHECK(to_json(Surd()) == json::array());
  CHECK(surd_from_json(json(5)) == Surd(5));
  CHECK(surd_from_json(json("3-2*sqrt(2)")) == Surd(3) - Surd::sqrt(2, 2));
  CHECK(surd_from_json(json::parse(R"([[8, "1", "2"]])")) == Surd::sqrt(2));
  CHECK(surd_from_json(json::parse(R"([[1, 6, -4]])")) == Surd::rational(-3, 2));
  const Surd big = Surd(Rational("123456789012345678901234567890/7"));
  CHECK(surd_from_json(json::parse(to_json(big).dump())) == big);
  CHECK_THROWS_AS(surd_from_json(json::parse(R"([[0, 1, 1]])")), IoError);
  CHECK_THROWS_AS(surd_from_json(json::parse(R"([[2, 1, 0]])")), IoError);
  CHECK_THROWS_AS(surd_from_json(json::parse(R"([[2, "x", 1]])")), IoError);
  CHECK_THROWS_AS(surd_from_json(json(1.5)), IoError);
}

TEST_CASE("certificate parts round-trip") {
  for (const auto& c : {example_T2k2(3), example_eight_ninths(0), example_fortynine_fiftieths(0),
                        theorem1_filling(0), family_filling(2)}) {
    const json seq = json::parse(to_json(c.sequence).dump());
    const ShearSequence back = sequence_from_json(seq);
    CHECK(back.source == c.sequence.source);
    CHECK(back.shears == c.sequence.shears);
    CHECK(region_from_json(to_json(c.final_region)) == c.final_region);
    CHECK(lattice_from_json(to_json(c.lattice)) == c.lattice);
    const json full = to_json(c, 20);
    CHECK(full["verdicts"]["valid"] == c.valid());
    CHECK(surd_from_json(full["covered_fraction"]["exact"]) == c.covered_fraction);
    CHECK(to_json(back.final_region()) == to_json(c.final_region));
  }
}

TEST_CASE("shear schema defaults") {
  const json j = json::parse(R"({"axis": "x2", "breakpoints": ["-1/3", "1/3"], "slopes": [1, 0, 1]})");
  const Shear s = shear_from_json(j);
  CHECK(s.axis == Axis::x2);
  CHECK(s.f(Surd(0)) == Surd(0));
  CHECK(s.f(Surd(1)) == Surd::rational(2, 3));
  CHECK(shear_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(shear_from_json(json::parse(R"({"axis": "x3", "breakpoints": [], "slopes": [1]})")), IoError);
  CHECK_THROWS_AS(shear_from_json(json::parse(R"({"axis": "x1", "breakpoints": [1], "slopes": [1]})")), IoError);
}

TEST_CASE("matrix schema") {
  const json j = json::parse(R"({"n": 2, "upper": [2, 0, 0, 0, 0, 3]})");
  const IntMatrix b = int_matrix_from_json(j);
  CHECK(b == split_form({2, 3}));
  CHECK(int_matrix_from_json(matrix_to_json(b)) == b);
  const json s = json::parse(R"J({"n": 2, "upper": [1, "sqrt(2)", 0, 0, 1, 1]})J");
  const SurdMatrix4 m = surd_matrix_from_json(s);
  CHECK(m[0][2] == Surd::sqrt(2));
  CHECK(m[2][0] == -Surd::sqrt(2));
  CHECK(surd_matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(int_matrix_from_json(s), IoError);
  CHECK_THROWS_AS(int_matrix_from_json(json::parse(R"({"n": 2, "upper": [1, 2]})")), IoError);
  CHECK_THROWS_AS(int_matrix_from_json(json::parse(R"({"n": 4, "upper": []})")), IoError);
  CHECK(int_matrix_from_json(json::parse(R"({"n": 3, "upper": [1,0,0,0,0, 0,0,0,0, 1,0,0, 0,0, 1]})")) ==
        split_form({1, 1, 1}));
}

TEST_CASE("region and lattice errors") {
  CHECK_THROWS_AS(region_from_json(json::parse(R"({"poly": []})")), IoError);
  CHECK_THROWS_AS(region_from_json(json::parse(R"({"polygons": [[[0,0],[1,0],[2,0]]]})")), IoError);
  CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"basis": [[1,0],[2,0]]})")), IoError);
  CHECK(lattice_from_json(json::parse(R"({"basis": [[18,0],[0,1]]})")) == Lattice2::rectangular(18, 1));
}
