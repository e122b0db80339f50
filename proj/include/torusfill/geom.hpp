#pragma once

#include <array>
#include <optional>
#include <vector>

#include "torusfill/surd.hpp"

namespace torusfill {

struct Point2 {
  Surd x1;
  Surd x2;

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend Point2 operator*(const Surd& s, const Point2& p) { return {s * p.x1, s * p.x2}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

Surd cross(const Point2& a, const Point2& b);

class GeomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-aligned box in floating point, used only to skip exact work.
struct Box {
  double lo1, hi1, lo2, hi2;
  bool overlaps(const Box& o, double slack = 1e-9) const {
    return lo1 < o.hi1 + slack && o.lo1 < hi1 + slack && lo2 < o.hi2 + slack && o.lo2 < hi2 + slack;
  }
};

/// Strictly convex polygon with counterclockwise vertices and positive area.
class ConvexPolygon {
 public:
  /// Canonicalizes (drops repeated and collinear vertices, orients
  /// counterclockwise). Returns nullopt when the result has zero area.
  static std::optional<ConvexPolygon> make(std::vector<Point2> vertices);
  /// Like make() but throws GeomError on degenerate or nonconvex input.
  static ConvexPolygon from_vertices(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Surd area() const;
  Box box() const;
  /// Strict interior test.
  bool contains_interior(const Point2& p) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

/// Finite union of interior-disjoint convex polygons.
struct Region {
  std::vector<ConvexPolygon> pieces;

  bool empty() const { return pieces.empty(); }
  Box box() const;
  friend bool operator==(const Region&, const Region&) = default;
};

struct AffineMap2 {
  std::array<std::array<Surd, 2>, 2> linear{{{Surd(1), Surd(0)}, {Surd(0), Surd(1)}}};
  Point2 translation{Surd(0), Surd(0)};

  static AffineMap2 identity() { return {}; }
  static AffineMap2 translate(const Point2& v);
  Surd determinant() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }
  bool area_preserving() const { return determinant() == Surd(1); }
  Point2 operator()(const Point2& p) const;
  /// this o other
  AffineMap2 compose(const AffineMap2& other) const;
};

Surd area(const ConvexPolygon& p);
Surd region_area(const Region& r);

/// Exact intersection of two convex polygons; nullopt when it has zero area.
std::optional<ConvexPolygon> clip(const ConvexPolygon& a, const ConvexPolygon& b);

/// Part of `p` in the closed half-plane {q : n . q <= c}; nullopt if zero area.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& p, const Point2& normal, const Surd& c);

/// Total area of the pairwise piece intersections of two regions.
Surd region_overlap_area(const Region& a, const Region& b);

/// Clip every piece of `r` to the convex polygon `window`.
Region clip_region(const Region& r, const ConvexPolygon& window);

ConvexPolygon apply_affine(const AffineMap2& m, const ConvexPolygon& p);
Region apply_affine(const AffineMap2& m, const Region& r);
Region translate(const Region& r, const Point2& v);

/// Checks the region invariant: all pieces pairwise interior-disjoint.
bool pieces_disjoint(const Region& r);

/// Axis-parallel rectangle (x1 in (a1, b1), x2 in (a2, b2)).
ConvexPolygon rectangle(const Surd& a1, const Surd& b1, const Surd& a2, const Surd& b2);

}  // namespace torusfill
