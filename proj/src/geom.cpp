#include "torusfill/geom.hpp"

#include <algorithm>

namespace torusfill {

Surd cross(const Point2& a, const Point2& b) { return a.x1 * b.x2 - a.x2 * b.x1; }

namespace {

Surd twice_signed_area(const std::vector<Point2>& v) {
  Surd s;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

int turn(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - b).sign(); }

}  // namespace

std::optional<ConvexPolygon> ConvexPolygon::make(std::vector<Point2> v) {
  std::vector<Point2> dedup;
  for (auto& p : v) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  if (dedup.size() < 3) return std::nullopt;
  const int orient = twice_signed_area(dedup).sign();
  if (orient == 0) return std::nullopt;
  if (orient < 0) std::reverse(dedup.begin(), dedup.end());
  bool changed = true;
  while (changed && dedup.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
      const auto& prev = dedup[(i + dedup.size() - 1) % dedup.size()];
      const auto& next = dedup[(i + 1) % dedup.size()];
      if (turn(prev, dedup[i], next) == 0) {
        dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (dedup.size() < 3) return std::nullopt;
  // Start at the lowest (then leftmost) vertex so equal polygons compare equal.
  std::size_t first = 0;
  for (std::size_t i = 1; i < dedup.size(); ++i) {
    const int c2 = (dedup[i].x2 - dedup[first].x2).sign();
    if (c2 < 0 || (c2 == 0 && dedup[i].x1 < dedup[first].x1)) first = i;
  }
  std::rotate(dedup.begin(), dedup.begin() + static_cast<std::ptrdiff_t>(first), dedup.end());
  return ConvexPolygon(std::move(dedup));
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> v) {
  auto p = make(std::move(v));
  if (!p) throw GeomError("degenerate polygon");
  const auto& w = p->vertices();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (turn(w[i], w[(i + 1) % w.size()], w[(i + 2) % w.size()]) <= 0) {
      throw GeomError("polygon is not convex");
    }
  }
  return *p;
}

Surd ConvexPolygon::area() const { return twice_signed_area(vertices_) / 2; }

Box ConvexPolygon::box() const {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const auto& p : vertices_) {
    const double x = p.x1.to_double(), y = p.x2.to_double();
    b.lo1 = std::min(b.lo1, x);
    b.hi1 = std::max(b.hi1, x);
    b.lo2 = std::min(b.lo2, y);
    b.hi2 = std::max(b.hi2, y);
  }
  return b;
}

bool ConvexPolygon::contains_interior(const Point2& p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    if (cross(b - a, p - a).sign() <= 0) return false;
  }
  return true;
}

Box Region::box() const {
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const auto& piece : pieces) {
    const Box q = piece.box();
    b.lo1 = std::min(b.lo1, q.lo1);
    b.hi1 = std::max(b.hi1, q.hi1);
    b.lo2 = std::min(b.lo2, q.lo2);
    b.hi2 = std::max(b.hi2, q.hi2);
  }
  return b;
}

AffineMap2 AffineMap2::translate(const Point2& v) {
  AffineMap2 m;
  m.translation = v;
  return m;
}

Point2 AffineMap2::operator()(const Point2& p) const {
  return {linear[0][0] * p.x1 + linear[0][1] * p.x2 + translation.x1,
          linear[1][0] * p.x1 + linear[1][1] * p.x2 + translation.x2};
}

AffineMap2 AffineMap2::compose(const AffineMap2& o) const {
  AffineMap2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.linear[i][j] = linear[i][0] * o.linear[0][j] + linear[i][1] * o.linear[1][j];
  }
  out.translation = (*this)(o.translation);
  return out;
}

Surd area(const ConvexPolygon& p) { return p.area(); }

Surd region_area(const Region& r) {
  Surd s;
  for (const auto& p : r.pieces) s += p.area();
  return s;
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& p, const Point2& normal, const Surd& c) {
  const auto& v = p.vertices();
  std::vector<Surd> side(v.size());
  bool all_in = true, all_out = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    side[i] = normal.x1 * v[i].x1 + normal.x2 * v[i].x2 - c;
    const int s = side[i].sign();
    if (s > 0) all_in = false;
    if (s < 0) all_out = false;
  }
  if (all_in) return p;
  if (all_out) return std::nullopt;
  std::vector<Point2> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t j = (i + 1) % v.size();
    const int si = side[i].sign(), sj = side[j].sign();
    if (si <= 0) out.push_back(v[i]);
    if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
      const Surd t = side[i] / (side[i] - side[j]);
      out.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  return ConvexPolygon::make(std::move(out));
}

std::optional<ConvexPolygon> clip(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (!a.box().overlaps(b.box())) return std::nullopt;
  std::optional<ConvexPolygon> cur = a;
  const auto& w = b.vertices();
  for (std::size_t i = 0; i < w.size() && cur; ++i) {
    const Point2 e = w[(i + 1) % w.size()] - w[i];
    // Interior of a counterclockwise polygon lies left of each edge:
    // cross(e, q - w_i) >= 0  <=>  (e.x2, -e.x1) . q <= (e.x2, -e.x1) . w_i
    const Point2 normal{e.x2, -e.x1};
    cur = clip_halfplane(*cur, normal, normal.x1 * w[i].x1 + normal.x2 * w[i].x2);
  }
  return cur;
}

Surd region_overlap_area(const Region& a, const Region& b) {
  Surd total;
  for (const auto& p : a.pieces) {
    const Box bp = p.box();
    for (const auto& q : b.pieces) {
      if (!bp.overlaps(q.box())) continue;
      if (auto c = clip(p, q)) total += c->area();
    }
  }
  return total;
}

Region clip_region(const Region& r, const ConvexPolygon& window) {
  Region out;
  for (const auto& p : r.pieces) {
    if (auto c = clip(p, window)) out.pieces.push_back(std::move(*c));
  }
  return out;
}

ConvexPolygon apply_affine(const AffineMap2& m, const ConvexPolygon& p) {
  if (m.determinant().is_zero()) throw GeomError("degenerate affine map");
  std::vector<Point2> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(m(q));
  return *ConvexPolygon::make(std::move(v));
}

Region apply_affine(const AffineMap2& m, const Region& r) {
  Region out;
  for (const auto& p : r.pieces) out.pieces.push_back(apply_affine(m, p));
  return out;
}

Region translate(const Region& r, const Point2& v) { return apply_affine(AffineMap2::translate(v), r); }

bool pieces_disjoint(const Region& r) {
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < r.pieces.size(); ++j) {
      if (clip(r.pieces[i], r.pieces[j])) return false;
    }
  }
  return true;
}

ConvexPolygon rectangle(const Surd& a1, const Surd& b1, const Surd& a2, const Surd& b2) {
  return ConvexPolygon::from_vertices({{a1, a2}, {b1, a2}, {b1, b2}, {a1, b2}});
}

}  // namespace torusfill
