#include "torusfill/shears.hpp"

namespace torusfill {

PLFunction::PLFunction(std::vector<Surd> breakpoints, std::vector<Surd> slopes, Surd anchor_point,
                       Surd anchor_value, std::vector<Surd> jumps)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      jumps_(std::move(jumps)),
      anchor_point_(std::move(anchor_point)),
      anchor_value_(std::move(anchor_value)) {
  if (slopes_.size() != breakpoints_.size() + 1) {
    throw ShearError("PLFunction needs exactly one more slope than breakpoints");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw ShearError("breakpoints must be strictly increasing");
  }
  if (jumps_.empty()) jumps_.assign(breakpoints_.size(), Surd());
  if (jumps_.size() != breakpoints_.size()) throw ShearError("one jump per breakpoint required");

  // Anchor slab: the slab containing the anchor, or the one right of it on a breakpoint.
  std::size_t k = 0;
  while (k < breakpoints_.size() && breakpoints_[k] <= anchor_point_) ++k;
  intercepts_.assign(slopes_.size(), Surd());
  intercepts_[k] = anchor_value_ - slopes_[k] * anchor_point_;
  for (std::size_t i = k; i + 1 < slopes_.size(); ++i) {
    const Surd& t = breakpoints_[i];
    const Surd left = slopes_[i] * t + intercepts_[i];
    intercepts_[i + 1] = left + jumps_[i] - slopes_[i + 1] * t;
  }
  for (std::size_t i = k; i > 0; --i) {
    const Surd& t = breakpoints_[i - 1];
    const Surd right = slopes_[i] * t + intercepts_[i];
    intercepts_[i - 1] = right - jumps_[i - 1] - slopes_[i - 1] * t;
  }
}

PLFunction PLFunction::through(const std::vector<std::pair<Surd, Surd>>& nodes) {
  if (nodes.size() < 2) throw ShearError("interpolation needs at least two nodes");
  std::vector<Surd> bps, slopes;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Surd dt = nodes[i + 1].first - nodes[i].first;
    if (dt.sign() <= 0) throw ShearError("interpolation nodes must be strictly increasing");
    slopes.push_back((nodes[i + 1].second - nodes[i].second) / dt);
  }
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) bps.push_back(nodes[i].first);
  // Keep the end slopes for the unbounded slabs.
  return PLFunction(bps, slopes, nodes[0].first, nodes[0].second);
}

std::optional<std::size_t> PLFunction::slab_of(const Surd& t) const {
  std::size_t i = 0;
  while (i < breakpoints_.size()) {
    const int c = (t - breakpoints_[i]).sign();
    if (c == 0) return std::nullopt;
    if (c < 0) break;
    ++i;
  }
  return i;
}

Surd PLFunction::operator()(const Surd& t) const {
  std::size_t i = 0;
  while (i < breakpoints_.size() && breakpoints_[i] <= t) ++i;
  return value_on_slab(i, t);
}

bool PLFunction::continuous() const {
  for (const auto& j : jumps_) {
    if (!j.is_zero()) return false;
  }
  return true;
}

PLFunction PLFunction::negated() const {
  std::vector<Surd> s, j;
  for (const auto& v : slopes_) s.push_back(-v);
  for (const auto& v : jumps_) j.push_back(-v);
  return PLFunction(breakpoints_, s, anchor_point_, -anchor_value_, j);
}

std::string to_string(Axis a) { return a == Axis::x1 ? "x1" : "x2"; }

AffineMap2 Shear::slab_map(std::size_t slab) const {
  AffineMap2 m;
  const Surd& c = f.slopes()[slab];
  const Surd& d = f.intercept(slab);
  if (axis == Axis::x1) {
    m.linear[0][1] = c;
    m.translation = {d, Surd()};
  } else {
    m.linear[1][0] = c;
    m.translation = {Surd(), d};
  }
  return m;
}

Point2 Shear::apply(const Point2& p) const {
  if (axis == Axis::x1) return {p.x1 + f(p.x2), p.x2};
  return {p.x1, p.x2 + f(p.x1)};
}

namespace {

Point2 driver_normal(Axis axis) { return axis == Axis::x1 ? Point2{Surd(0), Surd(1)} : Point2{Surd(1), Surd(0)}; }

/// Part of `p` whose driving coordinate lies in slab i (closed strip).
std::optional<ConvexPolygon> restrict_to_slab(const Shear& s, const ConvexPolygon& p, std::size_t slab) {
  const auto& bps = s.f.breakpoints();
  const Point2 n = driver_normal(s.axis);
  std::optional<ConvexPolygon> cur = p;
  if (slab < bps.size()) cur = clip_halfplane(*cur, n, bps[slab]);
  if (cur && slab > 0) cur = clip_halfplane(*cur, Point2{-n.x1, -n.x2}, -bps[slab - 1]);
  return cur;
}

template <typename Keep>
Region slab_pieces(const Shear& s, const Region& r, bool map, Keep keep) {
  Region out;
  for (const auto& piece : r.pieces) {
    for (std::size_t i = 0; i < s.f.slab_count(); ++i) {
      if (!keep(i)) continue;
      auto part = restrict_to_slab(s, piece, i);
      if (!part) continue;
      out.pieces.push_back(map ? apply_affine(s.slab_map(i), *part) : std::move(*part));
    }
  }
  return out;
}

}  // namespace

Region plane_image(const Shear& s, const Region& r) {
  return slab_pieces(s, r, true, [](std::size_t) { return true; });
}

Region moved_set(const Shear& s, const Region& r) {
  return slab_pieces(s, r, false, [&](std::size_t i) { return !s.f.is_identity_on_slab(i); });
}

Region fixed_set(const Shear& s, const Region& r) {
  return slab_pieces(s, r, false, [&](std::size_t i) { return s.f.is_identity_on_slab(i); });
}

std::vector<Region> ShearSequence::stages() const {
  std::vector<Region> out{source};
  for (const auto& s : shears) out.push_back(plane_image(s, out.back()));
  return out;
}

CompositionVerdict check_composable(const ShearSequence& seq) {
  CompositionVerdict verdict;
  const auto stages = seq.stages();
  std::vector<Region> moved;
  for (std::size_t i = 0; i < seq.shears.size(); ++i) moved.push_back(moved_set(seq.shears[i], stages[i]));
  for (std::size_t i = 0; i < seq.shears.size(); ++i) {
    Region carried = moved[i];
    for (std::size_t j = i + 1; j < seq.shears.size(); ++j) {
      carried = plane_image(seq.shears[j - 1], carried);
      const Surd overlap = region_overlap_area(carried, moved[j]);
      if (!overlap.is_zero()) {
        verdict.ok = false;
        verdict.violations.push_back({i, j, overlap});
      }
    }
  }
  return verdict;
}

Matrix4 standard_symplectic_gram() {
  Matrix4 m;
  for (auto& row : m) row.fill(Surd());
  m[0][2] = 1;
  m[1][3] = 1;
  m[2][0] = -1;
  m[3][1] = -1;
  return m;
}

Matrix4 induced_jacobian(Axis axis, const Surd& slope) {
  Matrix4 j;
  for (std::size_t i = 0; i < 4; ++i) {
    j[i].fill(Surd());
    j[i][i] = 1;
  }
  if (axis == Axis::x1) {
    j[0][1] = slope;   // x1' = x1 + f(x2)
    j[3][2] = -slope;  // y2' = y2 - f'(x2) y1
  } else {
    j[1][0] = slope;   // x2' = x2 + g(x1)
    j[2][3] = -slope;  // y1' = y1 - g'(x1) y2
  }
  return j;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      Surd s;
      for (std::size_t m = 0; m < 4; ++m) s += a[i][m] * b[m][k];
      out[i][k] = s;
    }
  }
  return out;
}

Matrix4 transpose(const Matrix4& a) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) out[i][k] = a[k][i];
  }
  return out;
}

SymplecticityRecord induced_4d_check(const Shear& s) {
  SymplecticityRecord rec;
  const Matrix4 omega = standard_symplectic_gram();
  for (std::size_t i = 0; i < s.f.slab_count(); ++i) {
    const Matrix4 j = induced_jacobian(s.axis, s.f.slopes()[i]);
    const bool ok = multiply(transpose(j), multiply(omega, j)) == omega;
    rec.pieces.push_back({i, s.f.slopes()[i], ok});
    rec.ok = rec.ok && ok;
  }
  return rec;
}

AffineMap2 fiber_map_on_slab(const Shear& s, std::size_t slab) {
  AffineMap2 m;
  const Surd& c = s.f.slopes()[slab];
  if (s.axis == Axis::x1) {
    m.linear[1][0] = -c;
  } else {
    m.linear[0][1] = -c;
  }
  return m;
}

std::optional<AffineMap2> fiber_parallelogram(const Shear& s, const Point2& at) {
  const auto slab = s.f.slab_of(s.axis == Axis::x1 ? at.x2 : at.x1);
  if (!slab) return std::nullopt;
  return fiber_map_on_slab(s, *slab);
}

}  // namespace torusfill
