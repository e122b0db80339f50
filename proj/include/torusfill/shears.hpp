#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torusfill/geom.hpp"

namespace torusfill {

class ShearError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Piecewise-linear function of one variable. Slab i is the open interval
/// between breakpoints i-1 and i (unbounded at both ends). The additive
/// constant is fixed by the anchor; `jumps[i]` is the value step across
/// breakpoint i (zero for continuous functions).
class PLFunction {
 public:
  PLFunction() : PLFunction({}, {Surd(0)}) {}
  PLFunction(std::vector<Surd> breakpoints, std::vector<Surd> slopes, Surd anchor_point = 0,
             Surd anchor_value = 0, std::vector<Surd> jumps = {});

  static PLFunction zero() { return {}; }
  static PLFunction linear(const Surd& slope, const Surd& offset = 0) { return PLFunction({}, {slope}, 0, offset); }
  /// Continuous interpolant of (t, value) nodes with strictly increasing t,
  /// extended linearly beyond the end nodes. Needs at least two nodes.
  static PLFunction through(const std::vector<std::pair<Surd, Surd>>& nodes);

  const std::vector<Surd>& breakpoints() const { return breakpoints_; }
  const std::vector<Surd>& slopes() const { return slopes_; }
  const std::vector<Surd>& jumps() const { return jumps_; }
  const Surd& anchor_point() const { return anchor_point_; }
  const Surd& anchor_value() const { return anchor_value_; }
  std::size_t slab_count() const { return slopes_.size(); }

  /// Slab containing t, or nullopt when t is a breakpoint.
  std::optional<std::size_t> slab_of(const Surd& t) const;
  /// f restricted to slab i is slope_i * t + intercept(i).
  const Surd& intercept(std::size_t slab) const { return intercepts_[slab]; }
  Surd value_on_slab(std::size_t slab, const Surd& t) const { return slopes_[slab] * t + intercepts_[slab]; }
  /// Value at t; at a breakpoint the right-hand limit is returned.
  Surd operator()(const Surd& t) const;
  bool continuous() const;
  bool is_identity_on_slab(std::size_t slab) const { return slopes_[slab].is_zero() && intercepts_[slab].is_zero(); }
  PLFunction negated() const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.slopes_ == b.slopes_ && a.intercepts_ == b.intercepts_;
  }

 private:
  std::vector<Surd> breakpoints_;
  std::vector<Surd> slopes_;
  std::vector<Surd> jumps_;
  Surd anchor_point_;
  Surd anchor_value_;
  std::vector<Surd> intercepts_;
};

enum class Axis { x1, x2 };

std::string to_string(Axis a);

/// x1-shear: (x1, x2) -> (x1 + f(x2), x2); x2-shear: (x1, x2) -> (x1, x2 + f(x1)).
struct Shear {
  Axis axis = Axis::x1;
  PLFunction f;

  /// Affine plane map on slab i (determinant one).
  AffineMap2 slab_map(std::size_t slab) const;
  /// Pointwise image; on a breakpoint the right-hand slab is used.
  Point2 apply(const Point2& p) const;
  friend bool operator==(const Shear&, const Shear&) = default;
};

/// Image of r under the planar shear; pieces are split along slab lines.
Region plane_image(const Shear& s, const Region& r);
/// Part of r on which the planar shear is not the identity.
Region moved_set(const Shear& s, const Region& r);
/// Part of r on which the planar shear is the identity.
Region fixed_set(const Shear& s, const Region& r);

struct ShearSequence {
  Region source;
  std::vector<Shear> shears;

  /// stages()[i] is the region before shear i; the last entry is the final image.
  std::vector<Region> stages() const;
  Region final_region() const { return stages().back(); }
};

struct CompositionViolation {
  std::size_t first;   // earlier shear
  std::size_t second;  // later shear
  Surd overlap_area;
};

struct CompositionVerdict {
  bool ok = true;
  std::vector<CompositionViolation> violations;
};

/// Every point of the source must be moved by at most one shear: for i < j,
/// the image of moved_set(i) at stage j must avoid moved_set(j) up to zero area.
CompositionVerdict check_composable(const ShearSequence& seq);

using Matrix4 = std::array<std::array<Surd, 4>, 4>;

/// Standard symplectic Gram matrix in the coordinate order (x1, x2, y1, y2).
Matrix4 standard_symplectic_gram();
/// Jacobian of the induced map of R^4 on one slab.
Matrix4 induced_jacobian(Axis axis, const Surd& slope);
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 transpose(const Matrix4& a);

struct PieceSymplecticity {
  std::size_t slab;
  Surd slope;
  bool symplectic;
};

struct SymplecticityRecord {
  bool ok = true;
  std::vector<PieceSymplecticity> pieces;
};

/// Checks J^T Omega J = Omega exactly for every affine piece of the induced map.
SymplecticityRecord induced_4d_check(const Shear& s);

/// Linear map of the y-plane over a point in slab `slab`:
/// x1-shear (y1, y2) -> (y1, y2 - f' y1), x2-shear (y1, y2) -> (y1 - f' y2, y2).
AffineMap2 fiber_map_on_slab(const Shear& s, std::size_t slab);
/// Fiber map over `at`; nullopt when the driving coordinate is a breakpoint.
std::optional<AffineMap2> fiber_parallelogram(const Shear& s, const Point2& at);

}  // namespace torusfill
