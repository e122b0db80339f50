#pragma once

#include <optional>
#include <vector>

#include "torusfill/geom.hpp"

namespace torusfill {

class TorusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank-2 lattice in R^2(x) spanned by g1, g2.
struct Lattice2 {
  Point2 g1{Surd(1), Surd(0)};
  Point2 g2{Surd(0), Surd(1)};

  /// Rectangular lattice Z^2(mu1, mu2).
  static Lattice2 rectangular(const Surd& mu1, const Surd& mu2);
  /// Throws TorusError unless the basis is positively oriented and nondegenerate.
  static Lattice2 from_basis(const Point2& g1, const Point2& g2);

  Surd covolume() const { return cross(g1, g2); }
  Point2 vector(long a, long b) const { return Surd(a) * g1 + Surd(b) * g2; }
  friend bool operator==(const Lattice2&, const Lattice2&) = default;
};

struct Collision {
  long a = 0, b = 0;  // v = a g1 + b g2
  Point2 v;
  Surd overlap_area;
};

struct InjectivityVerdict {
  bool ok = true;
  std::optional<Collision> collision;  // offender minimizing (|a|+|b|, -a, -b)
  std::size_t translates_checked = 0;
};

/// Integer coefficient pairs (a, b) != 0 whose translate can meet r.
std::vector<std::pair<long, long>> candidate_translates(const Region& r, const Lattice2& L);

/// Exact test that r embeds in R^2 / L (zero-area contacts allowed). Parallel over translates.
InjectivityVerdict injects(const Region& r, const Lattice2& L);
/// Single-threaded reference for injects().
InjectivityVerdict injects_serial(const Region& r, const Lattice2& L);

/// region_area(r) / covolume(L); throws TorusError when r does not inject.
Surd covered_fraction(const Region& r, const Lattice2& L);
bool is_fundamental_domain(const Region& r, const Lattice2& L);

/// Closed fundamental parallelogram {s g1 + t g2 : s, t in [0, 1]} offset by `origin`.
ConvexPolygon fundamental_parallelogram(const Lattice2& L, const Point2& origin = {Surd(0), Surd(0)});

}  // namespace torusfill
