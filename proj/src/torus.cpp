#include "torusfill/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

namespace torusfill {

Lattice2 Lattice2::rectangular(const Surd& mu1, const Surd& mu2) {
  return from_basis({mu1, Surd(0)}, {Surd(0), mu2});
}

Lattice2 Lattice2::from_basis(const Point2& g1, const Point2& g2) {
  Lattice2 L{g1, g2};
  if (L.covolume().sign() <= 0) throw TorusError("lattice basis must be positively oriented");
  return L;
}

std::vector<std::pair<long, long>> candidate_translates(const Region& r, const Lattice2& L) {
  std::vector<std::pair<long, long>> out;
  if (r.empty()) return out;
  const Box b = r.box();
  const double w = b.hi1 - b.lo1, h = b.hi2 - b.lo2;
  const double a11 = L.g1.x1.to_double(), a21 = L.g1.x2.to_double();
  const double a12 = L.g2.x1.to_double(), a22 = L.g2.x2.to_double();
  const double det = a11 * a22 - a12 * a21;
  // (a, b) = B^{-1} v with |v1| <= w, |v2| <= h.
  const double ma = (std::abs(a22) * w + std::abs(a12) * h) / std::abs(det);
  const double mb = (std::abs(a21) * w + std::abs(a11) * h) / std::abs(det);
  const long na = static_cast<long>(std::ceil(ma)) + 1, nb = static_cast<long>(std::ceil(mb)) + 1;
  for (long a = -na; a <= na; ++a) {
    for (long c = -nb; c <= nb; ++c) {
      if (a == 0 && c == 0) continue;
      const double v1 = a * a11 + c * a12, v2 = a * a21 + c * a22;
      const Box s{b.lo1 + v1, b.hi1 + v1, b.lo2 + v2, b.hi2 + v2};
      if (b.overlaps(s, 1e-7)) out.emplace_back(a, c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(std::abs(x.first) + std::abs(x.second), -x.first, -x.second) <
           std::make_tuple(std::abs(y.first) + std::abs(y.second), -y.first, -y.second);
  });
  return out;
}

namespace {

std::optional<Collision> check_translate(const Region& r, const Lattice2& L, long a, long b) {
  const Point2 v = L.vector(a, b);
  const Surd overlap = region_overlap_area(r, translate(r, v));
  if (overlap.is_zero()) return std::nullopt;
  return Collision{a, b, v, overlap};
}

}  // namespace

InjectivityVerdict injects_serial(const Region& r, const Lattice2& L) {
  InjectivityVerdict verdict;
  const auto cands = candidate_translates(r, L);
  verdict.translates_checked = cands.size();
  for (const auto& [a, b] : cands) {
    if (auto c = check_translate(r, L, a, b)) {
      verdict.ok = false;
      verdict.collision = std::move(c);
      break;
    }
  }
  return verdict;
}

InjectivityVerdict injects(const Region& r, const Lattice2& L) {
  InjectivityVerdict verdict;
  const auto cands = candidate_translates(r, L);
  verdict.translates_checked = cands.size();
  std::vector<std::optional<Collision>> found(cands.size());
  const long n = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) found[i] = check_translate(r, L, cands[i].first, cands[i].second);
  for (auto& c : found) {
    if (c) {
      verdict.ok = false;
      verdict.collision = std::move(c);
      break;
    }
  }
  return verdict;
}

Surd covered_fraction(const Region& r, const Lattice2& L) {
  if (!injects(r, L).ok) throw TorusError("region does not inject into the torus");
  return region_area(r) / L.covolume();
}

bool is_fundamental_domain(const Region& r, const Lattice2& L) {
  return region_area(r) == L.covolume() && injects(r, L).ok;
}

ConvexPolygon fundamental_parallelogram(const Lattice2& L, const Point2& origin) {
  return ConvexPolygon::from_vertices({origin, origin + L.g1, origin + L.g1 + L.g2, origin + L.g2});
}

}  // namespace torusfill
