#include <chrono>
#include <cstdio>

#include <omp.h>

#include "torusfill/latforms.hpp"
#include "torusfill/shears.hpp"
#include "torusfill/torus.hpp"

using namespace torusfill;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // P(k) tiles the plane with ~k translates meeting its bounding box in each row.
  for (long k : {4, 8, 16}) {
    const Surd c(2 * k * k - k);
    const Region r{{ConvexPolygon::from_vertices({{k, 0}, {c, k}, {-k, 0}, {-c, -k}})}};
    const auto L = Lattice2::rectangular(2 * k * k, 1);
    bool a = false, b = false;
    const double ts = seconds([&] { a = injects_serial(r, L).ok; });
    const double tp = seconds([&] { b = injects(r, L).ok; });
    std::printf("P(%ld) translates=%zu serial=%.3fs parallel=%.3fs threads=%d agree=%s\n", k,
                candidate_translates(r, L).size(), ts, tp, omp_get_max_threads(), a == b ? "yes" : "NO");
  }

  // Bounded integrality search for a period lattice, |n_i| <= bound.
  const auto form = alternating4({Surd(1), Surd::sqrt(2), Surd(0), Surd(0), Surd(1), Surd(1)});
  const auto sol = build_period_lattice(normalize_basis(form).form);
  for (long bound : {10, 20, 30}) {
    std::optional<std::array<long, 4>> a, b;
    const double ts = seconds([&] { a = integrality_search_serial(sol, bound); });
    const double tp = seconds([&] { b = integrality_search(sol, bound); });
    std::printf("integrality bound=%ld serial=%.3fs parallel=%.3fs agree=%s\n", bound, ts, tp, a == b ? "yes" : "NO");
  }
}
