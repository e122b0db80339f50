#include "torusfill/latforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

namespace torusfill {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<Integer>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix out(a.front().size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Integer int_determinant(IntMatrix a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n - 1][n - 1]);
}

IntMatrix congruence(const IntMatrix& b, const IntMatrix& u) { return int_multiply(int_transpose(u), int_multiply(b, u)); }

void check_alternating(const IntMatrix& b) {
  const std::size_t n = b.size();
  if (n == 0 || n % 2 != 0) throw LatformsError("form must have even positive dimension");
  for (const auto& row : b) {
    if (row.size() != n) throw LatformsError("form must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][i] != 0) throw LatformsError("form must be alternating");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b[i][j] != -b[j][i]) throw LatformsError("form must be antisymmetric");
    }
  }
  if (int_determinant(b) == 0) throw LatformsError("form is degenerate");
}

namespace {

/// Basis operations applied simultaneously to the Gram matrix m and the
/// basis-change matrix u (columns are the new basis vectors).
struct Reducer {
  IntMatrix m, u;

  // e_j += c e_i
  void add(std::size_t j, std::size_t i, const Integer& c) {
    if (c == 0) return;
    for (auto& row : u) row[j] += c * row[i];
    for (auto& row : m) row[j] += c * row[i];
    for (std::size_t col = 0; col < m.size(); ++col) m[j][col] += c * m[i][col];
  }
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : u) std::swap(row[i], row[j]);
    for (auto& row : m) std::swap(row[i], row[j]);
    std::swap(m[i], m[j]);
  }
  void negate(std::size_t i) {
    for (auto& row : u) row[i] = -row[i];
    for (auto& row : m) row[i] = -row[i];
    for (auto& x : m[i]) x = -x;
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

PolarizationType polarization_type(const IntMatrix& b) {
  check_alternating(b);
  const std::size_t n = b.size();
  Reducer red{b, int_identity(n)};
  PolarizationType out;
  for (std::size_t k = 0; k < n; k += 2) {
    for (;;) {
      // Smallest nonzero entry of the active block goes to (k, k+1).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (red.m[i][j] == 0) continue;
          if (bi == n || abs(red.m[i][j]) < abs(red.m[bi][bj])) bi = i, bj = j;
        }
      }
      if (bi == n) throw LatformsError("form is degenerate");
      red.swap(k, bi);
      if (bj == k) bj = bi;
      red.swap(k + 1, bj);
      if (red.m[k][k + 1] < 0) red.negate(k + 1);
      const Integer d = red.m[k][k + 1];

      bool clean = true;
      for (std::size_t j = k + 2; j < n; ++j) {
        red.add(j, k + 1, -floor_div(red.m[k][j], d));
        if (red.m[k][j] != 0) clean = false;
      }
      for (std::size_t j = k + 2; j < n; ++j) {
        red.add(j, k, floor_div(red.m[k + 1][j], d));
        if (red.m[k + 1][j] != 0) clean = false;
      }
      if (!clean) continue;

      // d must divide the rest; otherwise pull an offending row into e_k.
      bool divides = true;
      for (std::size_t i = k + 2; i < n && divides; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (red.m[i][j] % d != 0) {
            red.add(k, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        out.divisors.push_back(d);
        break;
      }
    }
  }
  out.basis_change = std::move(red.u);
  return out;
}

IntMatrix split_form(const std::vector<long>& m) {
  IntMatrix b(2 * m.size(), std::vector<Integer>(2 * m.size(), 0));
  for (std::size_t j = 0; j < m.size(); ++j) {
    b[2 * j][2 * j + 1] = m[j];
    b[2 * j + 1][2 * j] = -m[j];
  }
  return b;
}

SurdMatrix4 alternating4(const std::array<Surd, 6>& upper) {
  SurdMatrix4 b;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    b[i][i] = 0;
    for (std::size_t j = i + 1; j < 4; ++j) {
      b[i][j] = upper[idx++];
      b[j][i] = -b[i][j];
    }
  }
  return b;
}

SurdMatrix4 congruence(const SurdMatrix4& b, const IntMatrix4& u) {
  SurdMatrix4 bu, out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Surd s;
      for (std::size_t k = 0; k < 4; ++k) {
        if (u[k][j] != 0) s += b[i][k] * Surd(u[k][j]);
      }
      bu[i][j] = s;
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Surd s;
      for (std::size_t k = 0; k < 4; ++k) {
        if (u[k][i] != 0) s += Surd(u[k][i]) * bu[k][j];
      }
      out[i][j] = s;
    }
  }
  return out;
}

long determinant(const IntMatrix4& u) {
  IntMatrix m(4, std::vector<Integer>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = u[i][j];
  }
  return int_determinant(m).get_si();
}

Surd orientation_quantity(const SurdMatrix4& b) {
  return b[0][2] * b[1][3] - b[0][3] * b[1][2] - b[0][1] * b[2][3];
}

bool is_irrational_form(const SurdMatrix4& b) {
  const std::vector<Surd> upper{b[0][1], b[0][2], b[0][3], b[1][2], b[1][3], b[2][3]};
  return surd_rank(upper) >= 2;
}

NormalizationChecks normalization_checks(const SurdMatrix4& b) {
  NormalizationChecks c;
  c.oriented = orientation_quantity(b).sign() > 0;
  const Surd &b12 = b[0][1], &b34 = b[2][3];
  if (b12.is_zero() && b34.is_zero()) {
    c.condition_i = true;
  } else {
    const std::vector<Surd> pair{b12, b34};
    c.condition_i = b12.sign() > 0 && b34.sign() > 0 && rationally_independent(pair);
  }
  const std::vector<Surd> off{b[0][2], b[0][3], b[1][2], b[1][3]};
  c.condition_ii = surd_rank(off) >= 2;
  return c;
}

namespace {

IntMatrix4 identity4() {
  IntMatrix4 u{};
  for (std::size_t i = 0; i < 4; ++i) u[i][i] = 1;
  return u;
}

// Right-multiplies by a column operation: e_j += k e_i.
IntMatrix4 transvect(IntMatrix4 u, std::size_t j, std::size_t i, long k) {
  for (auto& row : u) row[j] += k * row[i];
  return u;
}

IntMatrix4 permute(const IntMatrix4& u, const std::array<std::size_t, 4>& order) {
  IntMatrix4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r][c] = u[r][order[c]];
  }
  return out;
}

IntMatrix4 negate_column(IntMatrix4 u, std::size_t c) {
  for (auto& row : u) row[c] = -row[c];
  return u;
}

std::vector<long> ordered_range(long k_max) {
  std::vector<long> ks{0};
  for (long k = 1; k <= k_max; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

}  // namespace

NormalizedBasis normalize_basis(const SurdMatrix4& b, long k_max) {
  const Surd p0 = orientation_quantity(b);
  if (p0.is_zero()) throw LatformsError("form is degenerate");
  if (!is_irrational_form(b)) throw LatformsError("form is rational");

  NormalizedBasis out;
  IntMatrix4 u = identity4();
  if (p0.sign() < 0) {
    u = permute(u, {1, 0, 2, 3});
    out.orientation_flipped = true;
  }
  auto finish = [&](const IntMatrix4& v) -> std::optional<NormalizedBasis> {
    const SurdMatrix4 f = congruence(b, v);
    if (!normalization_checks(f).ok()) return std::nullopt;
    NormalizedBasis r = out;
    r.form = f;
    r.basis_change = v;
    return r;
  };

  // Block case: some pairing of the basis has both entries zero.
  const SurdMatrix4 f0 = congruence(b, u);
  if (f0[0][1].is_zero() && f0[2][3].is_zero()) {
    out.block_case = true;
    if (auto r = finish(u)) return *r;
    throw LatformsError("block case failed its post-conditions");
  }

  // Transvections lambda_2 += k1 lambda_j, lambda_4 += k2 lambda_i make b12, b34
  // independent and positive; then lambda_4 or lambda_3 += k3 lambda_1 or lambda_2
  // repairs condition (ii) if needed.
  const auto ks = ordered_range(k_max);
  std::vector<std::tuple<long, long, long, long, std::size_t, std::size_t>> cands;
  for (std::size_t j : {2, 3}) {
    for (std::size_t i : {0, 1}) {
      for (long k1 : ks) {
        for (long k2 : ks) {
          cands.emplace_back(std::abs(k1) + std::abs(k2), std::abs(k2), k1, k2, j, i);
        }
      }
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  const std::array<std::pair<std::size_t, std::size_t>, 4> repairs{{{3, 0}, {2, 0}, {3, 1}, {2, 1}}};
  for (const auto& [cost, c2, k1, k2, j, i] : cands) {
    IntMatrix4 v = transvect(transvect(u, 1, j, k1), 3, i, k2);
    SurdMatrix4 f = congruence(b, v);
    const Surd &b12 = f[0][1], &b34 = f[2][3];
    if (b12.is_zero() || b34.is_zero()) continue;
    const std::vector<Surd> pair{b12, b34};
    if (b12.sign() != b34.sign() || !rationally_independent(pair)) continue;
    if (b12.sign() < 0) v = permute(v, {1, 0, 3, 2});
    if (auto r = finish(v)) return *r;
    for (const auto& [target, source] : repairs) {
      for (long k3 : ks) {
        if (k3 == 0) continue;
        if (auto r = finish(transvect(v, target, source, k3))) return *r;
      }
    }
  }
  // Remaining pairings with both entries zero: permute into the block case.
  const std::array<std::pair<std::array<std::size_t, 4>, bool>, 2> pairings{{
      {{0, 2, 1, 3}, true},  // odd permutation, fixed by negating the last vector
      {{0, 3, 1, 2}, false},
  }};
  for (const auto& [order, odd] : pairings) {
    if (f0[order[0]][order[1]].is_zero() && f0[order[2]][order[3]].is_zero()) {
      IntMatrix4 v = permute(u, order);
      if (odd) v = negate_column(v, 3);
      out.block_case = true;
      if (auto r = finish(v)) return *r;
    }
  }

  throw LatformsError("normalization search exhausted");
}

namespace {

Surd positivity_quantity(const PeriodLatticeSolution& s) { return (s.x * s.y - s.u * s.u) / s.rho2 - s.v * s.v; }

}  // namespace

PeriodLatticeSolution build_period_lattice(const SurdMatrix4& f) {
  const auto checks = normalization_checks(f);
  if (!checks.ok()) throw LatformsError("form is not normalized");
  const Surd &b12 = f[0][1], &b13 = f[0][2], &b14 = f[0][3], &b23 = f[1][2], &b24 = f[1][3], &b34 = f[2][3];

  // Compatibility hyperplane c . (p, q, r, s) = 0 through the base point (b13, b23, b14, b24).
  const std::array<Surd, 4> c{-b14, -b24, b13, b23};
  const std::array<Surd, 4> base{b13, b23, b14, b24};
  std::size_t i0 = 0;
  while (c[i0].is_zero()) ++i0;
  std::vector<std::array<Surd, 4>> dirs;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == i0) continue;
    std::array<Surd, 4> v{};
    v[j] = 1;
    v[i0] = -c[j] / c[i0];
    dirs.push_back(v);
  }
  // Perturbation scaled by one fresh radical.
  std::vector<Surd> used{b12, b13, b14, b23, b24, b34};
  const std::uint64_t w = fresh_prime(used);
  used.push_back(Surd::sqrt(w));
  std::uint64_t rho_radicand = 0;
  if (b12.is_zero()) {
    rho_radicand = fresh_prime(used, w + 1);
    used.push_back(Surd::sqrt(rho_radicand));
  }

  std::vector<std::array<long, 3>> coeffs;
  for (long a = -2; a <= 2; ++a) {
    for (long bb = -2; bb <= 2; ++bb) {
      for (long cc = -2; cc <= 2; ++cc) {
        if (a != 0 || bb != 0 || cc != 0) coeffs.push_back({a, bb, cc});
      }
    }
  }
  std::stable_sort(coeffs.begin(), coeffs.end(), [](const auto& x, const auto& y) {
    const auto l1 = [](const auto& v) { return std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]); };
    const auto nz = [](const auto& v) { return (v[0] != 0) + (v[1] != 0) + (v[2] != 0); };
    return std::make_pair(-nz(x), l1(x)) < std::make_pair(-nz(y), l1(y));
  });

  for (const auto& n : coeffs) {
    Surd t = 1;
    for (int halving = 0; halving < 60; ++halving, t = t / 2) {
      std::array<Surd, 4> pt = base;
      const Surd scale = t * Surd::sqrt(w);
      for (std::size_t k = 0; k < 3; ++k) {
        if (n[k] == 0) continue;
        for (std::size_t m = 0; m < 4; ++m) pt[m] += scale * Surd(n[k]) * dirs[k][m];
      }
      PeriodLatticeSolution sol;
      sol.p = pt[0];
      sol.q = pt[1];
      sol.r = pt[2];
      sol.s = pt[3];
      sol.D = sol.p * sol.s - sol.q * sol.r;
      if (sol.D.sign() <= 0) continue;
      sol.x = (sol.s * b13 - sol.q * b14) / sol.D;
      sol.y = (sol.p * b24 - sol.r * b23) / sol.D;
      sol.u = (sol.p * b14 - sol.r * b13) / sol.D;
      sol.v = b12;
      sol.v_zero = b12.is_zero();
      sol.rho2 = sol.v_zero ? Surd::sqrt(rho_radicand) : b34 / (b12 * sol.D);
      sol.perturbation_radicand = w;
      sol.b13 = b13;
      sol.b14 = b14;
      sol.b23 = b23;
      sol.b24 = b24;
      if (verify_no_curves(sol).ok()) return sol;
      // Independence does not improve with smaller t; positivity does.
      const std::array<Surd, 4> quad{sol.p, sol.q, sol.r, sol.s};
      if (!rationally_independent(quad)) break;
    }
  }
  throw LatformsError("period lattice perturbation search exhausted");
}

NoCurveCertificate verify_no_curves(const PeriodLatticeSolution& s) {
  NoCurveCertificate c;
  auto need = [&](bool ok, bool& flag, const char* name) {
    flag = ok;
    if (!ok) c.failures.emplace_back(name);
  };
  const Surd D = s.p * s.s - s.q * s.r;
  need(D.sign() > 0 && D == s.D, c.D_positive, "D = ps - qr positive");
  need(s.r * s.b13 - s.p * s.b14 == s.q * s.b24 - s.s * s.b23, c.compatible, "compatibility");
  const std::array<Surd, 4> quad{s.p, s.q, s.r, s.s};
  need(rationally_independent(quad), c.independent, "p, q, r, s rationally independent");
  need(s.rho2.sign() > 0 && (s.rho2 * s.D).is_irrational(), c.product_irrational, "ps - qr irrational");
  bool formulas = false;
  if (c.D_positive) {
    formulas = s.x == (s.s * s.b13 - s.q * s.b14) / s.D && s.y == (s.p * s.b24 - s.r * s.b23) / s.D &&
               s.u == (s.p * s.b14 - s.r * s.b13) / s.D;
  }
  if (!formulas) c.failures.emplace_back("closed formulas for x, y, u");
  need(s.x.sign() > 0, c.x_positive, "x > 0");
  need(s.rho2.sign() > 0 && positivity_quantity(s).sign() > 0, c.positive_definite, "(xy - u^2)/rho^2 - v^2 > 0");
  return c;
}

namespace {

template <bool Parallel>
std::optional<std::array<long, 4>> integrality_impl(const PeriodLatticeSolution& s, long bound) {
  const double p = s.p.to_double(), q = s.q.to_double(), r = s.r.to_double(), sd = s.s.to_double();
  const double scale = 1 + std::abs(p) + std::abs(q) + std::abs(r) + std::abs(sd);
  const long width = 2 * bound + 1;
  std::vector<std::optional<std::array<long, 4>>> found(width);
  auto scan = [&](long n1) {
    for (long n2 = -bound; n2 <= bound; ++n2) {
      for (long n3 = -bound; n3 <= bound; ++n3) {
        for (long n4 = -bound; n4 <= bound; ++n4) {
          if (n1 == 0 && n2 == 0 && n3 == 0 && n4 == 0) continue;
          const double val = -n1 * r + n2 * p - n3 * sd + n4 * q;
          if (std::abs(val) > 1e-7 * scale * bound) continue;
          const Surd exact = Surd(-n1) * s.r + Surd(n2) * s.p - Surd(n3) * s.s + Surd(n4) * s.q;
          if (exact.is_zero()) return std::optional<std::array<long, 4>>(std::array<long, 4>{n1, n2, n3, n4});
        }
      }
    }
    return std::optional<std::array<long, 4>>();
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < width; ++i) found[i] = scan(i - bound);
  } else {
    for (long i = 0; i < width; ++i) {
      found[i] = scan(i - bound);
      if (found[i]) break;
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<long, 4>> integrality_search(const PeriodLatticeSolution& sol, long bound) {
  return integrality_impl<true>(sol, bound);
}

std::optional<std::array<long, 4>> integrality_search_serial(const PeriodLatticeSolution& sol, long bound) {
  return integrality_impl<false>(sol, bound);
}

bool cone_contains(const BlowupClass& c) { return !c.a.is_zero() && c.beta_square > c.a * c.a; }

bool kahler_excluded(const BlowupClass& c) { return c.a > Surd::rational(4, 3); }

}  // namespace torusfill
