#include "torusfill/seshadri.hpp"

#include <cmath>

namespace torusfill {

namespace {

bool is_square(long n) {
  if (n < 0) return false;
  const auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long s = std::max(0L, r - 1); s <= r + 1; ++s) {
    if (s * s == n) return true;
  }
  return false;
}

long isqrt(long n) {
  auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

PellSolution pell_min(long N) {
  if (N < 2 || is_square(N)) throw SeshadriError("Pell equation needs a nonsquare N >= 2");
  // Convergents h/k of the continued fraction of sqrt(N).
  const long a0 = isqrt(N);
  long m = 0, den = 1, a = a0;
  Integer h_prev = 1, h = a0, k_prev = 0, k = 1;
  while (h * h - N * k * k != 1) {
    m = den * a - m;
    den = (N - m * m) / den;
    a = (a0 + m) / den;
    Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  return {N, k, h};
}

SeshadriBound surface_bound(long d) {
  if (d < 1) throw SeshadriError("d must be positive");
  SeshadriBound b;
  b.d = d;
  if (is_square(2 * d)) {
    b.epsilon = Surd(isqrt(2 * d));
    b.p_lower = 1;
    return b;
  }
  b.pell = pell_min(2 * d);
  const Integer& k0 = b.pell->k0;
  const Integer& l0 = b.pell->l0;
  const Rational eps(Integer(2 * d) * k0, l0);
  b.epsilon = Surd(eps);
  b.p_lower = Rational(l0 * l0 - 1, l0 * l0);
  b.p_lower.canonicalize();
  return b;
}

std::vector<SeshadriBound> table(long d_max) {
  if (d_max < 1) throw SeshadriError("d_max must be positive");
  std::vector<SeshadriBound> rows(d_max);
#pragma omp parallel for schedule(dynamic)
  for (long d = 1; d <= d_max; ++d) rows[d - 1] = surface_bound(d);
  return rows;
}

GeneralBounds general_bounds(const std::vector<Integer>& type) {
  if (type.empty()) throw SeshadriError("empty type");
  for (std::size_t j = 0; j < type.size(); ++j) {
    if (type[j] <= 0) throw SeshadriError("type entries must be positive");
    if (j > 0 && type[j] % type[j - 1] != 0) throw SeshadriError("type must be a divisibility chain");
  }
  const int n = static_cast<int>(type.size());
  GeneralBounds g;
  g.lower = type[0];
  mpz_pow_ui(g.lower_nth_power.get_mpz_t(), type[0].get_mpz_t(), n);
  g.upper_nth_power = factorial(n);
  for (const auto& d : type) g.upper_nth_power *= d;
  return g;
}

SpecialValue special_values(int n, bool hyperelliptic) {
  SpecialValue v;
  if (n == 3) {
    v.epsilon = hyperelliptic ? Rational(3, 2) : Rational(12, 7);
  } else if (n == 4 && !hyperelliptic) {
    v.epsilon = 2;
  } else {
    throw SeshadriError("special values exist for n = 3, or n = 4 non-hyperelliptic");
  }
  Rational pw = 1;
  for (int i = 0; i < n; ++i) pw *= v.epsilon;
  v.p_lower = pw / Rational(factorial(n));
  return v;
}

Rational buser_sarnak(int n, const std::vector<Integer>& type) {
  if (n < 1) throw SeshadriError("dimension must be positive");
  if (!type.empty() && static_cast<int>(type.size()) != n) throw SeshadriError("type length must equal n");
  Rational p = 2;
  for (int i = 0; i < n; ++i) p /= 4;
  return p;
}

Surd width_filling_convert(const Surd& c, int n, const Surd& vol) {
  if (c.sign() <= 0 || vol.sign() <= 0) throw SeshadriError("capacity and volume must be positive");
  if (n < 1) throw SeshadriError("dimension must be positive");
  Surd pw = 1;
  for (int i = 0; i < n; ++i) pw *= c;
  return pw / (Surd(Rational(factorial(n))) * vol);
}

}  // namespace torusfill
