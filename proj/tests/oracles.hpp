#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <cmath>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "torusfill/latforms.hpp"
#include "torusfill/seshadri.hpp"

namespace oracle {

using torusfill::Integer;
using torusfill::IntMatrix;

// Smith normal form diagonal by repeated gcd elimination, independent of the symplectic reduction.
inline std::vector<Integer> smith_diagonal(IntMatrix a) {
  const std::size_t n = a.size();
  std::vector<Integer> diag;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (bi == n || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == n) return diag;
      std::swap(a[k], a[bi]);
      for (auto& row : a) std::swap(row[k], row[bj]);
      const Integer p = a[k][k];
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        const Integer f = a[i][k] / p;
        for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        if (a[i][k] != 0) done = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        const Integer f = a[k][j] / p;
        for (std::size_t i = k; i < n; ++i) a[i][j] -= f * a[i][k];
        if (a[k][j] != 0) done = false;
      }
      if (!done) continue;
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a[i][j] % p != 0) {
            for (std::size_t c = k; c < n; ++c) a[k][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) {
        diag.push_back(abs(p));
        break;
      }
    }
  }
  return diag;
}

// Smallest k <= cap with N k^2 + 1 a square, or 0.
inline long pell_brute(long N, long cap) {
  for (long k = 1; k <= cap; ++k) {
    const __int128 v = static_cast<__int128>(N) * k * k + 1;
    auto l = static_cast<__int128>(std::sqrt(static_cast<double>(v)));
    while (l * l > v) --l;
    while ((l + 1) * (l + 1) <= v) ++l;
    if (l * l == v) return k;
  }
  return 0;
}

// (l + k sqrt N)^m as an exact pair.
inline std::pair<Integer, Integer> unit_power(const Integer& l, const Integer& k, long N, long m) {
  Integer a = 1, b = 0;
  for (long i = 0; i < m; ++i) {
    const Integer na = a * l + N * b * k, nb = a * k + b * l;
    a = na;
    b = nb;
  }
  return {a, b};
}

// True iff l0 + k0 sqrt N is not a proper power of a smaller unit, i.e. it is the fundamental one.
inline bool not_a_proper_power(const torusfill::PellSolution& s) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(mpz_sizeinbase(s.l0.get_mpz_t(), 2)) + 128;
  mpfr_t x, root, inv, t, sq;
  mpfr_inits2(prec, x, root, inv, t, sq, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(sq, s.N, MPFR_RNDN);
  mpfr_sqrt(sq, sq, MPFR_RNDN);
  mpfr_set_z(x, s.k0.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x, x, sq, MPFR_RNDN);
  mpfr_add_z(x, x, s.l0.get_mpz_t(), MPFR_RNDN);
  const long max_m = static_cast<long>(mpfr_get_exp(x)) + 1;
  bool fundamental = true;
  for (long m = 2; m <= max_m && fundamental; ++m) {
    mpfr_rootn_ui(root, x, m, MPFR_RNDN);
    mpfr_ui_div(inv, 1, root, MPFR_RNDN);
    mpfr_add(t, root, inv, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    mpfr_round(t, t);
    Integer l;
    mpfr_get_z(l.get_mpz_t(), t, MPFR_RNDN);
    mpfr_sub(t, root, inv, MPFR_RNDN);
    mpfr_div(t, t, sq, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    mpfr_round(t, t);
    Integer k;
    mpfr_get_z(k.get_mpz_t(), t, MPFR_RNDN);
    if (k > 0 && l * l - s.N * k * k == 1 && unit_power(l, k, s.N, m) == std::make_pair(s.l0, s.k0)) fundamental = false;
  }
  mpfr_clears(x, root, inv, t, sq, static_cast<mpfr_ptr>(nullptr));
  return fundamental;
}

}  // namespace oracle
