#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torusfill {

using Rational = mpq_class;
using Integer = mpz_class;

class SurdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest squarefree divisor representation: n = square * core.
struct SquarefreeSplit {
  std::uint64_t square_root;  // s with n = s^2 * core
  std::uint64_t core;
};

SquarefreeSplit squarefree_split(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Exact real number of the form sum_i c_i * sqrt(n_i) with rational c_i and
/// pairwise distinct squarefree radicands n_i >= 1. The canonical form keeps
/// no zero coefficients, so structural equality is equality of real values.
class Surd {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  Surd() = default;
  Surd(long v) : Surd(Rational(v)) {}              // NOLINT(google-explicit-constructor)
  Surd(int v) : Surd(Rational(v)) {}               // NOLINT(google-explicit-constructor)
  Surd(const Rational& q);                         // NOLINT(google-explicit-constructor)
  static Surd rational(long num, long den = 1);
  /// c * sqrt(n) for any positive n; square factors are pulled out.
  static Surd sqrt(std::uint64_t n, const Rational& c = 1);
  /// Builds a scalar from possibly non-canonical terms.
  static Surd from_terms(const std::vector<std::pair<std::uint64_t, Rational>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_irrational() const { return !is_rational(); }
  /// Rational part (coefficient of radicand 1).
  Rational rational_part() const;
  /// Only valid when is_rational().
  Rational to_rational() const;

  int sign() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Surd inverse() const;

  double to_double() const;
  long double to_long_double() const;
  /// Decimal rendering with `digits` significant digits (display only).
  std::string to_decimal(int digits = 30) const;
  /// Human readable, e.g. "3 - 2*sqrt(2)".
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }

  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Surd& a, const Surd& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Surd& a, const Surd& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Surd& a, const Surd& b) { return (a - b).sign() >= 0; }

  /// Set of radicands, excluding the rational radicand 1.
  std::vector<std::uint64_t> radicands() const;

 private:
  void add_term(std::uint64_t radicand, const Rational& c);
  TermMap terms_;
};

Surd min(const Surd& a, const Surd& b);
Surd max(const Surd& a, const Surd& b);

/// True iff no nonzero rational combination of `values` vanishes, i.e. the
/// coefficient matrix (values x radicands) has full row rank over Q.
bool rationally_independent(std::span<const Surd> values);

/// Rank over Q of a dense rational matrix (rows may have different meaning).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Dimension over Q of the span of `values`.
std::size_t surd_rank(std::span<const Surd> values);

/// Smallest prime not dividing any radicand in `used`.
std::uint64_t fresh_prime(std::span<const Surd> used, std::uint64_t start = 2);

/// Parses "p", "p/q", "sqrt(n)", "c*sqrt(n)" and sums of those such as
/// "3-2*sqrt(2)" or "7/5".
Surd parse_surd(const std::string& text);

}  // namespace torusfill
