#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "torusfill/surd.hpp"

namespace torusfill {

class SeshadriError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// l0^2 - N k0^2 = 1 with (k0, l0) minimal.
struct PellSolution {
  long N = 0;
  Integer k0, l0;
};

PellSolution pell_min(long N);

/// Seshadri constant of the principal-type (1, d) surface and the ball-filling bound it gives.
struct SeshadriBound {
  long d = 0;
  Surd epsilon;
  Rational p_lower;
  std::optional<PellSolution> pell;  // empty when 2d is a square
};

SeshadriBound surface_bound(long d);
std::vector<SeshadriBound> table(long d_max);

/// Bounds on eps^n for type (d_1 | ... | d_n): d_1^n <= eps^n <= n! d_1 ... d_n.
struct GeneralBounds {
  Integer lower;            // d_1
  Integer lower_nth_power;  // d_1^n
  Integer upper_nth_power;  // n! prod d_j
};

GeneralBounds general_bounds(const std::vector<Integer>& type);

struct SpecialValue {
  Rational epsilon;
  Rational p_lower;
};

/// Principal tori of dimension 2n = 6 (hyperelliptic or not) and 8 (non-hyperelliptic).
SpecialValue special_values(int n, bool hyperelliptic);

/// Lower bound 2 (1/4)^n on the filling number from eps^n >= (1/4)^n 2 n! prod d_j.
Rational buser_sarnak(int n, const std::vector<Integer>& type);

/// Filling fraction c^n / (n! vol) of one ball of capacity c.
Surd width_filling_convert(const Surd& c, int n, const Surd& vol);

Integer factorial(int n);

}  // namespace torusfill
