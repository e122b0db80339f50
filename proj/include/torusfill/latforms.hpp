#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torusfill/surd.hpp"

namespace torusfill {

class LatformsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_transpose(const IntMatrix& a);
Integer int_determinant(IntMatrix a);
/// U^T B U.
IntMatrix congruence(const IntMatrix& b, const IntMatrix& u);

/// Throws LatformsError unless b is square of even size, antisymmetric and nondegenerate.
void check_alternating(const IntMatrix& b);

/// Elementary divisors d_1 | ... | d_n of an integral symplectic form with the
/// unimodular basis change U such that U^T B U = diag([[0, d_j], [-d_j, 0]]).
struct PolarizationType {
  std::vector<Integer> divisors;
  IntMatrix basis_change;
};

PolarizationType polarization_type(const IntMatrix& b);

/// Rectangular split torus T(m1, ..., mn): blocks [[0, m_j], [-m_j, 0]].
IntMatrix split_form(const std::vector<long>& m);

using SurdMatrix4 = std::array<std::array<Surd, 4>, 4>;
using IntMatrix4 = std::array<std::array<long, 4>, 4>;

/// Alternating 4x4 matrix from its upper triangle (b12, b13, b14, b23, b24, b34).
SurdMatrix4 alternating4(const std::array<Surd, 6>& upper);
SurdMatrix4 congruence(const SurdMatrix4& b, const IntMatrix4& u);
long determinant(const IntMatrix4& u);

/// b13 b24 - b14 b23 - b12 b34.
Surd orientation_quantity(const SurdMatrix4& b);
/// True iff the six upper entries do not all lie on one rational ray.
bool is_irrational_form(const SurdMatrix4& b);

struct NormalizationChecks {
  bool oriented = false;   // orientation_quantity > 0
  bool condition_i = false;   // b12 = b34 = 0, or b12, b34 positive and rationally independent
  bool condition_ii = false;  // (b13, b14, b23, b24) is not a multiple of a rational vector
  bool ok() const { return oriented && condition_i && condition_ii; }
};

NormalizationChecks normalization_checks(const SurdMatrix4& b);

struct NormalizedBasis {
  SurdMatrix4 form;
  IntMatrix4 basis_change;        // form = U^T B U
  bool orientation_flipped = false;  // U has determinant -1 (lambda_1 and lambda_2 swapped first)
  bool block_case = false;           // b12 = b34 = 0 branch
};

/// Brings an irrational form into the normal form used for the period
/// lattice construction, searching transvection parameters in [-k_max, k_max].
NormalizedBasis normalize_basis(const SurdMatrix4& b, long k_max = 10);

struct PeriodLatticeSolution {
  Surd p, q, r, s;  // unscaled period coordinates
  Surd D;           // p s - q r
  Surd x, y, u;     // closed-form coefficients
  Surd v;
  Surd rho2;
  bool v_zero = false;          // b12 = 0 branch: rho^2 is a fresh radical
  std::uint64_t perturbation_radicand = 0;
  Surd b13, b14, b23, b24;      // form entries the solution was built from
};

PeriodLatticeSolution build_period_lattice(const SurdMatrix4& normalized);

struct NoCurveCertificate {
  bool D_positive = false;
  bool compatible = false;
  bool independent = false;
  bool product_irrational = false;  // rho^2 D = p s - q r (scaled) irrational
  bool x_positive = false;
  bool positive_definite = false;   // (x y - u^2) / rho^2 - v^2 > 0
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

NoCurveCertificate verify_no_curves(const PeriodLatticeSolution& sol);

/// Nonzero integer vector with |n_i| <= bound solving -n1 r + n2 p - n3 s + n4 q = 0,
/// if any. Parallel over n1.
std::optional<std::array<long, 4>> integrality_search(const PeriodLatticeSolution& sol, long bound = 20);
std::optional<std::array<long, 4>> integrality_search_serial(const PeriodLatticeSolution& sol, long bound = 20);

/// Class beta - a e on the blow-up of a 4-torus, through beta^2 and a.
struct BlowupClass {
  Surd beta_square;
  Surd a;
};

bool cone_contains(const BlowupClass& c);
/// For the principal class of T(1, 1) (beta^2 = 2): no Kahler representative once a > 4/3.
bool kahler_excluded(const BlowupClass& c);

}  // namespace torusfill
