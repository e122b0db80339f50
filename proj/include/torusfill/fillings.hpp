#pragma once

#include <string>
#include <vector>

#include "torusfill/shears.hpp"
#include "torusfill/torus.hpp"

namespace torusfill {

class FillingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Open diamond |x1| + |x2| < a/2.
Region diamond(const Surd& a);

/// Rectangle (-d, d) x (-1/2, 1/2) with 2d = a - 1, triangles of height h_top
/// and h_bot on its horizontal sides (apexes on x1 = 0), and two flaps of
/// height 1: the right flap has base {d} x (-1/2, 1/2) and apex (d + w_right, 0),
/// the left flap is its mirror with width w_left.
struct DistortedDiamond {
  Surd a;
  Surd h_top, h_bot;
  Surd w_left, w_right;

  Surd d() const { return (a - 1) / 2; }
  void validate() const;
};

/// Five pieces, in order: rectangle, top, bottom, left flap, right flap.
Region distorted_diamond(const DistortedDiamond& shape);

struct FillingCertificate {
  std::string name;
  ShearSequence sequence;
  Region final_region;
  Lattice2 lattice;
  CompositionVerdict composition;
  InjectivityVerdict injectivity;
  Surd source_area;
  Surd final_area;
  Surd covered_fraction;  // area / covolume; meaningful when injective
  bool fundamental_domain = false;
  bool symplectic = true;
  std::vector<SymplecticityRecord> symplecticity;

  bool area_preserved() const { return source_area == final_area; }
  bool valid() const { return composition.ok && injectivity.ok && symplectic && area_preserved(); }
};

/// Runs every check on a shear sequence and a target lattice.
FillingCertificate certify(std::string name, ShearSequence seq, const Lattice2& lattice);

/// Diamond of size 2k sheared by (x1 + (2k-1) x2, x2) into a fundamental domain of Z^2(2k^2, 1).
FillingCertificate example_T2k2(long k);

enum class Orientation { pp, pm, mp, mm };
std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& s);

/// 8/9 of T(1, 1): dead-zone shears on the diamond of size 4/3 - eps.
FillingCertificate example_eight_ninths(const Surd& eps, Orientation o = Orientation::pm);

/// 49/50 of T(1, 1) by a diamond of size 7/5 - eps.
FillingCertificate example_fortynine_fiftieths(const Surd& eps);

/// Constants of the sqrt(2) filling.
struct Theorem1Constants {
  Surd b, w_left, w_right, h_top, h_bot;
};
Theorem1Constants theorem1_constants();

/// Full filling of T(1, 1) by a distorted diamond of size sqrt(2) (eps = 0), or a
/// shrunken copy for eps > 0.
FillingCertificate theorem1_filling(const Surd& eps);

/// Full filling of T((2k+1)^2 / (2(k+1)^2), 1) by the diamond of size (2k+1)/(k+1).
FillingCertificate family_filling(long k);

/// Square (-k/2, k/2)^2 sheared by slope k, fundamental for Z^2(k^2, 1).
FillingCertificate cube_filling(long k);
/// (-1/(2k), 1/(2k)) x (-k/2, k/2) sheared by slope 1/k, fundamental for Z^2(1, 1).
FillingCertificate polydisc_filling(long k);

}  // namespace torusfill
