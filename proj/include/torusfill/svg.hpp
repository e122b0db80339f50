#pragma once

#include <string>

#include "torusfill/torus.hpp"

namespace torusfill {

/// SVG 1.1 picture of r, the fundamental parallelogram of L and the eight
/// translates r + a g1 + b g2 with |a|, |b| <= 1. 200 user units per unit
/// length, x2 pointing up. Output depends only on the input.
std::string render_svg(const Region& r, const Lattice2& L);

}  // namespace torusfill
