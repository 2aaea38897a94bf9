#pragma once

#include <vector>

#include "levyopt/model.hpp"
#include "levyopt/rng.hpp"

namespace levyopt::detail {

// Categorical pick proportional to atom intensities. Atom lists are short,
// so a linear walk beats any precomputed table.
inline int pick_jump_atom(const std::vector<JumpAtom>& atoms, double total_intensity,
                          PathRng& rng) {
  const double target = rng.uniform() * total_intensity;
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    cumulative += atoms[i].intensity;
    if (target < cumulative) return static_cast<int>(i);
  }
  return static_cast<int>(atoms.size()) - 1;
}

}  // namespace levyopt::detail
