#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "levyopt/model.hpp"

namespace levyopt {

// Gauss-Hermite rule for the weight exp(-x^2) on the real line; nodes are
// stored in descending order and weights sum to sqrt(pi).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

// Deterministic integration scheme for one increment of the log-return
// process over dt. Conditioning on the per-atom jump counts leaves a
// Gaussian with a count-dependent mean, handled by Gauss-Hermite; the counts
// themselves form a finite mixture truncated at a Poisson tail below
// tail_bound.
struct IncrementQuadrature {
  struct Component {
    double weight = 0.0;  // product of per-atom Poisson probabilities
    double mean = 0.0;    // drift plus the jumps of this configuration
  };

  std::vector<Component> components;
  double sigma = 0.0;  // Gaussian scale sqrt(c * dt); 0 collapses to point masses
  GaussHermiteRule rule;
  int max_total_jumps = 0;        // truncation actually used
  bool enumeration_capped = false;  // too many count configurations; scheme unusable

  template <typename F>
  double expectation(F&& f) const {
    double total = 0.0;
    if (sigma == 0.0) {
      for (const auto& c : components) total += c.weight * f(c.mean);
      return total;
    }
    const double scale = std::sqrt(2.0) * sigma;
    const double norm = 1.0 / std::sqrt(M_PI);
    for (const auto& c : components) {
      double inner = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        inner += rule.weights[j] * f(c.mean + scale * rule.nodes[j]);
      total += c.weight * norm * inner;
    }
    return total;
  }
};

// Builds the scheme for one increment of length dt of the process described
// by `log`. The jump-count truncation is the smallest K with Poisson tail
// mass below tail_bound, but never below min_max_jumps; if enumerating all
// count vectors would exceed term_cap components, the scheme is returned
// empty with enumeration_capped set.
IncrementQuadrature make_increment_quadrature(const LogTriplet& log, double dt,
                                              int min_max_jumps, int gh_nodes,
                                              double tail_bound = 1e-12,
                                              std::size_t term_cap = 1'000'000);

}  // namespace levyopt
