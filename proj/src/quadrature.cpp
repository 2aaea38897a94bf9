#include "levyopt/quadrature.hpp"

#include <stdexcept>

namespace levyopt {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
  GaussHermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  // Newton iteration on the orthonormal Hermite recurrence; only the upper
  // half is computed, the rest follows by symmetry.
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(n, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[1];
    else
      z = 2.0 * z - rule.nodes[i - 2];

    double pp = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

IncrementQuadrature make_increment_quadrature(const LogTriplet& log, double dt,
                                              int min_max_jumps, int gh_nodes,
                                              double tail_bound, std::size_t term_cap) {
  if (dt <= 0.0) throw std::invalid_argument("make_increment_quadrature: dt must be > 0");
  IncrementQuadrature scheme;
  scheme.sigma = std::sqrt(log.diffusion * dt);

  // Truncate the total jump count where the Poisson tail drops below
  // tail_bound (an absolute error bound for bounded integrands).
  const double mean_total = log.total_intensity() * dt;
  int kmax = 0;
  {
    double pmf = std::exp(-mean_total);
    double cumulative = pmf;
    while (1.0 - cumulative > tail_bound && kmax < 100000) {
      ++kmax;
      pmf *= mean_total / kmax;
      cumulative += pmf;
    }
  }
  kmax = std::max(kmax, min_max_jumps);
  scheme.max_total_jumps = kmax;

  // Count vectors with total <= kmax over m atoms: C(kmax + m, m).
  const std::size_t atom_count = log.atoms.size();
  {
    double combinations = 1.0;
    for (std::size_t i = 1; i <= atom_count; ++i)
      combinations *= static_cast<double>(kmax + i) / static_cast<double>(i);
    if (combinations > static_cast<double>(term_cap)) {
      scheme.enumeration_capped = true;
      return scheme;
    }
  }

  if (scheme.sigma > 0.0) scheme.rule = gauss_hermite(gh_nodes);

  const double base_mean = (log.drift - log.intensity_weighted_size()) * dt;
  if (atom_count == 0) {
    scheme.components.push_back({1.0, base_mean});
    return scheme;
  }

  // Depth-first enumeration of per-atom jump counts with total <= kmax,
  // accumulating the product of Poisson probabilities and the jump sum.
  auto enumerate = [&](auto&& self, std::size_t atom_index, int remaining, double weight,
                       double mean) -> void {
    if (atom_index == atom_count) {
      scheme.components.push_back({weight, mean});
      return;
    }
    const double atom_mean = log.atoms[atom_index].intensity * dt;
    double pmf = std::exp(-atom_mean);
    for (int k = 0; k <= remaining; ++k) {
      if (k > 0) pmf *= atom_mean / k;
      self(self, atom_index + 1, remaining - k, weight * pmf,
           mean + k * log.atoms[atom_index].size);
    }
  };
  enumerate(enumerate, 0, kmax, 1.0, base_mean);
  return scheme;
}

}  // namespace levyopt
