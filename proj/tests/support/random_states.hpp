#pragma once

#include <cmath>
#include <random>

#include "xdiscord/xstate.hpp"

namespace xdiscord::testing {

// Mixes flat simplex samples with log-uniform ones so that states near the
// faces of the simplex (where the gap is nonzero) are well represented.
inline XState random_xstate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  double w[4];
  if (unit(rng) < 0.5) {
    for (double& x : w) x = expo(rng);
  } else {
    for (double& x : w) x = std::pow(10.0, -4.0 * unit(rng));
  }
  const double sum = w[0] + w[1] + w[2] + w[3];
  const double a = w[0] / sum, b = w[1] / sum, c = w[2] / sum;
  const double d = 1.0 - a - b - c;
  const double alpha = unit(rng) * std::sqrt(a * d);
  const double beta = unit(rng) * std::sqrt(b * c);
  return canonicalize(XStateRaw{a, b, c, d, alpha, beta, 0.0, 0.0});
}

/// a = d, b = c.
inline XState random_bell_diagonal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = 0.5 * unit(rng);
  const double b = 0.5 - a;
  return canonicalize(XStateRaw{a, b, b, a, unit(rng) * a, unit(rng) * b, 0.0, 0.0});
}

/// b = c.
inline XState random_symmetric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  const double wa = expo(rng), wb = expo(rng), wd = expo(rng);
  const double sum = wa + 2.0 * wb + wd;
  const double a = wa / sum, b = wb / sum, d = 1.0 - a - 2.0 * b;
  return canonicalize(XStateRaw{a, b, b, d, unit(rng) * std::sqrt(a * d), unit(rng) * b, 0.0, 0.0});
}

inline XState bell_state() { return canonicalize(XStateRaw{0.5, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0}); }

inline XState maximally_mixed() { return canonicalize(XStateRaw{0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0}); }

/// Published worst case of the general search.
inline XState general_fixture() {
  return canonicalize(XStateRaw{0.027180, 0.000224, 0.027327, 0.945269, 0.141651, 0.0, 0.0, 0.0});
}

/// Published worst case of the symmetric search.
inline XState symmetric_fixture() {
  return canonicalize(XStateRaw{0.021726, 0.010288, 0.010288, 0.957698, 0.128057, 0.0, 0.0, 0.0});
}

}  // namespace xdiscord::testing
