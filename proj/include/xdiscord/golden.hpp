#pragma once

#include <cmath>
#include <cstddef>

namespace xdiscord {

struct GoldenMinimum {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops once the
/// bracket is narrower than tolerance. Assumes f is unimodal on the bracket.
template <class F>
GoldenMinimum golden_section_minimize(F&& f, double lo, double hi, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  std::size_t evaluations = 2;

  while (hi - lo > tolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++evaluations;
  }
  return f1 <= f2 ? GoldenMinimum{x1, f1, evaluations} : GoldenMinimum{x2, f2, evaluations};
}

}  // namespace xdiscord
