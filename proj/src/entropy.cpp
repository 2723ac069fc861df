#include "xdiscord/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xdiscord/error.hpp"

namespace xdiscord {

double shannon_term(double p) {
  if (!(p >= -kEigenvalueClamp && p <= 1.0 + kEigenvalueClamp)) {
    std::ostringstream os;
    os.precision(17);
    os << "probability " << p << " outside [0, 1]";
    throw Error(ErrorKind::DomainError, os.str());
  }
  if (p <= 0.0) return 0.0;
  return -p * std::log(p);
}

double von_neumann_entropy(const Spectrum4& spectrum) {
  double h = 0.0;
  for (double p : spectrum.values) h += shannon_term(p);
  return h;
}

double von_neumann_entropy(const Spectrum2& spectrum) {
  return shannon_term(spectrum.values[0]) + shannon_term(spectrum.values[1]);
}

double von_neumann_entropy(const ReducedState& state) {
  return shannon_term(state.p0) + shannon_term(state.p1);
}

Spectrum4 xstate_spectrum(const XState& s) {
  const double outer = std::sqrt(std::max(0.0, (s.a() - s.d()) * (s.a() - s.d()) + 4.0 * s.alpha() * s.alpha()));
  const double inner = std::sqrt(std::max(0.0, (s.b() - s.c()) * (s.b() - s.c()) + 4.0 * s.beta() * s.beta()));
  return Spectrum4{{
      (s.a() + s.d() + outer) / 2.0,
      (s.a() + s.d() - outer) / 2.0,
      (s.b() + s.c() + inner) / 2.0,
      (s.b() + s.c() - inner) / 2.0,
  }};
}

PostMeasurementSpectrum post_measurement_spectrum(const XState& s, MeasurementAngles angles) {
  const double a = s.a(), b = s.b(), c = s.c(), d = s.d();
  const double alpha = s.alpha(), beta = s.beta();
  const double cos_t = std::cos(angles.theta);
  const double sin_t = std::sin(angles.theta);

  const double z = (a - b + c - d) * cos_t;
  const double u = a + b - c - d;
  const double v = (a - b - c + d) * cos_t;
  const double coherence =
      4.0 * (alpha * alpha + beta * beta + 2.0 * alpha * beta * std::cos(2.0 * angles.phi)) * sin_t * sin_t;
  const double r12 = std::sqrt(std::max(0.0, (u + v) * (u + v) + coherence));
  const double r34 = std::sqrt(std::max(0.0, (u - v) * (u - v) + coherence));

  return PostMeasurementSpectrum{
      Spectrum4{{(1.0 + z + r12) / 4.0, (1.0 + z - r12) / 4.0, (1.0 - z + r34) / 4.0, (1.0 - z - r34) / 4.0}},
      Spectrum2{{(1.0 + z) / 2.0, (1.0 - z) / 2.0}},
  };
}

double conditional_entropy_unmeasured(const XState& s) {
  return von_neumann_entropy(xstate_spectrum(s)) - von_neumann_entropy(reduce_b(s));
}

double conditional_entropy_measured(const XState& s, MeasurementAngles angles) {
  const auto spectrum = post_measurement_spectrum(s, angles);
  return von_neumann_entropy(spectrum.joint) - von_neumann_entropy(spectrum.measured);
}

}  // namespace xdiscord
