#include "xdiscord/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xdiscord/error.hpp"

namespace xdiscord {
namespace {

// Renormalization is skipped when the trace is already 1 to within a few
// ulps, which makes canonicalize() idempotent bit-for-bit.
constexpr double kTraceSnap = 1e-15;

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " = " << value;
  return os.str();
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError, describe(name, v) + " is not finite");
  }
}

}  // namespace

XState XState::from_canonical(double a, double b, double c, double d, double alpha, double beta) {
  for (auto [v, n] : {std::pair{a, "a"}, {b, "b"}, {c, "c"}, {d, "d"}, {alpha, "alpha"}, {beta, "beta"}}) {
    require_finite(v, n);
    if (v < 0.0) throw Error(ErrorKind::NonPositive, describe(n, v) + " is negative");
  }
  if (std::abs(a + b + c + d - 1.0) > kCanonicalTolerance) {
    throw Error(ErrorKind::TraceError, describe("a+b+c+d", a + b + c + d) + " differs from 1");
  }
  if (alpha * alpha > a * d + kCanonicalTolerance) {
    throw Error(ErrorKind::PositivityViolation, describe("alpha^2 - a*d", alpha * alpha - a * d));
  }
  if (beta * beta > b * c + kCanonicalTolerance) {
    throw Error(ErrorKind::PositivityViolation, describe("beta^2 - b*c", beta * beta - b * c));
  }
  return XState(a, b, c, d, alpha, beta);
}

bool XState::symmetric() const noexcept { return std::abs(b_ - c_) <= kCanonicalTolerance; }

XState canonicalize(const XStateRaw& raw) {
  const double diag[4] = {raw.a, raw.b, raw.c, raw.d};
  const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) {
    require_finite(diag[i], names[i]);
    if (diag[i] < -kInputTolerance) {
      throw Error(ErrorKind::NonPositive, describe(names[i], diag[i]) + " is negative");
    }
  }
  require_finite(raw.alpha_mod, "alpha_mod");
  require_finite(raw.beta_mod, "beta_mod");
  require_finite(raw.alpha_phase, "alpha_phase");
  require_finite(raw.beta_phase, "beta_phase");
  if (raw.alpha_mod < -kInputTolerance || raw.beta_mod < -kInputTolerance) {
    throw Error(ErrorKind::NonPositive, "antidiagonal modulus is negative");
  }

  const double trace = raw.a + raw.b + raw.c + raw.d;
  if (std::abs(trace - 1.0) > kInputTolerance) {
    throw Error(ErrorKind::TraceError, describe("a+b+c+d", trace) + " differs from 1");
  }
  if (raw.alpha_mod * raw.alpha_mod > raw.a * raw.d + kInputTolerance) {
    throw Error(ErrorKind::PositivityViolation,
                describe("|alpha|^2 - a*d", raw.alpha_mod * raw.alpha_mod - raw.a * raw.d));
  }
  if (raw.beta_mod * raw.beta_mod > raw.b * raw.c + kInputTolerance) {
    throw Error(ErrorKind::PositivityViolation,
                describe("|beta|^2 - b*c", raw.beta_mod * raw.beta_mod - raw.b * raw.c));
  }

  double a = std::max(raw.a, 0.0);
  double b = std::max(raw.b, 0.0);
  double c = std::max(raw.c, 0.0);
  double d = std::max(raw.d, 0.0);
  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > kTraceSnap) {
    a /= sum;
    b /= sum;
    c /= sum;
    d /= sum;
  }
  const double alpha = std::min(std::max(raw.alpha_mod, 0.0), std::sqrt(a * d));
  const double beta = std::min(std::max(raw.beta_mod, 0.0), std::sqrt(b * c));
  return XState(a, b, c, d, alpha, beta);
}

XStateRaw to_raw(const XState& s) noexcept {
  return XStateRaw{s.a(), s.b(), s.c(), s.d(), s.alpha(), s.beta(), 0.0, 0.0};
}

ReducedState reduce_a(const XState& s) noexcept { return {s.a() + s.b(), s.c() + s.d()}; }

ReducedState reduce_b(const XState& s) noexcept { return {s.a() + s.c(), s.b() + s.d()}; }

XState apply_flips(const XState& s, bool flip_a, bool flip_b) {
  XState out = s;
  if (flip_a) {
    std::swap(out.a_, out.c_);
    std::swap(out.b_, out.d_);
    std::swap(out.alpha_, out.beta_);
  }
  if (flip_b) {
    std::swap(out.a_, out.b_);
    std::swap(out.c_, out.d_);
    std::swap(out.alpha_, out.beta_);
  }
  return out;
}

XState swap_parties(const XState& s) {
  return XState::from_canonical(s.a(), s.c(), s.b(), s.d(), s.alpha(), s.beta());
}

}  // namespace xdiscord
