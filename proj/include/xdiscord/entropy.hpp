#pragma once

#include <array>
#include <numbers>

#include "xdiscord/xstate.hpp"

// Entropies are in nats throughout. kNatsToBits is for display only.

namespace xdiscord {

inline constexpr double kNatsToBits = 1.0 / std::numbers::ln2;

/// Eigenvalues smaller than this in magnitude below zero are treated as 0.
inline constexpr double kEigenvalueClamp = 1e-12;

/// Von Neumann measurement on qubit B, projecting onto
///   |0'> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
///   |1'> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>.
struct MeasurementAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Eigenvalues of a two-qubit density matrix.
struct Spectrum4 {
  std::array<double, 4> values{};
};

/// Eigenvalues of a single-qubit density matrix.
struct Spectrum2 {
  std::array<double, 2> values{};
};

struct PostMeasurementSpectrum {
  Spectrum4 joint;     // rho'_AB
  Spectrum2 measured;  // rho'_B
};

/// -p ln p with 0 ln 0 = 0. Throws Error{DomainError} outside
/// [-kEigenvalueClamp, 1 + kEigenvalueClamp].
double shannon_term(double p);

double von_neumann_entropy(const Spectrum4& spectrum);
double von_neumann_entropy(const Spectrum2& spectrum);
double von_neumann_entropy(const ReducedState& state);

/// Eigenvalues of the X state from its two 2x2 blocks.
Spectrum4 xstate_spectrum(const XState& s);

/// Closed-form eigenvalues of rho'_AB and rho'_B after measuring B.
PostMeasurementSpectrum post_measurement_spectrum(const XState& s, MeasurementAngles angles);

/// S(rho_AB) - S(rho_B). Negative for some entangled states.
double conditional_entropy_unmeasured(const XState& s);

/// S(rho'_AB) - S(rho'_B) for the post-measurement state.
double conditional_entropy_measured(const XState& s, MeasurementAngles angles);

}  // namespace xdiscord
