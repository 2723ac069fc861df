#pragma once

// Two-qubit X states: density matrices supported on the diagonal and the
// antidiagonal, in the basis |00>, |01>, |10>, |11> (first qubit A, second B).
//
//     | a  0  0  alpha |
//     | 0  b  beta  0  |
//     | 0  beta* c  0  |
//     | alpha* 0 0  d  |

namespace xdiscord {

/// Tolerance applied to user-supplied entries before canonicalization.
inline constexpr double kInputTolerance = 1e-9;
/// Tolerance for invariants of an already canonical state.
inline constexpr double kCanonicalTolerance = 1e-12;

/// Candidate X state as supplied by a caller: antidiagonal entries are given
/// in polar form and nothing has been validated yet.
struct XStateRaw {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double alpha_mod = 0.0;
  double beta_mod = 0.0;
  double alpha_phase = 0.0;
  double beta_phase = 0.0;
};

/// Validated X state with real nonnegative antidiagonal entries.
///
/// Instances only come out of canonicalize() or from_canonical(), so every
/// XState is a positive semidefinite unit-trace matrix.
class XState {
 public:
  /// Validates already-canonical entries at kCanonicalTolerance without
  /// renormalizing. Throws Error on violation.
  static XState from_canonical(double a, double b, double c, double d, double alpha, double beta);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Equal reduced states (b == c).
  bool symmetric() const noexcept;

  friend bool operator==(const XState&, const XState&) = default;

 private:
  XState(double a, double b, double c, double d, double alpha, double beta) noexcept
      : a_(a), b_(b), c_(c), d_(d), alpha_(alpha), beta_(beta) {}

  friend XState canonicalize(const XStateRaw& raw);
  friend XState apply_flips(const XState& s, bool flip_a, bool flip_b);

  double a_, b_, c_, d_, alpha_, beta_;
};

/// Diagonal single-qubit density matrix diag(p0, p1).
struct ReducedState {
  double p0 = 1.0;
  double p1 = 0.0;
};

/// Validates a raw state, drops the antidiagonal phases (a local unitary
/// e^{-i t1 sz} x e^{-i t2 sz} removes them), renormalizes the diagonal
/// and clips the moduli onto the positivity boundary when they exceed it
/// within tolerance.
///
/// Throws Error{NonPositive | TraceError | PositivityViolation}.
XState canonicalize(const XStateRaw& raw);

/// Raw form of a canonical state (zero phases).
XStateRaw to_raw(const XState& s) noexcept;

ReducedState reduce_a(const XState& s) noexcept;
ReducedState reduce_b(const XState& s) noexcept;

/// Relabels |0> <-> |1> on qubit A and/or B. Each flag is an involution.
XState apply_flips(const XState& s, bool flip_a, bool flip_b);

/// Swaps the roles of A and B (b <-> c).
XState swap_parties(const XState& s);

}  // namespace xdiscord
