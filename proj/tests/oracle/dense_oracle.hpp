#pragma once

// Independent reference for the closed forms: builds the 4x4 density
// matrices explicitly (complex phases included) and diagonalizes them.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "xdiscord/xstate.hpp"

namespace xdiscord::oracle {

using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;
using cd = std::complex<double>;

inline Mat4 density(const XStateRaw& raw) {
  Mat4 rho = Mat4::Zero();
  rho(0, 0) = raw.a;
  rho(1, 1) = raw.b;
  rho(2, 2) = raw.c;
  rho(3, 3) = raw.d;
  rho(0, 3) = std::polar(raw.alpha_mod, raw.alpha_phase);
  rho(3, 0) = std::conj(rho(0, 3));
  rho(1, 2) = std::polar(raw.beta_mod, raw.beta_phase);
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

inline Mat4 density(const XState& s) { return density(to_raw(s)); }

template <int N>
std::array<double, N> eigenvalues(const Eigen::Matrix<cd, N, N>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cd, N, N>> solver(m, Eigen::EigenvaluesOnly);
  std::array<double, N> out{};
  for (int i = 0; i < N; ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end());
  return out;
}

template <std::size_t N>
double entropy(const std::array<double, N>& eig) {
  double h = 0.0;
  for (double p : eig) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

inline std::array<Eigen::Vector2cd, 2> measurement_basis(double theta, double phi) {
  const cd phase = std::polar(1.0, phi);
  Eigen::Vector2cd v0, v1;
  v0 << std::cos(theta / 2), phase * std::sin(theta / 2);
  v1 << std::sin(theta / 2), -phase * std::cos(theta / 2);
  return {v0, v1};
}

/// Sum_i (I x P_i) rho (I x P_i) for a measurement on B, or (P_i x I) ... on A.
inline Mat4 post_measurement(const Mat4& rho, double theta, double phi, bool on_b = true) {
  const auto basis = measurement_basis(theta, phi);
  Mat4 out = Mat4::Zero();
  for (const auto& v : basis) {
    const Mat2 proj = v * v.adjoint();
    const Mat4 op = on_b ? Eigen::kroneckerProduct(Mat2::Identity(), proj).eval()
                         : Eigen::kroneckerProduct(proj, Mat2::Identity()).eval();
    out += op * rho * op;
  }
  return out;
}

/// Reduced state of B (trace over the first qubit).
inline Mat2 trace_a(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
  return out;
}

/// Reduced state of A.
inline Mat2 trace_b(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

inline double conditional_entropy(const Mat4& rho, bool on_b = true) {
  return entropy(eigenvalues<4>(rho)) - entropy(eigenvalues<2>(on_b ? trace_a(rho) : trace_b(rho)));
}

/// Discord by brute force over a (theta, phi) grid on [0, pi] x [0, 2 pi).
inline double discord(const Mat4& rho, int grid_theta, int grid_phi, bool on_b = true) {
  const double unmeasured = conditional_entropy(rho, on_b);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_theta; ++i) {
    const double theta = std::numbers::pi * i / (grid_theta - 1);
    for (int j = 0; j < grid_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / grid_phi;
      best = std::min(best, conditional_entropy(post_measurement(rho, theta, phi, on_b), on_b));
    }
  }
  return best - unmeasured;
}

}  // namespace xdiscord::oracle
