#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sslab/number.hpp"

namespace sslab {

/// SI defined value.
inline constexpr double kSpeedOfLight = 299792458.0;
/// CODATA 2018 reduced Planck constant, J s.
inline constexpr double kHBar = 1.054571817e-34;

struct LatticeConfig {
  int steps = 1;
  double t_total = 1.0;
  double x_i = 0.0, x_f = 1.0;
  double m = 1.0, omega0 = 1.0, hbar = 1.0;

  void check() const;
};

enum class LatticeSystem { free_particle, harmonic };

struct CausticError : Error {
  explicit CausticError(const std::string& msg) : Error(msg) {}
};

/// N-step discretized configuration-space path integral, evaluated by exact
/// Gaussian composition (no sampling). Symmetric (split-step) rule for the
/// potential, so each step is exactly unitary.
std::complex<double> qm_lattice_kernel(const LatticeConfig& cfg,
                                       LatticeSystem system);

std::complex<double> free_kernel_exact(const LatticeConfig& cfg);
/// Mehler kernel of the harmonic oscillator.
std::complex<double> harmonic_kernel_exact(const LatticeConfig& cfg);

/// One Gaussian lattice step applied to a normalized Gaussian wavepacket
/// exp(alpha x^2 + beta x + gamma); returns the L2 norm squared afterwards
/// (1 up to roundoff: the step is unitary).
double lattice_step_norm(const LatticeConfig& cfg, LatticeSystem system,
                         std::complex<double> alpha);

struct TrajPoint {
  double q, p;
};

/// Discrete Hamilton equations in the forward-difference form the lattice
/// action implies; symplectic=true uses the semi-implicit variant.
std::vector<TrajPoint> classical_discrete_evolve(const LatticeConfig& cfg,
                                                 LatticeSystem system,
                                                 double q0, double p0,
                                                 bool symplectic = false);

struct BigActionInput {
  double mass_kg = 0.0;
  double age_s = 0.0;
};

struct BigActionResult {
  double B;           // M c^2 T, J s
  double ratio_hbar;  // B / hbar
};

BigActionResult compute_B(const BigActionInput& in);

}  // namespace sslab
