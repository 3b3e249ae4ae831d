#include "sslab/lattice.hpp"

#include <cmath>

namespace sslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using cd = std::complex<double>;

/// Gaussian kernel A exp(a x^2 + b y^2 + c x y) from endpoint x to y.
struct GaussKernel {
  cd A, a, b, c;
};

/// Compose by integrating over the shared endpoint:
/// int dy K1(x,y) K2(y,z).
GaussKernel compose(const GaussKernel& k1, const GaussKernel& k2) {
  cd s = k1.b + k2.a;
  if (std::abs(s) < 1e-300)
    throw CausticError("singular Gaussian step (caustic)");
  GaussKernel r;
  r.A = k1.A * k2.A * std::sqrt(kPi / (-s));
  r.a = k1.a - k1.c * k1.c / (4.0 * s);
  r.b = k2.b - k2.c * k2.c / (4.0 * s);
  r.c = -k1.c * k2.c / (2.0 * s);
  return r;
}

GaussKernel short_time_step(const LatticeConfig& cfg, LatticeSystem system,
                            double dt) {
  const cd I(0.0, 1.0);
  double m = cfg.m, hb = cfg.hbar;
  GaussKernel k;
  k.A = std::sqrt(m / (2.0 * kPi * I * hb * dt));
  cd kin = I * m / (2.0 * hb * dt);
  k.a = kin;
  k.b = kin;
  k.c = -2.0 * kin;
  if (system == LatticeSystem::harmonic) {
    // symmetric split: exp(-i V(x) dt/2) K_free exp(-i V(y) dt/2) with
    // V = (1/2) m w^2 x^2. Each factor is unitary, so the step is exactly
    // unitary, and the symmetric placement makes the error O(dt^2) overall.
    cd pot = -I * dt * m * cfg.omega0 * cfg.omega0 / (4.0 * hb);
    k.a += pot;
    k.b += pot;
  }
  return k;
}

}  // namespace

void LatticeConfig::check() const {
  if (steps < 1) throw ConstructionError("lattice: steps must be >= 1");
  if (t_total <= 0) throw ConstructionError("lattice: total time must be > 0");
  if (m <= 0) throw ConstructionError("lattice: mass must be > 0");
  if (hbar <= 0) throw ConstructionError("lattice: hbar must be > 0");
}

std::complex<double> qm_lattice_kernel(const LatticeConfig& cfg,
                                       LatticeSystem system) {
  cfg.check();
  double dt = cfg.t_total / cfg.steps;
  GaussKernel k = short_time_step(cfg, system, dt);
  for (int i = 1; i < cfg.steps; ++i)
    k = compose(k, short_time_step(cfg, system, dt));
  return k.A * std::exp(k.a * cd(cfg.x_i * cfg.x_i) + k.b * cd(cfg.x_f * cfg.x_f) +
                        k.c * cd(cfg.x_i * cfg.x_f));
}

std::complex<double> free_kernel_exact(const LatticeConfig& cfg) {
  const cd I(0.0, 1.0);
  double dx = cfg.x_f - cfg.x_i;
  return std::sqrt(cfg.m / (2.0 * kPi * I * cfg.hbar * cfg.t_total)) *
         std::exp(I * cfg.m * dx * dx / (2.0 * cfg.hbar * cfg.t_total));
}

std::complex<double> harmonic_kernel_exact(const LatticeConfig& cfg) {
  const cd I(0.0, 1.0);
  double w = cfg.omega0, t = cfg.t_total;
  double s = std::sin(w * t);
  if (std::abs(s) < 1e-9 * std::abs(w * t))
    throw CausticError("harmonic kernel at a caustic");
  return std::sqrt(cfg.m * w / (2.0 * kPi * I * cfg.hbar * s)) *
         std::exp(I * cfg.m * w *
                  ((cfg.x_i * cfg.x_i + cfg.x_f * cfg.x_f) * std::cos(w * t) -
                   2.0 * cfg.x_i * cfg.x_f) /
                  (2.0 * cfg.hbar * s));
}

double lattice_step_norm(const LatticeConfig& cfg, LatticeSystem system,
                         std::complex<double> alpha) {
  if (alpha.real() >= 0)
    throw ConstructionError("wavepacket must be normalizable (Re alpha < 0)");
  double dt = cfg.t_total / cfg.steps;
  GaussKernel k = short_time_step(cfg, system, dt);
  // psi(x) = C exp(alpha x^2), |C|^2 = sqrt(-2 Re alpha / pi)
  // psi'(y) = C A int dx exp((a+alpha) x^2 + c x y) exp(b y^2)
  cd s = k.a + alpha;
  cd C2 = k.A * std::sqrt(kPi / (-s));
  cd gamma = k.b - k.c * k.c / (4.0 * s);  // psi'(y) = C C2 exp(gamma y^2)
  double norm0 = std::sqrt(-2.0 * alpha.real() / kPi);
  double n2 = norm0 * std::norm(C2) * std::sqrt(kPi / (-2.0 * gamma.real()));
  return n2;
}

std::vector<TrajPoint> classical_discrete_evolve(const LatticeConfig& cfg,
                                                 LatticeSystem system,
                                                 double q0, double p0,
                                                 bool symplectic) {
  cfg.check();
  double dt = cfg.t_total / cfg.steps;
  double w2 = system == LatticeSystem::harmonic ? cfg.omega0 * cfg.omega0 : 0.0;
  std::vector<TrajPoint> traj;
  traj.reserve(cfg.steps + 1);
  traj.push_back({q0, p0});
  double q = q0, p = p0;
  for (int k = 0; k < cfg.steps; ++k) {
    if (symplectic) {
      p -= dt * cfg.m * w2 * q;
      q += dt * p / cfg.m;
    } else {
      double qn = q + dt * p / cfg.m;
      double pn = p - dt * cfg.m * w2 * q;
      q = qn;
      p = pn;
    }
    traj.push_back({q, p});
  }
  return traj;
}

BigActionResult compute_B(const BigActionInput& in) {
  if (in.mass_kg < 0 || in.age_s < 0)
    throw ConstructionError("mass and age must be non-negative");
  BigActionResult r;
  r.B = in.mass_kg * kSpeedOfLight * kSpeedOfLight * in.age_s;
  r.ratio_hbar = r.B / kHBar;
  return r;
}

}  // namespace sslab
