#include <doctest.h>

#include <cmath>

#include "sslab/lattice.hpp"

using namespace sslab;

namespace {

LatticeConfig base_config() {
  LatticeConfig cfg;
  cfg.steps = 8;
  cfg.t_total = 1.0;
  cfg.x_i = 0.3;
  cfg.x_f = 0.7;
  cfg.m = 1.0;
  cfg.omega0 = 1.0;
  cfg.hbar = 1.0;
  return cfg;
}

double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("config validation") {
  LatticeConfig cfg = base_config();
  cfg.steps = 0;
  CHECK_THROWS_AS(cfg.check(), ConstructionError);
  cfg = base_config();
  cfg.t_total = -1.0;
  CHECK_THROWS_AS(cfg.check(), ConstructionError);
  cfg = base_config();
  cfg.m = 0.0;
  CHECK_THROWS_AS(cfg.check(), ConstructionError);
  cfg = base_config();
  cfg.hbar = -1.0;
  CHECK_THROWS_AS(cfg.check(), ConstructionError);
}

TEST_CASE("free kernel telescopes exactly at any step count") {
  LatticeConfig cfg = base_config();
  std::complex<double> exact = free_kernel_exact(cfg);
  for (int n : {1, 2, 7, 32, 101}) {
    cfg.steps = n;
    CHECK(rel_err(qm_lattice_kernel(cfg, LatticeSystem::free_particle),
                  exact) < 1e-12);
  }

  // different masses / times / endpoints
  cfg = base_config();
  cfg.m = 2.5;
  cfg.t_total = 0.37;
  cfg.x_i = -1.1;
  cfg.x_f = 0.4;
  cfg.hbar = 0.8;
  cfg.steps = 13;
  CHECK(rel_err(qm_lattice_kernel(cfg, LatticeSystem::free_particle),
                free_kernel_exact(cfg)) < 1e-12);
}

TEST_CASE("harmonic kernel converges quadratically in the step size") {
  LatticeConfig cfg = base_config();
  std::complex<double> exact = harmonic_kernel_exact(cfg);
  std::vector<double> errs;
  for (int n : {8, 16, 32, 64}) {
    cfg.steps = n;
    errs.push_back(
        std::abs(qm_lattice_kernel(cfg, LatticeSystem::harmonic) - exact));
  }
  for (size_t k = 0; k + 1 < errs.size(); ++k) {
    double ratio = errs[k] / errs[k + 1];
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
  // and the finest lattice is genuinely close
  CHECK(errs.back() / std::abs(exact) < 1e-3);
}

TEST_CASE("harmonic kernel rejects caustics") {
  LatticeConfig cfg = base_config();
  cfg.t_total = 3.14159265358979323846;  // omega0 * t = pi
  CHECK_THROWS_AS(harmonic_kernel_exact(cfg), CausticError);
}

TEST_CASE("one lattice step is unitary") {
  LatticeConfig cfg = base_config();
  for (auto system : {LatticeSystem::free_particle, LatticeSystem::harmonic}) {
    for (std::complex<double> alpha :
         {std::complex<double>(-1.0, 0.0), std::complex<double>(-0.5, 0.3),
          std::complex<double>(-2.0, -1.5)}) {
      double n2 = lattice_step_norm(cfg, system, alpha);
      CHECK(std::abs(n2 - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(
      lattice_step_norm(cfg, LatticeSystem::free_particle, {0.5, 0.0}),
      ConstructionError);
}

TEST_CASE("discrete classical evolution") {
  LatticeConfig cfg = base_config();
  cfg.steps = 100;

  // free particle: exact straight line in both schemes
  for (bool symp : {false, true}) {
    auto traj = classical_discrete_evolve(cfg, LatticeSystem::free_particle,
                                          0.0, 1.0, symp);
    REQUIRE(traj.size() == 101);
    for (size_t k = 0; k < traj.size(); ++k) {
      double t = cfg.t_total * (double)k / cfg.steps;
      CHECK(traj[k].q == doctest::Approx(t).epsilon(1e-12));
      CHECK(traj[k].p == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  // harmonic, forward difference: energy grows by (1 + dt^2) per step
  double dt = cfg.t_total / cfg.steps;
  auto fwd =
      classical_discrete_evolve(cfg, LatticeSystem::harmonic, 1.0, 0.0, false);
  double e0 = 1.0;
  double expected = e0 * std::pow(1.0 + dt * dt, cfg.steps);
  double efin = fwd.back().q * fwd.back().q + fwd.back().p * fwd.back().p;
  CHECK(efin == doctest::Approx(expected).epsilon(1e-10));

  // harmonic, symplectic: energy error stays bounded by O(dt)
  auto sym =
      classical_discrete_evolve(cfg, LatticeSystem::harmonic, 1.0, 0.0, true);
  for (const auto& pt : sym) {
    double e = pt.q * pt.q + pt.p * pt.p;
    CHECK(std::abs(e - e0) < 3.0 * dt);
  }
}

TEST_CASE("the macroscopic action scale") {
  BigActionResult r = compute_B({1.0, 1.0});
  CHECK(r.B == kSpeedOfLight * kSpeedOfLight);
  CHECK(r.ratio_hbar == doctest::Approx(r.B / 1.054571817e-34));

  BigActionResult sun = compute_B({1.989e30, 4.6e9 * 365.25 * 86400.0});
  CHECK(sun.B == doctest::Approx(1.989e30 * 8.9875517873681764e16 *
                                 (4.6e9 * 365.25 * 86400.0)));
  CHECK(sun.ratio_hbar > 1e98);

  CHECK_THROWS_AS(compute_B({-1.0, 1.0}), ConstructionError);
}
