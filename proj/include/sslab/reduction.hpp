#pragma once

#include <string>
#include <vector>

#include "sslab/superspace.hpp"

namespace sslab {

/// The sign/ordering choices the engine fixes once and reports everywhere.
struct ConventionLedger {
  std::string measure =
      "int dtheta dthetabar means: apply d/dthetabar first, then d/dtheta";
  std::string multiplier =
      "quantization multiplier is thetabar*theta/divisor, i.e. "
      "delta(thetabar)delta(theta)/divisor; it replaces the inner factor "
      "i*L(Phi) of the exponent as a whole";
  std::string phase = "the outer i is kept as the phase convention";
  std::string ordering =
      "products are normalized to canonical order theta thetabar with an "
      "explicit sign";
  std::string normalization =
      "overall normalization constant of the reduced functional is not "
      "tracked; results are modulo a normalization constant";
};

struct SuperAction {
  const SuperspaceContext* ctx = nullptr;
  ScalarExpr lagrangian;      // in phase-space variables and velocities
  GrassmannElement integrand;  // L(Phi)
  ConventionLedger conventions;
};

/// First-order phase-space Lagrangian (1/2) phi^a omega_ab phidot^b - H.
ScalarExpr phase_space_lagrangian(const SuperspaceContext& ctx,
                                  const ScalarExpr& hamiltonian);

SuperAction make_super_action(const SuperspaceContext& ctx, ScalarExpr L);

/// Component Lagrangian: i * int dtheta dthetabar L(Phi). Contains the
/// multiplier (lambda) and ghost (c, cbar) sectors.
GrassmannElement cpi_component_lagrangian(const SuperAction& sa);

/// Integrate by parts until no lambdadot or cbardot remains, dropping the
/// total time derivatives. Brings the component Lagrangian to the form
/// lambda_a (phidot^a - omega^{ab} dH/dphi^b) + i cbar_a (...) c^b.
GrassmannElement normalize_by_parts(const SuperspaceContext& ctx,
                                    GrassmannElement e);

/// Exponent integrand of the reduced functional: (i/divisor) L(phi). The
/// full Grassmann product and Berezin integral are carried out; the ghost
/// and multiplier sectors must cancel identically.
ScalarExpr quantize(const SuperAction& sa,
                    const std::string& divisor_name = "hbar");

struct SupportResult {
  ScalarExpr root;   // body-level zero of the delta argument in s = theta thetabar
  ScalarExpr limit;  // the root with eps -> 0
};

/// Treats the even element as the argument of a formal f(alpha + beta s),
/// s = theta thetabar, and returns the body-level root and its eps->0 limit.
SupportResult support_analysis(const SuperspaceContext& ctx,
                               const GrassmannElement& delta_arg,
                               const std::string& eps_name = "eps");

struct LargeActionResult {
  GrassmannElement insertion;  // delta[(1/eps)(1 - theta thetabar/eps)] expanded
  ScalarExpr exponent;         // (i/divisor) L(phi) after the eps->0 projection
  SupportResult support;
};

LargeActionResult large_action_insert(const SuperAction& sa,
                                      const ScalarExpr& divisor,
                                      const std::string& divisor_name = "B");

enum class Verdict { match, sign_flip, formal_divergence, mismatch };
std::string verdict_str(Verdict v);

struct IdentityVerdict {
  std::string name;
  std::string anchor;         // where the claim is made
  std::string claim;          // the claim as written
  std::string engine_result;  // what the engine computes
  Verdict verdict = Verdict::match;
};

struct ReductionReport {
  std::string component_lagrangian;
  std::string quantized_exponent;
  std::string large_action_exponent;
  std::vector<IdentityVerdict> verdicts;
  ConventionLedger conventions;

  bool has_mismatch() const;
  const IdentityVerdict* find(const std::string& name) const;
  std::string to_text() const;
};

/// Runs the whole pipeline on one Lagrangian and replays every identity,
/// recording one verdict per identity.
ReductionReport equivalence_check(const SuperspaceContext& ctx,
                                  const ScalarExpr& lagrangian);

/// hbar <-> other, as a simultaneous symbol swap.
ScalarExpr swap_symbols(const ScalarExpr& e, const std::string& a,
                        const std::string& b);

}  // namespace sslab
