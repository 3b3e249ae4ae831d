#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sslab/grassmann.hpp"
#include "sslab/symbol_table.hpp"

namespace sslab {

/// Phase space of dimension 2n with its symplectic matrix (exact integers).
struct PhaseSpace {
  int n = 0;                       // degrees of freedom; 2n variables
  std::vector<std::string> phi;    // variable names, pairs (q_k, p_k)
  std::vector<std::vector<long>> omega, omega_inv;

  /// Canonical block form: omega[q][p] = +1, omega[p][q] = -1 per pair.
  static PhaseSpace canonical(std::vector<std::string> names);

  void check() const;  // antisymmetry, omega * omega_inv = identity
};

/// Everything needed to work in the superspace over a phase space: the
/// generator set (theta, thetabar, ghosts and their time derivatives) and
/// the auxiliary multiplier symbols.
class SuperspaceContext {
 public:
  SuperspaceContext(PhaseSpace ps, SymbolTable& table);

  const PhaseSpace& phase_space() const { return ps_; }
  SymbolTable& table() const { return *table_; }
  const GeneratorSetPtr& gens() const { return gens_; }

  int theta() const { return 0; }
  int thetabar() const { return 1; }
  int c(int a) const { return 2 + a; }
  int cbar(int a) const { return 2 + dim() + a; }
  int cdot(int a) const { return 2 + 2 * dim() + a; }
  int cbardot(int a) const { return 2 + 3 * dim() + a; }
  int dim() const { return (int)ps_.phi.size(); }
  /// time derivative partner of a generator; -1 if time independent
  /// (theta, thetabar), throws if none exists.
  int gen_dot(int idx) const;

  std::string lambda_name(int a) const { return "lambda_" + ps_.phi[a]; }
  ScalarExpr lambda(int a) const { return ScalarExpr::symbol(lambda_name(a)); }

  GrassmannElement scalar(ScalarExpr c) const {
    return GrassmannElement::scalar(gens_, std::move(c));
  }
  GrassmannElement gen(int idx) const {
    return GrassmannElement::generator(gens_, idx);
  }

  /// d/dt on a full element: scalar coefficients by the chain rule over
  /// declared time-dependent symbols, generators by dotting.
  GrassmannElement time_derivative(const GrassmannElement& e) const;
  ScalarExpr time_derivative(const ScalarExpr& e) const;

 private:
  PhaseSpace ps_;
  SymbolTable* table_;
  GeneratorSetPtr gens_;
};

/// Superfield extension of phase-space variable a:
///   Phi^a = phi^a + theta c^a + thetabar omega^{ab} cbar_b
///           + i thetabar theta omega^{ab} lambda_b.
struct Superfield {
  int index = 0;
  GrassmannElement element;
};

Superfield build_superfield(const SuperspaceContext& ctx, int a);
Superfield time_derivative(const SuperspaceContext& ctx, const Superfield& s);

/// F evaluated on superfields: fields maps base symbols (phi^a, and their
/// dotted velocities) to even elements; the Taylor expansion terminates
/// exactly at second order.
GrassmannElement superfield_of_function(
    const SuperspaceContext& ctx, const ScalarExpr& F,
    const std::vector<std::pair<SymKey, GrassmannElement>>& fields);

}  // namespace sslab
