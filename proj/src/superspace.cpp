#include "sslab/superspace.hpp"

#include <algorithm>

namespace sslab {

PhaseSpace PhaseSpace::canonical(std::vector<std::string> names) {
  if (names.empty() || names.size() % 2)
    throw ConstructionError(
        "phase space needs an even, positive number of variables");
  PhaseSpace ps;
  ps.n = (int)names.size() / 2;
  ps.phi = std::move(names);
  int d = 2 * ps.n;
  ps.omega.assign(d, std::vector<long>(d, 0));
  ps.omega_inv.assign(d, std::vector<long>(d, 0));
  for (int k = 0; k < ps.n; ++k) {
    ps.omega[2 * k][2 * k + 1] = 1;
    ps.omega[2 * k + 1][2 * k] = -1;
    ps.omega_inv[2 * k][2 * k + 1] = -1;
    ps.omega_inv[2 * k + 1][2 * k] = 1;
  }
  ps.check();
  return ps;
}

void PhaseSpace::check() const {
  int d = (int)phi.size();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (omega[a][b] != -omega[b][a])
        throw ConstructionError("symplectic matrix not antisymmetric");
      long s = 0;
      for (int k = 0; k < d; ++k) s += omega[a][k] * omega_inv[k][b];
      if (s != (a == b ? 1 : 0))
        throw ConstructionError("omega * omega_inv is not the identity");
    }
}

SuperspaceContext::SuperspaceContext(PhaseSpace ps, SymbolTable& table)
    : ps_(std::move(ps)), table_(&table) {
  ps_.check();
  std::vector<std::string> names = {"theta", "thetabar"};
  for (const auto& prefix : {"c_", "cbar_", "cdot_", "cbardot_"})
    for (const auto& v : ps_.phi) names.push_back(prefix + v);
  gens_ = std::make_shared<GeneratorSet>(std::move(names));
  for (int a = 0; a < dim(); ++a)
    if (!table_->is_declared(lambda_name(a))) table_->declare_aux(lambda_name(a));
  for (const char* name : {"hbar", "eps", "B"})
    if (!table_->is_declared(name)) table_->declare_constant(name);
}

int SuperspaceContext::gen_dot(int idx) const {
  if (idx == theta() || idx == thetabar()) return -1;
  if (idx < 2 + 2 * dim()) return idx + 2 * dim();
  throw ConstructionError("no time-derivative generator for '" +
                          gens_->name(idx) + "'");
}

ScalarExpr SuperspaceContext::time_derivative(const ScalarExpr& e) const {
  ScalarExpr r;
  for (const SymKey& k : e.symbols()) {
    if (!table_->is_time_dependent(k.name)) continue;
    r += e.derivative(k) * ScalarExpr::symbol(k.name, k.dots + 1);
  }
  return r;
}

GrassmannElement SuperspaceContext::time_derivative(
    const GrassmannElement& e) const {
  GrassmannElement r(gens_);
  for (const auto& [subset, coeff] : e.terms()) {
    r.add_term(subset, time_derivative(coeff));
    for (size_t i = 0; i < subset.size(); ++i) {
      int dotted = gen_dot(subset[i]);
      if (dotted < 0) continue;
      std::vector<int> m = subset;
      m[i] = dotted;
      // restore ascending order, tracking the permutation sign
      int sign = 1;
      bool dup = false;
      for (size_t a = 0; a + 1 < m.size() && !dup; ++a)
        for (size_t b = 0; b + 1 < m.size() - a; ++b) {
          if (m[b] == m[b + 1]) dup = true;
          if (m[b] > m[b + 1]) {
            std::swap(m[b], m[b + 1]);
            sign = -sign;
          }
        }
      if (dup) continue;
      r.add_term(std::move(m), sign > 0 ? coeff : -coeff);
    }
  }
  return r;
}

Superfield build_superfield(const SuperspaceContext& ctx, int a) {
  const PhaseSpace& ps = ctx.phase_space();
  if (a < 0 || a >= ctx.dim())
    throw ConstructionError("superfield index out of range");
  GrassmannElement e(ctx.gens());
  e.add_term({}, ScalarExpr::symbol(ps.phi[a]));
  e.add_term({ctx.theta(), ctx.c(a)}, ScalarExpr::integer(1));
  for (int b = 0; b < ctx.dim(); ++b) {
    if (ps.omega[a][b] == 0) continue;
    ScalarExpr w = ScalarExpr::integer(ps.omega[a][b]);
    e.add_term({ctx.thetabar(), ctx.cbar(b)}, w);
    // i thetabar theta = -i theta thetabar in canonical order
    e.add_term({ctx.theta(), ctx.thetabar()},
               -ScalarExpr::imaginary() * w * ctx.lambda(b));
  }
  return Superfield{a, std::move(e)};
}

Superfield time_derivative(const SuperspaceContext& ctx, const Superfield& s) {
  return Superfield{s.index, ctx.time_derivative(s.element)};
}

GrassmannElement superfield_of_function(
    const SuperspaceContext& ctx, const ScalarExpr& F,
    const std::vector<std::pair<SymKey, GrassmannElement>>& fields) {
  for (const SymKey& k : F.symbols()) {
    if (!ctx.table().is_declared(k.name))
      throw UndeclaredSymbolError(k.name);
    if (ctx.table().lookup(k.name).kind == SymbolKind::phase_var) {
      bool covered = std::any_of(fields.begin(), fields.end(),
                                 [&](const auto& f) { return f.first == k; });
      if (!covered)
        throw ConstructionError("no superfield supplied for symbol " + k.str());
    }
  }

  std::vector<GrassmannElement> n;  // nilpotent shifts
  n.reserve(fields.size());
  for (const auto& [sym, elem] : fields)
    n.push_back(elem - ctx.scalar(ScalarExpr::symbol(sym)));

  GrassmannElement r = ctx.scalar(F);
  for (size_t j = 0; j < fields.size(); ++j) {
    ScalarExpr dj = F.derivative(fields[j].first);
    if (dj.is_zero()) continue;
    r += gmul(ctx.scalar(dj), n[j]);
    for (size_t k = 0; k < fields.size(); ++k) {
      ScalarExpr djk = dj.derivative(fields[k].first);
      if (djk.is_zero()) continue;
      r += gmul(ctx.scalar(djk / ScalarExpr::integer(2)),
                gmul(n[j], n[k]));
    }
  }
  return r;
}

}  // namespace sslab
