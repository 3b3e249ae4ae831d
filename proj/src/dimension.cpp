#include "sslab/dimension.hpp"

#include <sstream>

namespace sslab {

std::string Dimension::str() const {
  std::ostringstream os;
  os << "M^" << rational_str(mass) << " L^" << rational_str(length) << " T^"
     << rational_str(time);
  return os.str();
}

const Dimension& DimensionAssignment::get(const std::string& name) const {
  auto it = dims_.find(name);
  if (it == dims_.end())
    throw DimensionError("no dimension assigned to '" + name + "'");
  return it->second;
}

DimensionAssignment DimensionAssignment::defaults(Rational theta_share) {
  DimensionAssignment a;
  Dimension T = Dimension::of(0, 0, 1);
  Dimension action = Dimension::action();
  a.set("t", T);
  a.set("dt", T);
  Dimension th = theta_share * action;
  Dimension tb = (Rational(1) - theta_share) * action;
  a.set("theta", th);
  a.set("thetabar", tb);
  a.set("dtheta", -th);
  a.set("dthetabar", -tb);
  a.set("hbar", action);
  a.set("B", action);
  a.set("eps", action);  // eps is added to theta*thetabar
  return a;
}

void DimensionAssignment::extend_for_phase_space(const SuperspaceContext& ctx) {
  const PhaseSpace& ps = ctx.phase_space();
  Dimension th = get("theta"), tb = get("thetabar");
  Dimension action = Dimension::action();
  for (int b = 0; b < ctx.dim(); ++b) {
    Dimension phib = get(ps.phi[b]);
    set(ctx.gens()->name(ctx.c(b)), phib - th);
    // cbar_b and lambda_b enter Phi^a through omega^{ab}
    for (int a = 0; a < ctx.dim(); ++a) {
      if (ps.omega[a][b] == 0) continue;
      Dimension phia = get(ps.phi[a]);
      set(ctx.gens()->name(ctx.cbar(b)), phia - tb);
      set(ctx.lambda_name(b), phia - action);
      break;
    }
  }
  Dimension T = Dimension::of(0, 0, 1);
  for (int b = 0; b < ctx.dim(); ++b) {
    set(ctx.gens()->name(ctx.cdot(b)),
        get(ctx.gens()->name(ctx.c(b))) - T);
    set(ctx.gens()->name(ctx.cbardot(b)),
        get(ctx.gens()->name(ctx.cbar(b))) - T);
  }
}

std::string DimensionAssignment::theta_split_note() const {
  return "only the product dim(theta)*dim(thetabar) = action is constrained; "
         "the per-generator split theta=" +
         get("theta").str() + ", thetabar=" + get("thetabar").str() +
         " is a representational choice";
}

namespace {

Dimension atom_dims(const Atom& a, const DimensionAssignment& assign) {
  switch (a.kind) {
    case Atom::Kind::symbol: {
      Dimension d = assign.get(a.sym.name);
      return d - Rational(a.sym.dots) * Dimension::of(0, 0, 1);
    }
    case Atom::Kind::func: {
      Dimension d = assign.get(a.func_name);
      for (size_t i = 0; i < a.args.size(); ++i)
        d = d - Rational(a.deriv[i]) * infer_dims(a.args[i], assign);
      return d;
    }
    case Atom::Kind::delta:
      return -Rational(a.delta_order + 1) * infer_dims(a.args[0], assign);
  }
  return Dimension::dimensionless();
}

std::string mono_desc(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.factors.size(); ++i) {
    if (i) s += "*";
    s += m.factors[i].first->str();
    if (m.factors[i].second != 1)
      s += "^" + std::to_string(m.factors[i].second);
  }
  return s;
}

Dimension poly_dims(const Poly& p, const DimensionAssignment& assign) {
  std::optional<Dimension> dim;
  std::string first_desc;
  for (const auto& [m, c] : p) {
    Dimension d = Dimension::dimensionless();
    for (const auto& [atom, e] : m.factors)
      d = d + Rational(e) * atom_dims(*atom, assign);
    if (!dim) {
      dim = d;
      first_desc = mono_desc(m);
    } else if (d != *dim) {
      throw DimensionError("inhomogeneous sum: term '" + first_desc +
                           "' has dimension " + dim->str() + " but term '" +
                           mono_desc(m) + "' has dimension " + d.str());
    }
  }
  return dim.value_or(Dimension::dimensionless());
}

}  // namespace

Dimension infer_dims(const ScalarExpr& e, const DimensionAssignment& assign) {
  if (e.is_zero()) return Dimension::dimensionless();
  return poly_dims(e.num(), assign) - poly_dims(e.den(), assign);
}

Dimension infer_dims(const GrassmannElement& e,
                     const DimensionAssignment& assign) {
  std::optional<Dimension> dim;
  std::string first_desc;
  for (const auto& [subset, coeff] : e.terms()) {
    Dimension d = infer_dims(coeff, assign);
    std::string desc = "(" + coeff.str() + ")";
    for (int idx : subset) {
      d = d + assign.get(e.gens()->name(idx));
      desc += " " + e.gens()->name(idx);
    }
    if (!dim) {
      dim = d;
      first_desc = desc;
    } else if (d != *dim) {
      throw DimensionError("inhomogeneous sum: term '" + first_desc +
                           "' has dimension " + dim->str() + " but term '" +
                           desc + "' has dimension " + d.str());
    }
  }
  return dim.value_or(Dimension::dimensionless());
}

namespace {

Dimension measures_dims(const std::vector<std::string>& measures,
                        const DimensionAssignment& assign) {
  Dimension d = Dimension::dimensionless();
  for (const auto& m : measures) d = d + assign.get(m);
  return d;
}

}  // namespace

bool check_dimensionless(const ScalarExpr& e, const DimensionAssignment& assign,
                         const std::vector<std::string>& extra_measures) {
  return (infer_dims(e, assign) + measures_dims(extra_measures, assign))
      .is_dimensionless();
}

bool check_dimensionless(const GrassmannElement& e,
                         const DimensionAssignment& assign,
                         const std::vector<std::string>& extra_measures) {
  return (infer_dims(e, assign) + measures_dims(extra_measures, assign))
      .is_dimensionless();
}

}  // namespace sslab
