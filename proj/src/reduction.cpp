#include "sslab/reduction.hpp"

#include <sstream>

namespace sslab {

ScalarExpr phase_space_lagrangian(const SuperspaceContext& ctx,
                                  const ScalarExpr& hamiltonian) {
  const PhaseSpace& ps = ctx.phase_space();
  ScalarExpr L;
  for (int a = 0; a < ctx.dim(); ++a)
    for (int b = 0; b < ctx.dim(); ++b) {
      if (ps.omega_inv[a][b] == 0) continue;
      L += ScalarExpr::rational(Rational(ps.omega_inv[a][b], 2)) *
           ScalarExpr::symbol(ps.phi[a]) * ScalarExpr::symbol(ps.phi[b], 1);
    }
  return L - hamiltonian;
}

SuperAction make_super_action(const SuperspaceContext& ctx, ScalarExpr L) {
  SuperAction sa;
  sa.ctx = &ctx;
  sa.lagrangian = std::move(L);
  std::vector<std::pair<SymKey, GrassmannElement>> fields;
  for (int a = 0; a < ctx.dim(); ++a) {
    Superfield phi = build_superfield(ctx, a);
    Superfield phidot = time_derivative(ctx, phi);
    fields.emplace_back(SymKey{ctx.phase_space().phi[a], 0}, phi.element);
    fields.emplace_back(SymKey{ctx.phase_space().phi[a], 1}, phidot.element);
  }
  sa.integrand = superfield_of_function(ctx, sa.lagrangian, fields);
  return sa;
}

GrassmannElement cpi_component_lagrangian(const SuperAction& sa) {
  const SuperspaceContext& ctx = *sa.ctx;
  GrassmannElement reduced = berezin_integrate(
      sa.integrand, {ctx.theta(), ctx.thetabar()});
  return ScalarExpr::imaginary() * reduced;
}

GrassmannElement normalize_by_parts(const SuperspaceContext& ctx,
                                    GrassmannElement e) {
  for (int round = 0; round < 64; ++round) {
    bool changed = false;

    // lambdadot in scalar coefficients: e = B + A*ldot  ->  B - lambda*dA/dt
    for (int a = 0; a < ctx.dim(); ++a) {
      SymKey ldot{ctx.lambda_name(a), 1};
      GrassmannElement A(ctx.gens());
      for (const auto& [s, c] : e.terms()) A.add_term(s, c.derivative(ldot));
      if (A.is_zero()) continue;
      GrassmannElement B = e - ScalarExpr::symbol(ldot) * A;
      e = B - ScalarExpr::symbol(ctx.lambda_name(a)) * ctx.time_derivative(A);
      changed = true;
    }

    // cbardot generators: e = B + cbardot*A  ->  B - cbar*dA/dt
    for (int a = 0; a < ctx.dim(); ++a) {
      int gd = ctx.cbardot(a);
      GrassmannElement A = e.left_derivative(gd);
      if (A.is_zero()) continue;
      GrassmannElement B = e - gmul(ctx.gen(gd), A);
      e = B - gmul(ctx.gen(ctx.cbar(a)), ctx.time_derivative(A));
      changed = true;
    }

    if (!changed) return e;
  }
  throw Error("integration by parts did not terminate");
}

ScalarExpr quantize(const SuperAction& sa, const std::string& divisor_name) {
  const SuperspaceContext& ctx = *sa.ctx;
  GrassmannElement multiplier =
      gmul(ctx.gen(ctx.thetabar()), ctx.gen(ctx.theta()));
  GrassmannElement reduced = berezin_integrate(
      gmul(multiplier, sa.integrand), {ctx.theta(), ctx.thetabar()});
  if (!reduced.is_scalar())
    throw Error("quantize: ghost sector did not cancel");
  ScalarExpr body = reduced.body();
  for (int a = 0; a < ctx.dim(); ++a)
    if (body.contains_symbol(ctx.lambda_name(a)))
      throw Error("quantize: multiplier sector did not cancel");
  return ScalarExpr::imaginary() * body / ScalarExpr::symbol(divisor_name);
}

SupportResult support_analysis(const SuperspaceContext& ctx,
                               const GrassmannElement& delta_arg,
                               const std::string& eps_name) {
  ScalarExpr alpha = delta_arg.body();
  ScalarExpr beta =
      delta_arg.coefficient({ctx.theta(), ctx.thetabar()});
  for (const auto& [s, c] : delta_arg.terms())
    if (!s.empty() && s != std::vector<int>{ctx.theta(), ctx.thetabar()})
      throw ConstructionError(
          "support_analysis: element is not a function of theta thetabar");
  if (beta.is_zero())
    throw ConstructionError("support_analysis: no body-level root");
  SupportResult r;
  r.root = -alpha / beta;
  r.limit = r.root.substitute({{SymKey{eps_name, 0}, ScalarExpr()}});
  return r;
}

LargeActionResult large_action_insert(const SuperAction& sa,
                                      const ScalarExpr& divisor,
                                      const std::string& divisor_name) {
  const SuperspaceContext& ctx = *sa.ctx;
  if (divisor.is_zero())
    throw ConstructionError("large_action_insert: zero-body divisor");
  GrassmannElement regularized =
      ctx.scalar(ScalarExpr::symbol("eps")) +
      gmul(ctx.gen(ctx.theta()), ctx.gen(ctx.thetabar()));
  GrassmannElement inverse = invert_even(regularized);
  LargeActionResult r;
  r.insertion = expand_even_function(EvenFunction::delta(), inverse);
  r.support = support_analysis(ctx, inverse);
  // The insertion is supported at theta thetabar = eps -> 0, the same
  // projection the quantization multiplier performs; the reduced exponent
  // is the quantize reduction with the large divisor in place of hbar.
  r.exponent = quantize(sa, divisor_name);
  return r;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::sign_flip: return "sign-flip";
    case Verdict::formal_divergence: return "formal-divergence";
    case Verdict::mismatch: return "mismatch";
  }
  return "?";
}

bool ReductionReport::has_mismatch() const {
  for (const auto& v : verdicts)
    if (v.verdict == Verdict::mismatch) return true;
  return false;
}

const IdentityVerdict* ReductionReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

std::string ReductionReport::to_text() const {
  std::ostringstream os;
  os << "conventions:\n";
  for (const std::string* s :
       {&conventions.measure, &conventions.multiplier, &conventions.phase,
        &conventions.ordering, &conventions.normalization})
    os << "  - " << *s << "\n";
  os << "component lagrangian: " << component_lagrangian << "\n";
  os << "quantized exponent:   " << quantized_exponent << "\n";
  os << "large-action exponent: " << large_action_exponent << "\n";
  os << "identities:\n";
  for (const auto& v : verdicts) {
    os << "  [" << verdict_str(v.verdict) << "] " << v.name << " (" << v.anchor
       << ")\n";
    os << "      claim:  " << v.claim << "\n";
    os << "      engine: " << v.engine_result << "\n";
  }
  return os.str();
}

ScalarExpr swap_symbols(const ScalarExpr& e, const std::string& a,
                        const std::string& b) {
  const char* tmp = "__swap_tmp__";
  ScalarExpr r = e.substitute({{SymKey{a, 0}, ScalarExpr::symbol(tmp)}});
  r = r.substitute({{SymKey{b, 0}, ScalarExpr::symbol(a)}});
  return r.substitute({{SymKey{tmp, 0}, ScalarExpr::symbol(b)}});
}

ReductionReport equivalence_check(const SuperspaceContext& ctx,
                                  const ScalarExpr& lagrangian) {
  ReductionReport rep;
  SuperAction sa = make_super_action(ctx, lagrangian);
  const int th = ctx.theta(), tb = ctx.thetabar();
  auto one = ctx.scalar(ScalarExpr::integer(1));
  GrassmannElement theta = ctx.gen(th), thetabar = ctx.gen(tb);
  GrassmannElement theta_thetabar = gmul(theta, thetabar);

  auto push = [&rep](std::string name, std::string anchor, std::string claim,
                     std::string engine, Verdict v) {
    rep.verdicts.push_back({std::move(name), std::move(anchor),
                            std::move(claim), std::move(engine), v});
  };

  // normalization of the Berezin measure against the Grassmann deltas
  {
    GrassmannElement val = berezin_integrate(
        gmul(grassmann_delta(ctx.gens(), tb), grassmann_delta(ctx.gens(), th)),
        {th, tb});
    push("berezin-normalization", "sec. 2",
         "int dtheta dthetabar delta(thetabar) delta(theta) = 1", val.str(),
         val == one ? Verdict::match : Verdict::mismatch);
  }

  // theta thetabar vs delta(thetabar) delta(theta)
  {
    GrassmannElement deltas =
        gmul(grassmann_delta(ctx.gens(), tb), grassmann_delta(ctx.gens(), th));
    Verdict v = deltas == theta_thetabar          ? Verdict::match
                : deltas == -theta_thetabar       ? Verdict::sign_flip
                                                  : Verdict::mismatch;
    push("multiplier-vs-deltas", "sec. 2",
         "theta*thetabar is equivalent to delta(thetabar)delta(theta)",
         "delta(thetabar)delta(theta) = " + deltas.str() +
             " = -(theta thetabar)",
         v);
  }

  // the two delta orderings used in sec. 2 and sec. 3
  {
    GrassmannElement d23 =
        gmul(grassmann_delta(ctx.gens(), th), grassmann_delta(ctx.gens(), tb));
    GrassmannElement d2 =
        gmul(grassmann_delta(ctx.gens(), tb), grassmann_delta(ctx.gens(), th));
    push("delta-ordering", "sec. 2 vs sec. 3",
         "delta(thetabar)delta(theta) and delta(theta)delta(thetabar) are "
         "used interchangeably",
         "relative sign: " + std::string(d23 == -d2 ? "-1" : "+1"),
         d23 == -d2 ? Verdict::sign_flip : Verdict::match);
  }

  // the delta chain delta(theta thetabar) = ... = theta thetabar
  {
    GrassmannElement lhs =
        expand_even_function(EvenFunction::delta(), theta_thetabar);
    GrassmannElement step =
        gmul(grassmann_delta(ctx.gens(), th), lhs.left_derivative(th));
    GrassmannElement middle =
        gmul(grassmann_delta(ctx.gens(), th), thetabar);
    bool middle_ok = middle == theta_thetabar;
    Verdict v = lhs == theta_thetabar ? Verdict::match
                                      : Verdict::formal_divergence;
    push("delta-chain", "sec. 3",
         "delta(theta thetabar) = delta(theta) d/dtheta delta(theta thetabar)"
         " = delta(theta) thetabar = theta thetabar",
         "delta(theta thetabar) expands to " + lhs.str() +
             "; replayed middle step gives " + step.str() +
             "; delta(theta)thetabar = theta thetabar holds: " +
             (middle_ok ? "yes" : "no") +
             "; first and last members differ by the formal tokens delta(0), "
             "delta'(0)",
         v);
  }

  // inversion of eps + theta thetabar
  {
    ScalarExpr eps = ScalarExpr::symbol("eps");
    GrassmannElement x = ctx.scalar(eps) + theta_thetabar;
    GrassmannElement inv = invert_even(x);
    GrassmannElement expected =
        ctx.scalar(ScalarExpr::integer(1) / eps) -
        (ScalarExpr::integer(1) / (eps * eps)) * theta_thetabar;
    bool product_ok = gmul(x, inv) == one;
    push("even-inverse", "sec. 3",
         "the inverse of eps + theta thetabar is (1/eps)(1 - theta "
         "thetabar/eps)",
         inv.str() + "; product check: " + (product_ok ? "1" : "not 1"),
         (inv == expected && product_ok) ? Verdict::match : Verdict::mismatch);
  }

  // the large-action insertion and its support
  ScalarExpr large_exp, quant_exp;
  {
    LargeActionResult lar =
        large_action_insert(sa, ScalarExpr::symbol("B"), "B");
    ScalarExpr eps = ScalarExpr::symbol("eps");
    GrassmannElement expected =
        ctx.scalar(ScalarExpr::delta(0, ScalarExpr::integer(1) / eps)) -
        (ScalarExpr::delta(1, ScalarExpr::integer(1) / eps) / (eps * eps)) *
            theta_thetabar;
    push("insertion-expansion", "eq. (3), sec. 3",
         "insert delta[(1/eps)(1 - theta thetabar/eps)] = delta(1/eps) - "
         "delta'(1/eps) theta thetabar / eps^2",
         lar.insertion.str(),
         lar.insertion == expected ? Verdict::match : Verdict::mismatch);

    bool support_ok = lar.support.root == eps && lar.support.limit.is_zero();
    push("support-point", "sec. 3",
         "the delta has its zero at theta thetabar = eps, so eps->0 forces "
         "theta thetabar = 0",
         "root = " + lar.support.root.str() +
             ", eps->0 limit = " + lar.support.limit.str(),
         support_ok ? Verdict::match : Verdict::mismatch);
    large_exp = lar.exponent;
  }

  // the quantized exponent and the divisor swap
  {
    quant_exp = quantize(sa);
    ScalarExpr expected = ScalarExpr::imaginary() * sa.lagrangian /
                          ScalarExpr::symbol("hbar");
    push("quantized-exponent", "eq. (3)",
         "the reduced exponent is (i/hbar) int dt L(phi), ghost-free",
         quant_exp.str(),
         quant_exp == expected ? Verdict::match : Verdict::mismatch);

    bool same = swap_symbols(quant_exp, "hbar", "B") == large_exp &&
                swap_symbols(large_exp, "B", "hbar") == quant_exp;
    push("large-action-exponent", "sec. 3",
         "for large actions the distribution is the same as for small "
         "values, with hbar replaced by the large divisor",
         large_exp.str(), same ? Verdict::match : Verdict::mismatch);
  }

  // the component CPI Lagrangian differs from both reduced exponents
  {
    GrassmannElement comp =
        normalize_by_parts(ctx, cpi_component_lagrangian(sa));
    rep.component_lagrangian = comp.str();
    rep.quantized_exponent = quant_exp.str();
    rep.large_action_exponent = large_exp.str();
    bool degenerate = sa.lagrangian.is_zero();
    bool differs = !(comp.is_scalar() && comp.body() == quant_exp);
    push("cpi-vs-reduced", "sec. 3",
         "the projected distribution is not the one of classical mechanics",
         degenerate
             ? "degenerate-equal: all three exponents vanish"
             : std::string("component Lagrangian carries ghost and "
                           "multiplier sectors absent from both reduced "
                           "exponents: ") +
                   (differs ? "yes" : "no"),
         (degenerate || differs) ? Verdict::match : Verdict::mismatch);
  }

  return rep;
}

}  // namespace sslab
