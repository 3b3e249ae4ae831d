#include <doctest.h>

#include "sslab/dimension.hpp"
#include "sslab/reduction.hpp"

using namespace sslab;

namespace {

struct Fixture {
  SymbolTable table;
  SuperspaceContext ctx;

  Fixture()
      : table(make_table()), ctx(PhaseSpace::canonical({"q", "p"}), table) {}

  static SymbolTable make_table() {
    SymbolTable t;
    t.declare_var("q");
    t.declare_var("p");
    t.declare_constant("m");
    t.declare_constant("omega0");
    t.declare_function("H", 2);
    return t;
  }

  DimensionAssignment assignment(Rational theta_share = Rational(1, 2)) const {
    DimensionAssignment a = DimensionAssignment::defaults(theta_share);
    a.set("q", Dimension::of(0, 1, 0));
    a.set("p", Dimension::of(1, 1, -1));
    a.set("m", Dimension::of(1, 0, 0));
    a.set("omega0", Dimension::of(0, 0, -1));
    a.set("H", Dimension::energy());
    a.extend_for_phase_space(ctx);
    return a;
  }
};

}  // namespace

TEST_CASE("dimension arithmetic and defaults") {
  Dimension action = Dimension::action();
  CHECK(action == Dimension::of(1, 2, -1));
  CHECK((action - action).is_dimensionless());
  CHECK(Rational(2) * Dimension::of(0, 0, 1) == Dimension::of(0, 0, 2));
  CHECK(Dimension::of(1, 0, 0).str() == "M^1 L^0 T^0");

  DimensionAssignment a = DimensionAssignment::defaults();
  CHECK(a.get("theta") + a.get("thetabar") == action);
  CHECK(a.get("dtheta") + a.get("theta") == Dimension::dimensionless());
  CHECK(a.get("dthetabar") + a.get("thetabar") == Dimension::dimensionless());
  CHECK(a.get("hbar") == action);
  CHECK(a.get("B") == action);
  CHECK(a.get("eps") == action);
  CHECK_THROWS_AS(a.get("no_such_symbol"), DimensionError);
}

TEST_CASE("scalar inference") {
  Fixture f;
  DimensionAssignment a = f.assignment();
  ScalarExpr q = ScalarExpr::symbol("q"), p = ScalarExpr::symbol("p");
  ScalarExpr m = ScalarExpr::symbol("m");

  CHECK(infer_dims(q * p, a) == a.get("q") + a.get("p"));
  CHECK(infer_dims(p * p / m, a) == Dimension::energy());
  CHECK(infer_dims(ScalarExpr::symbol("q", 1), a) ==
        a.get("q") - Dimension::of(0, 0, 1));
  CHECK(infer_dims(ScalarExpr::symbol("q", 2), a) ==
        a.get("q") - Dimension::of(0, 0, 2));
  CHECK(infer_dims(ScalarExpr::integer(7), a).is_dimensionless());
  CHECK(infer_dims(ScalarExpr(), a).is_dimensionless());

  // formal functions and their derivatives
  ScalarExpr H = ScalarExpr::func("H", {q, p});
  CHECK(infer_dims(H, a) == Dimension::energy());
  CHECK(infer_dims(H.derivative("q"), a) ==
        Dimension::energy() - a.get("q"));

  // distributions
  ScalarExpr eps = ScalarExpr::symbol("eps");
  CHECK(infer_dims(ScalarExpr::delta(0, eps), a) == -Dimension::action());
  CHECK(infer_dims(ScalarExpr::delta(1, eps), a) ==
        Rational(-2) * Dimension::action());

  // inhomogeneous sums are named in the error
  try {
    infer_dims(q + p, a);
    CHECK(false);
  } catch (const DimensionError& e) {
    std::string msg = e.what();
    CHECK(msg.find("q") != std::string::npos);
    CHECK(msg.find("p") != std::string::npos);
  }
}

TEST_CASE("superfields are dimension-homogeneous") {
  Fixture f;
  DimensionAssignment a = f.assignment();
  for (int k = 0; k < f.ctx.dim(); ++k) {
    Superfield phi = build_superfield(f.ctx, k);
    CHECK(infer_dims(phi.element, a) ==
          a.get(f.ctx.phase_space().phi[k]));
    Superfield phidot = time_derivative(f.ctx, phi);
    CHECK(infer_dims(phidot.element, a) ==
          a.get(f.ctx.phase_space().phi[k]) - Dimension::of(0, 0, 1));
  }
}

TEST_CASE("the exponents are dimensionless under their measures") {
  Fixture f;
  DimensionAssignment a = f.assignment();
  ScalarExpr q = ScalarExpr::symbol("q"), p = ScalarExpr::symbol("p");
  ScalarExpr m = ScalarExpr::symbol("m");
  ScalarExpr h = p * p / (ScalarExpr::integer(2) * m) +
                 m * ScalarExpr::symbol("omega0") *
                     ScalarExpr::symbol("omega0") * q * q /
                     ScalarExpr::integer(2);
  ScalarExpr L = phase_space_lagrangian(f.ctx, h);
  SuperAction sa = make_super_action(f.ctx, L);

  CHECK(check_dimensionless(quantize(sa), a, {"dt"}));
  CHECK(check_dimensionless(quantize(sa, "B"), a, {"dt"}));
  // the superspace integrand needs no hbar: dtheta dthetabar already
  // carries the inverse action
  CHECK(check_dimensionless(sa.integrand, a, {"dt", "dtheta", "dthetabar"}));
  // the normalized component Lagrangian under dt alone
  GrassmannElement comp =
      normalize_by_parts(f.ctx, cpi_component_lagrangian(sa));
  CHECK(check_dimensionless(comp, a, {"dt"}));
  // dropping the measure breaks it
  CHECK_FALSE(check_dimensionless(quantize(sa), a));
}

TEST_CASE("every check is invariant under the theta split") {
  Fixture f;
  for (Rational share : {Rational(0), Rational(1, 3), Rational(2)}) {
    DimensionAssignment a = f.assignment(share);
    CHECK(a.get("theta") + a.get("thetabar") == Dimension::action());

    ScalarExpr q = ScalarExpr::symbol("q"), p = ScalarExpr::symbol("p");
    ScalarExpr m = ScalarExpr::symbol("m");
    ScalarExpr L =
        phase_space_lagrangian(f.ctx, p * p / (ScalarExpr::integer(2) * m));
    SuperAction sa = make_super_action(f.ctx, L);

    for (int k = 0; k < f.ctx.dim(); ++k)
      CHECK(infer_dims(build_superfield(f.ctx, k).element, a) ==
            a.get(f.ctx.phase_space().phi[k]));
    CHECK(check_dimensionless(quantize(sa), a, {"dt"}));
    CHECK(check_dimensionless(sa.integrand, a, {"dt", "dtheta", "dthetabar"}));
    GrassmannElement comp =
        normalize_by_parts(f.ctx, cpi_component_lagrangian(sa));
    CHECK(check_dimensionless(comp, a, {"dt"}));
  }
  DimensionAssignment a = f.assignment(Rational(1, 3));
  CHECK(a.theta_split_note().find("representational choice") !=
        std::string::npos);
}
