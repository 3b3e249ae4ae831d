#include <doctest.h>

#include <random>

#include "sslab/reduction.hpp"
#include "test_util.hpp"

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

  ScalarExpr q = ScalarExpr::symbol("q");
  ScalarExpr p = ScalarExpr::symbol("p");
  ScalarExpr qdot = ScalarExpr::symbol("q", 1);
  ScalarExpr pdot = ScalarExpr::symbol("p", 1);
  ScalarExpr m = ScalarExpr::symbol("m");
  ScalarExpr omega0 = ScalarExpr::symbol("omega0");
  ScalarExpr i = ScalarExpr::imaginary();

  ScalarExpr free_h() const { return p * p / (ScalarExpr::integer(2) * m); }
  ScalarExpr harmonic_h() const {
    return free_h() +
           m * omega0 * omega0 * q * q / ScalarExpr::integer(2);
  }
};

}  // namespace

TEST_CASE("phase-space Lagrangian") {
  Fixture f;
  ScalarExpr L = phase_space_lagrangian(f.ctx, f.free_h());
  ScalarExpr expected = (f.p * f.qdot - f.q * f.pdot) / ScalarExpr::integer(2) -
                        f.free_h();
  CHECK(L == expected);
}

TEST_CASE("component Lagrangian: multiplier sector") {
  Fixture f;
  const auto& ctx = f.ctx;
  ScalarExpr lq = ScalarExpr::symbol("lambda_q");
  ScalarExpr lp = ScalarExpr::symbol("lambda_p");

  SUBCASE("vanishing Hamiltonian") {
    SuperAction sa =
        make_super_action(ctx, phase_space_lagrangian(ctx, ScalarExpr()));
    GrassmannElement comp = normalize_by_parts(ctx, cpi_component_lagrangian(sa));
    CHECK(comp.body() == lq * f.qdot + lp * f.pdot);
  }

  SUBCASE("free particle") {
    SuperAction sa =
        make_super_action(ctx, phase_space_lagrangian(ctx, f.free_h()));
    GrassmannElement comp = normalize_by_parts(ctx, cpi_component_lagrangian(sa));
    CHECK(comp.body() == lq * (f.qdot - f.p / f.m) + lp * f.pdot);
  }

  SUBCASE("harmonic oscillator") {
    SuperAction sa =
        make_super_action(ctx, phase_space_lagrangian(ctx, f.harmonic_h()));
    GrassmannElement comp = normalize_by_parts(ctx, cpi_component_lagrangian(sa));
    CHECK(comp.body() ==
          lq * (f.qdot - f.p / f.m) +
              lp * (f.pdot + f.m * f.omega0 * f.omega0 * f.q));
  }

  SUBCASE("formal Hamiltonian") {
    ScalarExpr H = ScalarExpr::func("H", {f.q, f.p});
    SuperAction sa = make_super_action(ctx, phase_space_lagrangian(ctx, H));
    GrassmannElement comp = normalize_by_parts(ctx, cpi_component_lagrangian(sa));
    ScalarExpr Hq = ScalarExpr::func("H", {f.q, f.p}, {1, 0});
    ScalarExpr Hp = ScalarExpr::func("H", {f.q, f.p}, {0, 1});
    CHECK(comp.body() == lq * (f.qdot - Hp) + lp * (f.pdot + Hq));
  }
}

TEST_CASE("component Lagrangian: ghost sector") {
  Fixture f;
  const auto& ctx = f.ctx;
  ScalarExpr H = ScalarExpr::func("H", {f.q, f.p});
  SuperAction sa = make_super_action(ctx, phase_space_lagrangian(ctx, H));
  GrassmannElement comp = normalize_by_parts(ctx, cpi_component_lagrangian(sa));
  INFO(comp.str());

  ScalarExpr Hqq = ScalarExpr::func("H", {f.q, f.p}, {2, 0});
  ScalarExpr Hqp = ScalarExpr::func("H", {f.q, f.p}, {1, 1});
  ScalarExpr Hpp = ScalarExpr::func("H", {f.q, f.p}, {0, 2});

  // i cbar_a cdot^a kinetic terms
  CHECK(comp.coefficient({ctx.cbar(0), ctx.cdot(0)}) == f.i);
  CHECK(comp.coefficient({ctx.cbar(1), ctx.cdot(1)}) == f.i);
  // Hessian couplings in canonical (c before cbar) order
  CHECK(comp.coefficient({ctx.c(0), ctx.cbar(0)}) == f.i * Hqp);
  CHECK(comp.coefficient({ctx.c(1), ctx.cbar(0)}) == f.i * Hpp);
  CHECK(comp.coefficient({ctx.c(0), ctx.cbar(1)}) == -f.i * Hqq);
  CHECK(comp.coefficient({ctx.c(1), ctx.cbar(1)}) == -f.i * Hqp);
  // nothing with cbardot survives, and no other ghost couplings appear
  for (int a = 0; a < ctx.dim(); ++a)
    CHECK_FALSE(comp.contains_generator(ctx.cbardot(a)));

  SUBCASE("harmonic oscillator specializes the Hessian") {
    SuperAction sah =
        make_super_action(ctx, phase_space_lagrangian(ctx, f.harmonic_h()));
    GrassmannElement ch = normalize_by_parts(ctx, cpi_component_lagrangian(sah));
    CHECK(ch.coefficient({ctx.cbar(0), ctx.cdot(0)}) == f.i);
    CHECK(ch.coefficient({ctx.cbar(1), ctx.cdot(1)}) == f.i);
    CHECK(ch.coefficient({ctx.c(1), ctx.cbar(0)}) == f.i / f.m);
    CHECK(ch.coefficient({ctx.c(0), ctx.cbar(1)}) ==
          -f.i * f.m * f.omega0 * f.omega0);
    CHECK(ch.coefficient({ctx.c(0), ctx.cbar(0)}).is_zero());
    CHECK(ch.coefficient({ctx.c(1), ctx.cbar(1)}).is_zero());
  }
}

TEST_CASE("normalize_by_parts is idempotent") {
  Fixture f;
  SuperAction sa =
      make_super_action(f.ctx, phase_space_lagrangian(f.ctx, f.harmonic_h()));
  GrassmannElement once = normalize_by_parts(f.ctx, cpi_component_lagrangian(sa));
  CHECK(normalize_by_parts(f.ctx, once) == once);
}

TEST_CASE("quantization collapses ghosts and multipliers") {
  Fixture f;
  ScalarExpr L = phase_space_lagrangian(f.ctx, f.harmonic_h());
  SuperAction sa = make_super_action(f.ctx, L);
  ScalarExpr exponent = quantize(sa);
  CHECK(exponent == f.i * L / ScalarExpr::symbol("hbar"));
  CHECK_FALSE(exponent.contains_symbol("lambda_q"));
  CHECK_FALSE(exponent.contains_symbol("lambda_p"));

  ScalarExpr with_b = quantize(sa, "B");
  CHECK(with_b == f.i * L / ScalarExpr::symbol("B"));
  CHECK(swap_symbols(exponent, "hbar", "B") == with_b);
}

TEST_CASE("quantization works for random polynomial Lagrangians") {
  Fixture f;
  std::mt19937 rng(424242);
  std::vector<std::string> syms = {"q", "p", "m"};
  for (int iter = 0; iter < 30; ++iter) {
    ScalarExpr L = testutil::random_poly(rng, syms, 3) +
                   testutil::random_poly(rng, syms, 2) * f.qdot;
    SuperAction sa = make_super_action(f.ctx, L);
    CHECK(quantize(sa) == f.i * L / ScalarExpr::symbol("hbar"));
  }
}

TEST_CASE("support analysis of the regularized inverse") {
  Fixture f;
  const auto& ctx = f.ctx;
  ScalarExpr eps = ScalarExpr::symbol("eps");
  GrassmannElement s = gmul(ctx.gen(ctx.theta()), ctx.gen(ctx.thetabar()));
  GrassmannElement inv = invert_even(ctx.scalar(eps) + s);

  SupportResult r = support_analysis(ctx, inv);
  CHECK(r.root == eps);
  CHECK(r.limit.is_zero());

  CHECK_THROWS_AS(support_analysis(ctx, ctx.scalar(eps)), ConstructionError);
  CHECK_THROWS_AS(support_analysis(ctx, ctx.gen(ctx.theta()) + s),
                  ConstructionError);
}

TEST_CASE("large-action insertion") {
  Fixture f;
  ScalarExpr L = phase_space_lagrangian(f.ctx, f.free_h());
  SuperAction sa = make_super_action(f.ctx, L);
  LargeActionResult r =
      large_action_insert(sa, ScalarExpr::symbol("B"), "B");

  ScalarExpr eps = ScalarExpr::symbol("eps");
  ScalarExpr inv_eps = ScalarExpr::integer(1) / eps;
  CHECK(r.insertion.body() == ScalarExpr::delta(0, inv_eps));
  CHECK(r.insertion.coefficient({f.ctx.theta(), f.ctx.thetabar()}) ==
        -(ScalarExpr::delta(1, inv_eps) / (eps * eps)));
  CHECK(r.support.limit.is_zero());
  CHECK(r.exponent == f.i * L / ScalarExpr::symbol("B"));
  CHECK_THROWS_AS(large_action_insert(sa, ScalarExpr(), "B"),
                  ConstructionError);
}

TEST_CASE("equivalence check replays every identity") {
  Fixture f;
  ReductionReport rep =
      equivalence_check(f.ctx, phase_space_lagrangian(f.ctx, f.harmonic_h()));

  CHECK_FALSE(rep.has_mismatch());
  auto verdict_of = [&](const std::string& name) {
    const IdentityVerdict* v = rep.find(name);
    REQUIRE(v != nullptr);
    return v->verdict;
  };
  CHECK(verdict_of("berezin-normalization") == Verdict::match);
  CHECK(verdict_of("multiplier-vs-deltas") == Verdict::sign_flip);
  CHECK(verdict_of("delta-ordering") == Verdict::sign_flip);
  CHECK(verdict_of("delta-chain") == Verdict::formal_divergence);
  CHECK(verdict_of("even-inverse") == Verdict::match);
  CHECK(verdict_of("insertion-expansion") == Verdict::match);
  CHECK(verdict_of("support-point") == Verdict::match);
  CHECK(verdict_of("quantized-exponent") == Verdict::match);
  CHECK(verdict_of("large-action-exponent") == Verdict::match);
  CHECK(verdict_of("cpi-vs-reduced") == Verdict::match);

  std::string text = rep.to_text();
  CHECK(text.find("conventions:") != std::string::npos);
  CHECK(text.find("[sign-flip] multiplier-vs-deltas") != std::string::npos);
  CHECK(text.find("quantized exponent:") != std::string::npos);
}

TEST_CASE("symbol swap") {
  ScalarExpr a = ScalarExpr::symbol("hbar"), b = ScalarExpr::symbol("B");
  ScalarExpr e = a * a / b + b;
  CHECK(swap_symbols(e, "hbar", "B") == b * b / a + a);
  CHECK(swap_symbols(swap_symbols(e, "hbar", "B"), "hbar", "B") == e);
}
