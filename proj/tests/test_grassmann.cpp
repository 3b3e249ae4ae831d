#include <doctest.h>

#include <random>

#include "sslab/grassmann.hpp"
#include "test_util.hpp"

using namespace sslab;

namespace {

GeneratorSetPtr four_gens() {
  return std::make_shared<GeneratorSet>(
      std::vector<std::string>{"theta", "thetabar", "c", "cbar"});
}

GrassmannElement random_element(std::mt19937& rng, const GeneratorSetPtr& g,
                                const std::vector<std::string>& syms) {
  std::uniform_int_distribution<int> coin(0, 2);
  GrassmannElement e(g);
  int n = g->size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (coin(rng) != 0) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(i);
    e.add_term(subset, testutil::random_poly(rng, syms, 2));
  }
  return e;
}

}  // namespace

TEST_CASE("generator products and nilpotency") {
  auto g = four_gens();
  GrassmannElement theta = GrassmannElement::generator(g, 0);
  GrassmannElement thetabar = GrassmannElement::generator(g, 1);
  GrassmannElement one = GrassmannElement::scalar(g, ScalarExpr::integer(1));

  CHECK((theta * theta).is_zero());
  CHECK(theta * thetabar == -(thetabar * theta));

  GrassmannElement prod = (one + theta) * (one + thetabar);
  GrassmannElement expected = one + theta + thetabar + theta * thetabar;
  CHECK(prod == expected);

  // canonical ordering carries the sign
  GrassmannElement tt = thetabar * theta;
  CHECK(tt.coefficient({0, 1}) == ScalarExpr::integer(-1));
}

TEST_CASE("product is associative and graded-commutative at random") {
  std::mt19937 rng(2024);
  auto g = four_gens();
  std::vector<std::string> syms = {"a", "b"};
  for (int iter = 0; iter < 80; ++iter) {
    GrassmannElement x = random_element(rng, g, syms);
    GrassmannElement y = random_element(rng, g, syms);
    GrassmannElement z = random_element(rng, g, syms);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
  // graded commutation on homogeneous monomials
  for (int mi = 0; mi < (1 << 4); ++mi) {
    for (int mj = 0; mj < (1 << 4); ++mj) {
      std::vector<int> si, sj;
      for (int k = 0; k < 4; ++k) {
        if (mi & (1 << k)) si.push_back(k);
        if (mj & (1 << k)) sj.push_back(k);
      }
      GrassmannElement a(g), b(g);
      a.add_term(si, ScalarExpr::integer(1));
      b.add_term(sj, ScalarExpr::integer(1));
      int sign = (si.size() * sj.size()) % 2 == 0 ? 1 : -1;
      CHECK(a * b == (sign == 1 ? b * a : -(b * a)));
    }
  }
}

TEST_CASE("left derivative and Berezin integration") {
  auto g = four_gens();
  GrassmannElement theta = GrassmannElement::generator(g, 0);
  GrassmannElement thetabar = GrassmannElement::generator(g, 1);
  GrassmannElement one = GrassmannElement::scalar(g, ScalarExpr::integer(1));

  CHECK(theta.left_derivative(0) == one);
  CHECK((theta * thetabar).left_derivative(0) == thetabar);
  CHECK((theta * thetabar).left_derivative(1) == -theta);

  // the innermost differential acts first
  CHECK(berezin_integrate(thetabar * theta, {0, 1}) == one);
  CHECK(berezin_integrate(theta * thetabar, {0, 1}) == -one);
  CHECK(berezin_integrate(one, {0, 1}).is_zero());
  CHECK(berezin_integrate(theta, {0, 1}).is_zero());
  CHECK_THROWS_AS(berezin_integrate(theta, {0, 0}), ConstructionError);

  // delta(g) = g, and the double delta integrates to one
  GrassmannElement dd = grassmann_delta(g, 1) * grassmann_delta(g, 0);
  CHECK(berezin_integrate(dd, {0, 1}) == one);
}

TEST_CASE("Berezin integral is linear and kills derivatives") {
  std::mt19937 rng(5150);
  auto g = four_gens();
  std::vector<std::string> syms = {"a", "b"};
  for (int iter = 0; iter < 60; ++iter) {
    GrassmannElement x = random_element(rng, g, syms);
    GrassmannElement y = random_element(rng, g, syms);
    CHECK(berezin_integrate(x + y, {0, 1}) ==
          berezin_integrate(x, {0, 1}) + berezin_integrate(y, {0, 1}));
    // integral of a derivative with respect to an integrated var vanishes
    CHECK(berezin_integrate(x.left_derivative(1), {1}).is_zero());
  }
}

TEST_CASE("even inversion") {
  auto g = four_gens();
  GrassmannElement theta = GrassmannElement::generator(g, 0);
  GrassmannElement thetabar = GrassmannElement::generator(g, 1);
  auto sc = [&](int k) {
    return GrassmannElement::scalar(g, ScalarExpr::integer(k));
  };

  GrassmannElement x = sc(2) + sc(3) * theta * thetabar;
  GrassmannElement inv = invert_even(x);
  GrassmannElement expected =
      GrassmannElement::scalar(g, ScalarExpr::rational(Rational(1, 2))) +
      GrassmannElement::scalar(g, ScalarExpr::rational(Rational(-3, 4))) *
          theta * thetabar;
  CHECK(inv == expected);
  CHECK(x * inv == sc(1));

  // symbolic body
  ScalarExpr eps = ScalarExpr::symbol("eps");
  GrassmannElement y =
      GrassmannElement::scalar(g, eps) + theta * thetabar;
  GrassmannElement yinv = invert_even(y);
  CHECK(y * yinv == sc(1));
  CHECK(yinv.body() == ScalarExpr::integer(1) / eps);
  CHECK(yinv.coefficient({0, 1}) ==
        -(ScalarExpr::integer(1) / (eps * eps)));

  CHECK_THROWS_AS(invert_even(theta * thetabar), ConstructionError);
  CHECK_THROWS_AS(invert_even(theta), ConstructionError);
}

TEST_CASE("even inversion round-trips on random even elements") {
  std::mt19937 rng(31337);
  auto g = four_gens();
  std::vector<std::string> syms = {"a", "b"};
  int done = 0;
  while (done < 40) {
    GrassmannElement e = random_element(rng, g, syms);
    // keep the even part and force an invertible body
    GrassmannElement even(g);
    for (const auto& [subset, c] : e.terms())
      if (subset.size() % 2 == 0 && !subset.empty()) even.add_term(subset, c);
    even += GrassmannElement::scalar(
        g, testutil::random_poly(rng, syms, 2) + ScalarExpr::symbol("u"));
    if (even.body().is_zero()) continue;
    GrassmannElement inv = invert_even(even);
    CHECK(even * inv ==
          GrassmannElement::scalar(g, ScalarExpr::integer(1)));
    ++done;
  }
}

TEST_CASE("even functions of nilpotent arguments") {
  auto g = four_gens();
  GrassmannElement theta = GrassmannElement::generator(g, 0);
  GrassmannElement thetabar = GrassmannElement::generator(g, 1);
  GrassmannElement one = GrassmannElement::scalar(g, ScalarExpr::integer(1));
  GrassmannElement s = theta * thetabar;

  CHECK(expand_even_function(EvenFunction::exponential(), s) == one + s);

  // exp(a + s) = exp(a)(1 + s) via the formal tower
  ScalarExpr a = ScalarExpr::symbol("a");
  GrassmannElement shifted =
      GrassmannElement::scalar(g, a) + s;
  GrassmannElement ex = expand_even_function(EvenFunction::formal("f"), shifted);
  CHECK(ex.body() == ScalarExpr::func("f", {a}));
  CHECK(ex.coefficient({0, 1}) == ScalarExpr::func("f", {a}, {1}));

  // delta of the inverted element
  ScalarExpr eps = ScalarExpr::symbol("eps");
  GrassmannElement arg = invert_even(
      GrassmannElement::scalar(g, eps) + s);
  GrassmannElement d = expand_even_function(EvenFunction::delta(), arg);
  ScalarExpr inv_eps = ScalarExpr::integer(1) / eps;
  CHECK(d.body() == ScalarExpr::delta(0, inv_eps));
  CHECK(d.coefficient({0, 1}) ==
        -(ScalarExpr::delta(1, inv_eps) / (eps * eps)));

  // polynomial expansion matches direct algebra
  ScalarExpr x = ScalarExpr::symbol("x");
  EvenFunction sq = EvenFunction::of_expression(x * x, SymKey{"x", 0});
  GrassmannElement two_plus_s =
      GrassmannElement::scalar(g, ScalarExpr::integer(2)) + s;
  CHECK(expand_even_function(sq, two_plus_s) == two_plus_s * two_plus_s);
}

TEST_CASE("text form is stable") {
  auto g = four_gens();
  GrassmannElement theta = GrassmannElement::generator(g, 0);
  GrassmannElement thetabar = GrassmannElement::generator(g, 1);
  GrassmannElement one = GrassmannElement::scalar(g, ScalarExpr::integer(1));
  GrassmannElement e = one + thetabar * theta;
  CHECK(e.str() == "(1) + (-1) theta thetabar");
  CHECK(GrassmannElement(g).str() == "0");
}
