#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sslab/number.hpp"

namespace sslab {

/// A symbol occurrence: base name plus number of time-derivative dots
/// ("q" with dots=1 is qdot).
struct SymKey {
  std::string name;
  int dots = 0;

  friend bool operator<(const SymKey& a, const SymKey& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.dots < b.dots;
  }
  friend bool operator==(const SymKey& a, const SymKey& b) {
    return a.name == b.name && a.dots == b.dots;
  }
  std::string str() const;
};

struct Atom;
using AtomPtr = std::shared_ptr<const Atom>;

int atom_cmp(const Atom& a, const Atom& b);

/// Power product of atoms, factors sorted ascending by atom order.
struct Monomial {
  std::vector<std::pair<AtomPtr, int>> factors;

  bool empty() const { return factors.empty(); }
};

/// Lexicographic monomial order (largest atom most significant); total and
/// multiplicative, so leading terms behave under polynomial division.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Poly = std::map<Monomial, GaussRat, MonoLess>;

class ScalarExpr;
int expr_cmp(const ScalarExpr& a, const ScalarExpr& b);

/// Commuting symbolic expression. Always held in canonical form: a single
/// gcd-reduced numerator/denominator pair of expanded polynomials over
/// interned atoms, denominator monic under the global monomial order.
class ScalarExpr {
 public:
  ScalarExpr();  // zero
  static ScalarExpr rational(Rational r);
  static ScalarExpr coeff(GaussRat c);
  static ScalarExpr integer(long n);
  static ScalarExpr imaginary();
  static ScalarExpr symbol(const std::string& name, int dots = 0);
  static ScalarExpr symbol(const SymKey& k);
  /// Formal function application; deriv holds the partial-derivative count
  /// per argument slot (empty means no derivatives).
  static ScalarExpr func(const std::string& name, std::vector<ScalarExpr> args,
                         std::vector<int> deriv = {});
  /// Formal distribution node delta^(order)(arg). The argument may not
  /// itself contain a delta node.
  static ScalarExpr delta(int order, const ScalarExpr& arg);
  static ScalarExpr from_fraction(Poly num, Poly den);

  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;  // no atoms at all
  GaussRat constant_value() const;

  ScalarExpr operator-() const;
  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
  ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
  ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
  ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
  ScalarExpr& operator/=(const ScalarExpr& o) { return *this = *this / o; }
  friend ScalarExpr pow(const ScalarExpr& e, long n);

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return expr_cmp(a, b) == 0;
  }
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) {
    return expr_cmp(a, b) != 0;
  }

  /// Partial derivative with respect to the symbol (name, dots). Formal
  /// functions chain into derivative nodes; delta^(n)(u) into
  /// delta^(n+1)(u) * du/ds.
  ScalarExpr derivative(const SymKey& s) const;
  ScalarExpr derivative(const std::string& name, int dots = 0) const;

  /// Simultaneous substitution; bindings must be acyclic.
  ScalarExpr substitute(const std::map<SymKey, ScalarExpr>& bindings) const;

  /// Exact evaluation at a rational point. Requires no formal function or
  /// delta nodes; every symbol must be bound.
  GaussRat eval(const std::map<SymKey, GaussRat>& point) const;
  Rational eval_rational(const std::map<SymKey, Rational>& point) const;

  /// All symbol occurrences, including inside formal-function arguments.
  std::set<SymKey> symbols() const;
  bool contains_symbol(const std::string& name) const;
  bool has_delta() const;
  bool has_func() const;

  std::string str() const;

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

 private:
  ScalarExpr(Poly num, Poly den, bool normalized);
  Poly num_, den_;
};

/// Atom: an indivisible multiplicand of the polynomial layer.
struct Atom {
  enum class Kind { symbol, func, delta };
  Kind kind = Kind::symbol;

  SymKey sym;  // Kind::symbol

  std::string func_name;   // Kind::func
  std::vector<int> deriv;  // per-argument derivative counts
  std::vector<ScalarExpr> args;

  int delta_order = 0;  // Kind::delta, argument in args[0]

  std::string str() const;
};

// -- polynomial layer (exposed for the dimension checker and tests) --

Poly poly_zero();
Poly poly_const(const GaussRat& c);
Poly poly_atom(AtomPtr a);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_divexact(const Poly& a, const Poly& b);
bool poly_is_zero(const Poly& p);
std::string poly_str(const Poly& p);

AtomPtr make_symbol_atom(const SymKey& k);

}  // namespace sslab
