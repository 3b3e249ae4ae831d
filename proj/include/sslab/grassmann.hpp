#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sslab/scalar_expr.hpp"

namespace sslab {

/// Ordered set of anticommuting generators. The declaration order is the
/// canonical order used for sign normalization.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::string> names);

  int size() const { return (int)names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

/// Element of the finite exterior algebra: a sum of scalar coefficients
/// attached to strictly ascending generator subsets. Coefficients that
/// canonicalize to zero are never stored.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  explicit GrassmannElement(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

  static GrassmannElement scalar(GeneratorSetPtr gens, ScalarExpr c);
  static GrassmannElement generator(GeneratorSetPtr gens, int idx);

  const GeneratorSetPtr& gens() const { return gens_; }
  const std::map<std::vector<int>, ScalarExpr>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty subset.
  ScalarExpr body() const;
  GrassmannElement soul() const;
  ScalarExpr coefficient(const std::vector<int>& subset) const;
  bool is_even() const;
  bool is_odd() const;
  bool is_scalar() const;  // only the empty subset

  GrassmannElement operator-() const;
  friend GrassmannElement operator+(const GrassmannElement& a,
                                    const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a,
                                    const GrassmannElement& b);
  GrassmannElement& operator+=(const GrassmannElement& o) {
    return *this = *this + o;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    return *this = *this - o;
  }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) {
    return !(a == b);
  }

  /// Left derivative with respect to generator idx.
  GrassmannElement left_derivative(int idx) const;

  bool contains_generator(int idx) const;

  /// Canonical text form "coeff * g1 g2 ..." sorted by subset.
  std::string str() const;

  void add_term(std::vector<int> subset, ScalarExpr c);

 private:
  GeneratorSetPtr gens_;
  std::map<std::vector<int>, ScalarExpr> terms_;
};

/// Bilinear product with signs from transposing generators into canonical
/// order; nilpotent on repeated generators.
GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator*(const GrassmannElement& a,
                           const GrassmannElement& b);
GrassmannElement operator*(const ScalarExpr& c, const GrassmannElement& a);

/// Iterated Berezin integral for the measure written as "d v0 d v1 ...":
/// the innermost differential (the last var) acts first, each action being
/// the left derivative. Repeated vars are rejected.
GrassmannElement berezin_integrate(const GrassmannElement& e,
                                   const std::vector<int>& vars);

/// delta(g) = g.
GrassmannElement grassmann_delta(GeneratorSetPtr gens, int idx);

/// Inverse of an even element with nonzero body, via the terminating
/// geometric series in the nilpotent part.
GrassmannElement invert_even(const GrassmannElement& x);

/// A formal function of one scalar variable, presented through its
/// derivative tower f^(k)(a).
class EvenFunction {
 public:
  static EvenFunction identity();
  static EvenFunction constant(ScalarExpr c);
  static EvenFunction formal(std::string func_name);
  static EvenFunction delta(int order = 0);
  static EvenFunction exponential();
  /// Polynomial f given as an expression in one scalar variable.
  static EvenFunction of_expression(ScalarExpr body, SymKey var);

  ScalarExpr derivative_at(int k, const ScalarExpr& a) const;

 private:
  enum class Kind { identity, constant, formal, delta, exponential, expression };
  Kind kind_ = Kind::identity;
  ScalarExpr const_{};
  std::string name_;
  int delta_order_ = 0;
  ScalarExpr body_{};
  SymKey var_{};
};

/// f(x) for even x = a + n: sum_k f^(k)(a) n^k / k!, exact because the soul
/// n is nilpotent.
GrassmannElement expand_even_function(const EvenFunction& f,
                                      const GrassmannElement& x);

}  // namespace sslab
