#pragma once

#include <map>
#include <optional>
#include <string>

#include "sslab/grassmann.hpp"
#include "sslab/superspace.hpp"

namespace sslab {

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Rational exponents over the base dimensions mass, length, time.
struct Dimension {
  Rational mass, length, time;

  static Dimension dimensionless() { return {}; }
  static Dimension of(Rational m, Rational l, Rational t) {
    return Dimension{std::move(m), std::move(l), std::move(t)};
  }
  /// M L^2 T^-1
  static Dimension action() { return of(1, 2, -1); }
  static Dimension energy() { return of(1, 2, -2); }

  bool is_dimensionless() const {
    return mass == 0 && length == 0 && time == 0;
  }

  friend Dimension operator+(const Dimension& a, const Dimension& b) {
    return {a.mass + b.mass, a.length + b.length, a.time + b.time};
  }
  friend Dimension operator-(const Dimension& a, const Dimension& b) {
    return {a.mass - b.mass, a.length - b.length, a.time - b.time};
  }
  Dimension operator-() const { return {-mass, -length, -time}; }
  friend Dimension operator*(const Rational& k, const Dimension& d) {
    return {k * d.mass, k * d.length, k * d.time};
  }
  friend bool operator==(const Dimension& a, const Dimension& b) {
    return a.mass == b.mass && a.length == b.length && a.time == b.time;
  }
  friend bool operator!=(const Dimension& a, const Dimension& b) {
    return !(a == b);
  }

  std::string str() const;
};

/// Map from symbol / generator / measure-token names to dimensions. The
/// measure tokens are "dt", "dtheta", "dthetabar". Only the product
/// dim(theta)*dim(thetabar) = action is constrained; the per-generator
/// split is a representational choice recorded at construction.
class DimensionAssignment {
 public:
  /// Defaults: t, dt, hbar, B, eps, theta/thetabar (given split),
  /// dtheta/dthetabar as the inverses of the generators.
  /// theta_share is the fraction of the action dimension carried by theta;
  /// 1/2 by default, any value keeps every paper-level check invariant.
  static DimensionAssignment defaults(Rational theta_share = Rational(1, 2));

  void set(const std::string& name, Dimension d) { dims_[name] = std::move(d); }
  bool has(const std::string& name) const { return dims_.count(name) != 0; }
  const Dimension& get(const std::string& name) const;

  /// Derive ghost, cbar and lambda dimensions from the phase-space variable
  /// dimensions so that every superfield is dimension-homogeneous.
  void extend_for_phase_space(const SuperspaceContext& ctx);

  std::string theta_split_note() const;

 private:
  std::map<std::string, Dimension> dims_;
};

/// Dimension of an expression; throws DimensionError on inhomogeneous sums
/// (naming the two clashing terms) and on unassigned symbols. Symbols with
/// time-derivative dots get dim(base) - dots * T. delta^(n)(u) carries
/// dim(u)^-(n+1).
Dimension infer_dims(const ScalarExpr& e, const DimensionAssignment& assign);
Dimension infer_dims(const GrassmannElement& e,
                     const DimensionAssignment& assign);

/// True iff the expression is dimensionless. extra_measures lists measure
/// tokens (e.g. {"dt","dtheta","dthetabar"}) multiplied into the exponent.
bool check_dimensionless(const ScalarExpr& e, const DimensionAssignment& assign,
                         const std::vector<std::string>& extra_measures = {});
bool check_dimensionless(const GrassmannElement& e,
                         const DimensionAssignment& assign,
                         const std::vector<std::string>& extra_measures = {});

}  // namespace sslab
