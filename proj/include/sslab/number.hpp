#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sslab {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
  explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

struct ConstructionError : Error {
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

struct EvalError : Error {
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

/// Gaussian rational a + b*i; the coefficient field of the symbolic kernel.
/// Keeping i in the coefficients (rather than as a tree node) makes the
/// polynomial ring an honest ring and i^2 = -1 automatic.
struct GaussRat {
  Rational re, im;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long n) : re(n) {}

  static GaussRat imaginary() { return GaussRat(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw DivisionByZeroError();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const;
};

int cmp(const Rational& a, const Rational& b);
int cmp(const GaussRat& a, const GaussRat& b);

std::string rational_str(const Rational& r);

}  // namespace sslab
