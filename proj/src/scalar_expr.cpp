#include "sslab/scalar_expr.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace sslab {

// ---------------------------------------------------------------- numbers

int cmp(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp(const GaussRat& a, const GaussRat& b) {
  if (int c = cmp(a.re, b.re)) return c;
  return cmp(a.im, b.im);
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string GaussRat::str() const {
  if (im == 0) return rational_str(re);
  std::string imt;
  if (im == 1)
    imt = "i";
  else if (im == -1)
    imt = "-i";
  else
    imt = rational_str(im) + "*i";
  if (re == 0) return imt;
  std::string s = rational_str(re);
  if (im > 0)
    s += "+" + imt;
  else
    s += imt;  // imt already carries the minus
  return "(" + s + ")";
}

std::string SymKey::str() const {
  std::string s = name;
  for (int i = 0; i < dots; ++i) s += "dot";
  return s;
}

// ------------------------------------------------------------------ atoms

int atom_cmp(const Atom& a, const Atom& b) {
  auto rank = [](Atom::Kind k) {
    switch (k) {
      case Atom::Kind::symbol: return 0;
      case Atom::Kind::func: return 1;
      case Atom::Kind::delta: return 2;
    }
    return 3;
  };
  if (int c = rank(a.kind) - rank(b.kind)) return c < 0 ? -1 : 1;
  switch (a.kind) {
    case Atom::Kind::symbol: {
      if (a.sym.name != b.sym.name) return a.sym.name < b.sym.name ? -1 : 1;
      if (a.sym.dots != b.sym.dots) return a.sym.dots < b.sym.dots ? -1 : 1;
      return 0;
    }
    case Atom::Kind::func: {
      if (a.func_name != b.func_name) return a.func_name < b.func_name ? -1 : 1;
      if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
      if (a.deriv != b.deriv) return a.deriv < b.deriv ? -1 : 1;
      for (size_t i = 0; i < a.args.size(); ++i)
        if (int c = expr_cmp(a.args[i], b.args[i])) return c;
      return 0;
    }
    case Atom::Kind::delta: {
      if (a.delta_order != b.delta_order)
        return a.delta_order < b.delta_order ? -1 : 1;
      return expr_cmp(a.args[0], b.args[0]);
    }
  }
  return 0;
}

AtomPtr make_symbol_atom(const SymKey& k) {
  auto a = std::make_shared<Atom>();
  a->kind = Atom::Kind::symbol;
  a->sym = k;
  return a;
}

std::string Atom::str() const {
  switch (kind) {
    case Kind::symbol:
      return sym.str();
    case Kind::func: {
      std::string s = func_name;
      bool any = false;
      for (int d : deriv)
        if (d) any = true;
      if (any) {
        s += "_";
        for (size_t i = 0; i < deriv.size(); ++i)
          for (int k = 0; k < deriv[i]; ++k) s += std::to_string(i + 1);
      }
      s += "(";
      for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].str();
      }
      s += ")";
      return s;
    }
    case Kind::delta: {
      std::string head = "delta";
      if (delta_order == 1)
        head += "'";
      else if (delta_order > 1)
        head += "^(" + std::to_string(delta_order) + ")";
      return head + "(" + args[0].str() + ")";
    }
  }
  return "?";
}

// -------------------------------------------------------------- monomials

static int mono_cmp(const Monomial& a, const Monomial& b) {
  // lex, most significant atom is the largest one
  auto ia = a.factors.rbegin(), ib = b.factors.rbegin();
  while (ia != a.factors.rend() && ib != b.factors.rend()) {
    int c = atom_cmp(*ia->first, *ib->first);
    if (c > 0) return 1;   // a has a bigger atom with positive exponent
    if (c < 0) return -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors.rend()) return 1;
  if (ib != b.factors.rend()) return -1;
  return 0;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  return mono_cmp(a, b) < 0;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() && ib != b.factors.end()) {
    int c = atom_cmp(*ia->first, *ib->first);
    if (c < 0)
      r.factors.push_back(*ia++);
    else if (c > 0)
      r.factors.push_back(*ib++);
    else {
      r.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  r.factors.insert(r.factors.end(), ia, a.factors.end());
  r.factors.insert(r.factors.end(), ib, b.factors.end());
  return r;
}

// a / b, or false if not divisible
static bool mono_div(const Monomial& a, const Monomial& b, Monomial& out) {
  out.factors.clear();
  auto ia = a.factors.begin();
  for (const auto& [atom, e] : b.factors) {
    while (ia != a.factors.end() && atom_cmp(*ia->first, *atom) < 0)
      out.factors.push_back(*ia++);
    if (ia == a.factors.end() || atom_cmp(*ia->first, *atom) != 0 ||
        ia->second < e)
      return false;
    if (ia->second > e) out.factors.emplace_back(ia->first, ia->second - e);
    ++ia;
  }
  out.factors.insert(out.factors.end(), ia, a.factors.end());
  return true;
}

// ------------------------------------------------------------ polynomials

Poly poly_zero() { return Poly(); }

Poly poly_const(const GaussRat& c) {
  Poly p;
  if (!c.is_zero()) p.emplace(Monomial{}, c);
  return p;
}

Poly poly_atom(AtomPtr a) {
  Poly p;
  Monomial m;
  m.factors.emplace_back(std::move(a), 1);
  p.emplace(std::move(m), GaussRat(1));
  return p;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

static bool poly_is_const(const Poly& p) {
  return p.empty() || (p.size() == 1 && p.begin()->first.empty());
}

static void poly_add_term(Poly& p, const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) poly_add_term(r, m, c);
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a) r.emplace(m, -c);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) poly_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

static Poly poly_scale(const Poly& a, const GaussRat& c) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : a) r.emplace(m, k * c);
  return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZeroError();
  Poly r = a, q;
  const auto& ltb = *b.rbegin();
  while (!r.empty()) {
    const auto& ltr = *r.rbegin();
    Monomial t;
    if (!mono_div(ltr.first, ltb.first, t))
      throw Error("internal: non-exact polynomial division");
    GaussRat cq = ltr.second / ltb.second;
    poly_add_term(q, t, cq);
    // r -= t*b
    for (const auto& [m, c] : b) poly_add_term(r, mono_mul(t, m), -(cq * c));
  }
  return q;
}

// -- multivariate gcd over the Gaussian rationals, primitive-PRS style --

namespace {

// univariate view of p in atom x: vec[k] = coefficient polynomial of x^k
std::vector<Poly> univ(const Poly& p, const AtomPtr& x) {
  std::vector<Poly> v;
  for (const auto& [m, c] : p) {
    int deg = 0;
    Monomial rest;
    for (const auto& f : m.factors) {
      if (atom_cmp(*f.first, *x) == 0)
        deg = f.second;
      else
        rest.factors.push_back(f);
    }
    if ((int)v.size() <= deg) v.resize(deg + 1);
    poly_add_term(v[deg], rest, c);
  }
  while (!v.empty() && v.back().empty()) v.pop_back();
  return v;
}

Poly reassemble(const std::vector<Poly>& v, const AtomPtr& x) {
  Poly r;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].empty()) continue;
    Poly xk = poly_const(GaussRat(1));
    if (k > 0) {
      Monomial m;
      m.factors.emplace_back(x, (int)k);
      xk.clear();
      xk.emplace(m, GaussRat(1));
    }
    r = poly_add(r, poly_mul(v[k], xk));
  }
  return r;
}

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  return poly_scale(p, GaussRat(1) / p.rbegin()->second);
}

Poly content_of(const std::vector<Poly>& v) {
  Poly g;
  for (const auto& c : v) g = poly_gcd(g, c);
  return g;
}

int uv_deg(const std::vector<Poly>& v) { return (int)v.size() - 1; }

std::vector<Poly> uv_trim(std::vector<Poly> v) {
  while (!v.empty() && v.back().empty()) v.pop_back();
  return v;
}

// lc(b)*a - lc(a)*x^(da-db)*b  (one reduction step)
std::vector<Poly> uv_reduce(const std::vector<Poly>& a,
                            const std::vector<Poly>& b) {
  int da = uv_deg(a), db = uv_deg(b);
  const Poly& lca = a.back();
  const Poly& lcb = b.back();
  std::vector<Poly> r(a.size());
  for (int k = 0; k <= da; ++k) r[k] = poly_mul(a[k], lcb);
  for (int k = 0; k <= db; ++k)
    r[k + da - db] = poly_add(r[k + da - db], poly_neg(poly_mul(b[k], lca)));
  return uv_trim(std::move(r));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.empty()) return poly_monic(b);
  if (b.empty()) return poly_monic(a);
  if (poly_is_const(a) || poly_is_const(b)) return poly_const(GaussRat(1));

  // main atom: the largest atom present (it appears in the leading monomial)
  const AtomPtr& xa = a.rbegin()->first.factors.back().first;
  const AtomPtr& xb = b.rbegin()->first.factors.back().first;
  AtomPtr x = atom_cmp(*xa, *xb) >= 0 ? xa : xb;

  auto ua = univ(a, x), ub = univ(b, x);
  Poly ca = content_of(ua), cb = content_of(ub);
  for (auto& p : ua) p = p.empty() ? p : poly_divexact(p, ca);
  for (auto& p : ub) p = p.empty() ? p : poly_divexact(p, cb);
  Poly cg = poly_gcd(ca, cb);

  auto take_primitive = [](std::vector<Poly> v) {
    Poly c = content_of(v);
    for (auto& p : v)
      if (!p.empty()) p = poly_divexact(p, c);
    return v;
  };

  std::vector<Poly> A = uv_deg(ua) >= uv_deg(ub) ? ua : ub;
  std::vector<Poly> B = uv_deg(ua) >= uv_deg(ub) ? ub : ua;
  Poly gp;  // primitive-part gcd
  for (;;) {
    if (B.empty()) {
      gp = reassemble(take_primitive(A), x);
      break;
    }
    if (uv_deg(B) == 0) {
      gp = poly_const(GaussRat(1));
      break;
    }
    std::vector<Poly> R = A;
    while (uv_deg(R) >= uv_deg(B) && !R.empty()) R = uv_reduce(R, B);
    A = std::move(B);
    B = take_primitive(uv_trim(std::move(R)));
  }
  return poly_monic(poly_mul(cg, gp));
}

static int poly_cmp(const Poly& a, const Poly& b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (int c = mono_cmp(ia->first, ib->first)) return c;
    if (int c = cmp(ia->second, ib->second)) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.rend()) return 1;
  if (ib != b.rend()) return -1;
  return 0;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [m, c] = *it;
    GaussRat cc = c;
    std::string sign;
    if (!first) sign = " + ";
    if (c.im == 0 && c.re < 0) {
      sign = first ? "-" : " - ";
      cc = -c;
    }
    std::string term;
    if (m.empty()) {
      term = cc.str();
    } else {
      std::string ms;
      for (size_t i = 0; i < m.factors.size(); ++i) {
        if (i) ms += "*";
        ms += m.factors[i].first->str();
        if (m.factors[i].second != 1)
          ms += "^" + std::to_string(m.factors[i].second);
      }
      if (cc.is_one())
        term = ms;
      else
        term = cc.str() + "*" + ms;
    }
    s += sign + term;
    first = false;
  }
  return s;
}

// -------------------------------------------------------------- ScalarExpr

int expr_cmp(const ScalarExpr& a, const ScalarExpr& b) {
  if (int c = poly_cmp(a.num(), b.num())) return c;
  return poly_cmp(a.den(), b.den());
}

ScalarExpr::ScalarExpr() : den_(poly_const(GaussRat(1))) {}

ScalarExpr::ScalarExpr(Poly num, Poly den, bool normalized)
    : num_(std::move(num)), den_(std::move(den)) {
  if (normalized) return;
  if (den_.empty()) throw DivisionByZeroError();
  if (num_.empty()) {
    den_ = poly_const(GaussRat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!(poly_is_const(g) && g.rbegin()->second.is_one())) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  GaussRat lc = den_.rbegin()->second;
  if (!lc.is_one()) {
    num_ = poly_scale(num_, GaussRat(1) / lc);
    den_ = poly_scale(den_, GaussRat(1) / lc);
  }
}

ScalarExpr ScalarExpr::from_fraction(Poly num, Poly den) {
  return ScalarExpr(std::move(num), std::move(den), false);
}

ScalarExpr ScalarExpr::rational(Rational r) {
  return ScalarExpr(poly_const(GaussRat(std::move(r))),
                    poly_const(GaussRat(1)), true);
}

ScalarExpr ScalarExpr::coeff(GaussRat c) {
  return ScalarExpr(poly_const(std::move(c)), poly_const(GaussRat(1)), true);
}

ScalarExpr ScalarExpr::integer(long n) { return rational(Rational(n)); }

ScalarExpr ScalarExpr::imaginary() { return coeff(GaussRat::imaginary()); }

ScalarExpr ScalarExpr::symbol(const std::string& name, int dots) {
  return symbol(SymKey{name, dots});
}

ScalarExpr ScalarExpr::symbol(const SymKey& k) {
  return ScalarExpr(poly_atom(make_symbol_atom(k)), poly_const(GaussRat(1)),
                    true);
}

ScalarExpr ScalarExpr::func(const std::string& name,
                            std::vector<ScalarExpr> args,
                            std::vector<int> deriv) {
  auto a = std::make_shared<Atom>();
  a->kind = Atom::Kind::func;
  a->func_name = name;
  a->args = std::move(args);
  deriv.resize(a->args.size(), 0);
  for (int d : deriv)
    if (d < 0) throw ConstructionError("negative derivative order");
  a->deriv = std::move(deriv);
  return ScalarExpr(poly_atom(std::move(a)), poly_const(GaussRat(1)), true);
}

ScalarExpr ScalarExpr::delta(int order, const ScalarExpr& arg) {
  if (order < 0) throw ConstructionError("negative delta order");
  if (arg.has_delta())
    throw ConstructionError("delta node inside a delta argument");
  auto a = std::make_shared<Atom>();
  a->kind = Atom::Kind::delta;
  a->delta_order = order;
  a->args = {arg};
  return ScalarExpr(poly_atom(std::move(a)), poly_const(GaussRat(1)), true);
}

bool ScalarExpr::is_zero() const { return num_.empty(); }

bool ScalarExpr::is_one() const {
  return poly_is_const(num_) && !num_.empty() &&
         num_.begin()->second.is_one() && poly_is_const(den_) &&
         den_.begin()->second.is_one();
}

bool ScalarExpr::is_constant() const {
  return poly_is_const(num_) && poly_is_const(den_);
}

GaussRat ScalarExpr::constant_value() const {
  if (!is_constant()) throw EvalError("not a constant expression");
  if (num_.empty()) return GaussRat(0);
  return num_.begin()->second / den_.begin()->second;
}

ScalarExpr ScalarExpr::operator-() const {
  return ScalarExpr(poly_neg(num_), den_, true);
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr::from_fraction(
      poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
      poly_mul(a.den_, b.den_));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr::from_fraction(poly_mul(a.num_, b.num_),
                                   poly_mul(a.den_, b.den_));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  return ScalarExpr::from_fraction(poly_mul(a.num_, b.den_),
                                   poly_mul(a.den_, b.num_));
}

ScalarExpr pow(const ScalarExpr& e, long n) {
  if (n < 0) return pow(ScalarExpr::integer(1) / e, -n);
  ScalarExpr r = ScalarExpr::integer(1);
  ScalarExpr base = e;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// ------------------------------------------------------------- derivative

static ScalarExpr from_poly(const Poly& p) {
  return ScalarExpr::from_fraction(p, poly_const(GaussRat(1)));
}

static ScalarExpr atom_expr(const AtomPtr& a) { return from_poly(poly_atom(a)); }

static ScalarExpr atom_derivative(const Atom& a, const SymKey& s) {
  switch (a.kind) {
    case Atom::Kind::symbol:
      return a.sym == s ? ScalarExpr::integer(1) : ScalarExpr();
    case Atom::Kind::func: {
      ScalarExpr r;
      for (size_t i = 0; i < a.args.size(); ++i) {
        ScalarExpr da = a.args[i].derivative(s);
        if (da.is_zero()) continue;
        std::vector<int> d = a.deriv;
        d[i] += 1;
        r += ScalarExpr::func(a.func_name, a.args, std::move(d)) * da;
      }
      return r;
    }
    case Atom::Kind::delta: {
      ScalarExpr du = a.args[0].derivative(s);
      if (du.is_zero()) return ScalarExpr();
      return ScalarExpr::delta(a.delta_order + 1, a.args[0]) * du;
    }
  }
  return ScalarExpr();
}

static ScalarExpr poly_derivative(const Poly& p, const SymKey& s) {
  ScalarExpr r;
  for (const auto& [m, c] : p) {
    for (size_t i = 0; i < m.factors.size(); ++i) {
      const auto& [atom, e] = m.factors[i];
      ScalarExpr da = atom_derivative(*atom, s);
      if (da.is_zero()) continue;
      ScalarExpr term = ScalarExpr::coeff(c) * ScalarExpr::integer(e) *
                        pow(atom_expr(atom), e - 1) * da;
      for (size_t j = 0; j < m.factors.size(); ++j) {
        if (j == i) continue;
        term = term * pow(atom_expr(m.factors[j].first), m.factors[j].second);
      }
      r += term;
    }
  }
  return r;
}

ScalarExpr ScalarExpr::derivative(const SymKey& s) const {
  ScalarExpr dn = poly_derivative(num_, s);
  ScalarExpr dd = poly_derivative(den_, s);
  ScalarExpr n = from_poly(num_), d = from_poly(den_);
  return (dn * d - n * dd) / (d * d);
}

ScalarExpr ScalarExpr::derivative(const std::string& name, int dots) const {
  return derivative(SymKey{name, dots});
}

// ------------------------------------------------------------ substitution

namespace {

void check_acyclic(const std::map<SymKey, ScalarExpr>& bindings) {
  // DFS over "binding of a mentions bound symbol b"
  std::map<SymKey, int> state;  // 0 unvisited, 1 in stack, 2 done
  std::function<void(const SymKey&)> visit = [&](const SymKey& k) {
    int& st = state[k];
    if (st == 1) throw ConstructionError("cyclic substitution bindings");
    if (st == 2) return;
    st = 1;
    for (const SymKey& dep : bindings.at(k).symbols())
      if (bindings.count(dep)) visit(dep);
    state[k] = 2;
  };
  for (const auto& [k, v] : bindings) visit(k);
}

ScalarExpr subst_atom(const Atom& a,
                      const std::map<SymKey, ScalarExpr>& bindings) {
  switch (a.kind) {
    case Atom::Kind::symbol: {
      auto it = bindings.find(a.sym);
      if (it != bindings.end()) return it->second;
      return ScalarExpr::symbol(a.sym);
    }
    case Atom::Kind::func: {
      std::vector<ScalarExpr> args;
      args.reserve(a.args.size());
      for (const auto& e : a.args) args.push_back(e.substitute(bindings));
      return ScalarExpr::func(a.func_name, std::move(args), a.deriv);
    }
    case Atom::Kind::delta:
      return ScalarExpr::delta(a.delta_order, a.args[0].substitute(bindings));
  }
  return ScalarExpr();
}

ScalarExpr subst_poly(const Poly& p,
                      const std::map<SymKey, ScalarExpr>& bindings) {
  ScalarExpr r;
  for (const auto& [m, c] : p) {
    ScalarExpr term = ScalarExpr::coeff(c);
    for (const auto& [atom, e] : m.factors)
      term = term * pow(subst_atom(*atom, bindings), e);
    r += term;
  }
  return r;
}

}  // namespace

ScalarExpr ScalarExpr::substitute(
    const std::map<SymKey, ScalarExpr>& bindings) const {
  check_acyclic(bindings);
  ScalarExpr n = subst_poly(num_, bindings);
  ScalarExpr d = subst_poly(den_, bindings);
  if (d.is_zero())
    throw DivisionByZeroError("substitution makes a denominator vanish");
  return n / d;
}

// ------------------------------------------------------------- evaluation

namespace {

GaussRat eval_poly(const Poly& p, const std::map<SymKey, GaussRat>& point) {
  GaussRat r(0);
  for (const auto& [m, c] : p) {
    GaussRat term = c;
    for (const auto& [atom, e] : m.factors) {
      if (atom->kind != Atom::Kind::symbol)
        throw EvalError("cannot evaluate formal node " + atom->str());
      auto it = point.find(atom->sym);
      if (it == point.end())
        throw EvalError("unbound symbol " + atom->sym.str());
      GaussRat v(1);
      for (int k = 0; k < e; ++k) v *= it->second;
      term *= v;
    }
    r += term;
  }
  return r;
}

}  // namespace

GaussRat ScalarExpr::eval(const std::map<SymKey, GaussRat>& point) const {
  GaussRat n = eval_poly(num_, point);
  GaussRat d = eval_poly(den_, point);
  if (d.is_zero()) throw DivisionByZeroError("denominator vanishes at point");
  return n / d;
}

Rational ScalarExpr::eval_rational(
    const std::map<SymKey, Rational>& point) const {
  std::map<SymKey, GaussRat> pt;
  for (const auto& [k, v] : point) pt.emplace(k, GaussRat(v));
  GaussRat v = eval(pt);
  if (!v.is_real()) throw EvalError("value is not real");
  return v.re;
}

// -------------------------------------------------------------- inspection

namespace {

void collect_atom(const Atom& a, std::set<SymKey>& out) {
  switch (a.kind) {
    case Atom::Kind::symbol:
      out.insert(a.sym);
      break;
    case Atom::Kind::func:
    case Atom::Kind::delta:
      for (const auto& e : a.args)
        for (const auto& k : e.symbols()) out.insert(k);
      break;
  }
}

bool scan_kind(const Poly& p, Atom::Kind kind, bool recurse) {
  for (const auto& [m, c] : p)
    for (const auto& [atom, e] : m.factors) {
      if (atom->kind == kind) return true;
      if (recurse && atom->kind != Atom::Kind::symbol)
        for (const auto& a : atom->args)
          if ((kind == Atom::Kind::delta && a.has_delta()) ||
              (kind == Atom::Kind::func && a.has_func()))
            return true;
    }
  return false;
}

}  // namespace

std::set<SymKey> ScalarExpr::symbols() const {
  std::set<SymKey> out;
  for (const Poly* p : {&num_, &den_})
    for (const auto& [m, c] : *p)
      for (const auto& [atom, e] : m.factors) collect_atom(*atom, out);
  return out;
}

bool ScalarExpr::contains_symbol(const std::string& name) const {
  for (const auto& k : symbols())
    if (k.name == name) return true;
  return false;
}

bool ScalarExpr::has_delta() const {
  return scan_kind(num_, Atom::Kind::delta, true) ||
         scan_kind(den_, Atom::Kind::delta, true);
}

bool ScalarExpr::has_func() const {
  return scan_kind(num_, Atom::Kind::func, true) ||
         scan_kind(den_, Atom::Kind::func, true);
}

std::string ScalarExpr::str() const {
  if (poly_is_const(den_) && den_.begin()->second.is_one())
    return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace sslab
