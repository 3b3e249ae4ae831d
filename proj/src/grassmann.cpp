#include "sslab/grassmann.hpp"

#include <algorithm>

namespace sslab {

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (int i = 0; i < (int)names_.size(); ++i) {
    auto [it, inserted] = index_.emplace(names_[i], i);
    if (!inserted)
      throw ConstructionError("duplicate generator '" + names_[i] + "'");
  }
}

int GeneratorSet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw ConstructionError("unknown generator '" + name + "'");
  return it->second;
}

static void check_same_gens(const GrassmannElement& a,
                            const GrassmannElement& b) {
  if (a.gens() == b.gens()) return;
  if (a.gens() && b.gens()) {
    if (a.gens()->size() == b.gens()->size()) {
      bool same = true;
      for (int i = 0; i < a.gens()->size(); ++i)
        if (a.gens()->name(i) != b.gens()->name(i)) same = false;
      if (same) return;
    }
    throw ConstructionError("mismatched generator sets");
  }
}

GrassmannElement GrassmannElement::scalar(GeneratorSetPtr gens, ScalarExpr c) {
  GrassmannElement e(std::move(gens));
  e.add_term({}, std::move(c));
  return e;
}

GrassmannElement GrassmannElement::generator(GeneratorSetPtr gens, int idx) {
  if (idx < 0 || idx >= gens->size())
    throw ConstructionError("generator index out of range");
  GrassmannElement e(std::move(gens));
  e.add_term({idx}, ScalarExpr::integer(1));
  return e;
}

void GrassmannElement::add_term(std::vector<int> subset, ScalarExpr c) {
  if (c.is_zero()) return;
  auto it = terms_.find(subset);
  if (it == terms_.end()) {
    terms_.emplace(std::move(subset), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarExpr GrassmannElement::body() const { return coefficient({}); }

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement r(gens_);
  for (const auto& [s, c] : terms_)
    if (!s.empty()) r.terms_.emplace(s, c);
  return r;
}

ScalarExpr GrassmannElement::coefficient(const std::vector<int>& subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? ScalarExpr() : it->second;
}

bool GrassmannElement::is_even() const {
  for (const auto& [s, c] : terms_)
    if (s.size() % 2) return false;
  return true;
}

bool GrassmannElement::is_odd() const {
  for (const auto& [s, c] : terms_)
    if (s.size() % 2 == 0) return false;
  return true;
}

bool GrassmannElement::is_scalar() const {
  for (const auto& [s, c] : terms_)
    if (!s.empty()) return false;
  return true;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(gens_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

GrassmannElement operator+(const GrassmannElement& a,
                           const GrassmannElement& b) {
  check_same_gens(a, b);
  GrassmannElement r = a;
  if (!r.gens_) r.gens_ = b.gens_;
  for (const auto& [s, c] : b.terms_) r.add_term(s, c);
  return r;
}

GrassmannElement operator-(const GrassmannElement& a,
                           const GrassmannElement& b) {
  return a + (-b);
}

bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
  return (a - b).is_zero();
}

// sign of merging two ascending subsets into one ascending sequence:
// (-1)^(number of pairs (x in a, y in b) with y < x); 0 overlap forbidden.
static int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
                      std::vector<int>& out) {
  out.clear();
  int inversions = 0;
  size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;  // nilpotent
    if (a[ia] < b[ib]) {
      out.push_back(a[ia++]);
    } else {
      inversions += (int)(a.size() - ia);
      out.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  return inversions % 2 ? -1 : 1;
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) {
  check_same_gens(a, b);
  GrassmannElement r(a.gens() ? a.gens() : b.gens());
  std::vector<int> merged;
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      int sign = merge_sign(sa, sb, merged);
      if (sign == 0) continue;
      ScalarExpr c = ca * cb;
      r.add_term(merged, sign > 0 ? c : -c);
    }
  return r;
}

GrassmannElement operator*(const GrassmannElement& a,
                           const GrassmannElement& b) {
  return gmul(a, b);
}

GrassmannElement operator*(const ScalarExpr& c, const GrassmannElement& a) {
  GrassmannElement r(a.gens());
  for (const auto& [s, k] : a.terms()) r.add_term(s, c * k);
  return r;
}

GrassmannElement GrassmannElement::left_derivative(int idx) const {
  GrassmannElement r(gens_);
  for (const auto& [s, c] : terms_) {
    auto it = std::find(s.begin(), s.end(), idx);
    if (it == s.end()) continue;
    int pos = (int)(it - s.begin());
    std::vector<int> rest;
    rest.reserve(s.size() - 1);
    rest.insert(rest.end(), s.begin(), it);
    rest.insert(rest.end(), it + 1, s.end());
    r.add_term(std::move(rest), pos % 2 ? -c : c);
  }
  return r;
}

bool GrassmannElement::contains_generator(int idx) const {
  for (const auto& [s, c] : terms_)
    if (std::find(s.begin(), s.end(), idx) != s.end()) return true;
  return false;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int idx : s) out += " " + gens_->name(idx);
  }
  return out;
}

GrassmannElement berezin_integrate(const GrassmannElement& e,
                                   const std::vector<int>& vars) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw ConstructionError("repeated Berezin integration variable");
  GrassmannElement r = e;
  // innermost differential (last var) acts first
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    r = r.left_derivative(*it);
  return r;
}

GrassmannElement grassmann_delta(GeneratorSetPtr gens, int idx) {
  return GrassmannElement::generator(std::move(gens), idx);
}

GrassmannElement invert_even(const GrassmannElement& x) {
  if (!x.is_even()) throw ConstructionError("invert_even: element not even");
  ScalarExpr a = x.body();
  if (a.is_zero())
    throw ConstructionError("not invertible: zero body");
  GrassmannElement n = x.soul();
  ScalarExpr inv_a = ScalarExpr::integer(1) / a;
  // 1/(a+n) = (1/a) sum_k (-n/a)^k, terminating
  GrassmannElement acc = GrassmannElement::scalar(x.gens(), inv_a);
  GrassmannElement power = GrassmannElement::scalar(x.gens(), ScalarExpr::integer(1));
  ScalarExpr coef = inv_a;
  int max_k = x.gens()->size() / 2 + 1;
  for (int k = 1; k <= max_k; ++k) {
    power = gmul(power, n);
    if (power.is_zero()) break;
    coef = -(coef / a);
    acc += coef * power;
  }
  return acc;
}

EvenFunction EvenFunction::identity() { return EvenFunction(); }

EvenFunction EvenFunction::constant(ScalarExpr c) {
  EvenFunction f;
  f.kind_ = Kind::constant;
  f.const_ = std::move(c);
  return f;
}

EvenFunction EvenFunction::formal(std::string func_name) {
  EvenFunction f;
  f.kind_ = Kind::formal;
  f.name_ = std::move(func_name);
  return f;
}

EvenFunction EvenFunction::delta(int order) {
  EvenFunction f;
  f.kind_ = Kind::delta;
  f.delta_order_ = order;
  return f;
}

EvenFunction EvenFunction::exponential() {
  EvenFunction f;
  f.kind_ = Kind::exponential;
  return f;
}

EvenFunction EvenFunction::of_expression(ScalarExpr body, SymKey var) {
  EvenFunction f;
  f.kind_ = Kind::expression;
  f.body_ = std::move(body);
  f.var_ = std::move(var);
  return f;
}

ScalarExpr EvenFunction::derivative_at(int k, const ScalarExpr& a) const {
  switch (kind_) {
    case Kind::identity:
      if (k == 0) return a;
      return k == 1 ? ScalarExpr::integer(1) : ScalarExpr();
    case Kind::constant:
      return k == 0 ? const_ : ScalarExpr();
    case Kind::formal:
      return ScalarExpr::func(name_, {a}, {k});
    case Kind::delta:
      return ScalarExpr::delta(delta_order_ + k, a);
    case Kind::exponential:
      if (a.is_zero()) return ScalarExpr::integer(1);
      return ScalarExpr::func("exp", {a});
    case Kind::expression: {
      ScalarExpr d = body_;
      for (int j = 0; j < k; ++j) d = d.derivative(var_);
      return d.substitute({{var_, a}});
    }
  }
  return ScalarExpr();
}

GrassmannElement expand_even_function(const EvenFunction& f,
                                      const GrassmannElement& x) {
  if (!x.is_even())
    throw ConstructionError("expand_even_function: element not even");
  ScalarExpr a = x.body();
  GrassmannElement n = x.soul();
  GrassmannElement acc =
      GrassmannElement::scalar(x.gens(), f.derivative_at(0, a));
  GrassmannElement power =
      GrassmannElement::scalar(x.gens(), ScalarExpr::integer(1));
  Rational fact(1);
  int max_k = x.gens() ? x.gens()->size() / 2 + 1 : 0;
  for (int k = 1; k <= max_k; ++k) {
    power = gmul(power, n);
    if (power.is_zero()) break;
    fact *= k;
    ScalarExpr c =
        f.derivative_at(k, a) * ScalarExpr::rational(Rational(1) / fact);
    acc += c * power;
  }
  return acc;
}

}  // namespace sslab
