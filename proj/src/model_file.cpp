#include "sslab/model_file.hpp"

#include <fstream>
#include <sstream>

namespace sslab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& s, int line_no) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw DivisionByZeroError();
    if (den < 0) {  // the rational constructor rejects negative denominators
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'", line_no, 1);
  }
}

Rational parse_power(const std::string& tok, char base, int line_no) {
  if (tok.size() < 3 || tok[0] != base || tok[1] != '^')
    throw ParseError(std::string("expected ") + base + "^<rational>, got '" +
                         tok + "'",
                     line_no, 1);
  return parse_rational(tok.substr(2), line_no);
}

double parse_double(const std::string& s, int line_no) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "'", line_no, 1);
  }
}

}  // namespace

ModelFile parse_model_file(const std::string& text) {
  ModelFile mf;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (section != "lattice" && section != "bigaction")
        throw ParseError("unknown section [" + section + "]", line_no, 1);
      if (section == "lattice" && !mf.lattice) mf.lattice = LatticeConfig{};
      if (section == "bigaction" && !mf.bigaction)
        mf.bigaction = BigActionInput{};
      continue;
    }

    if (!section.empty()) {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected key = value in [" + section + "]", line_no,
                         1);
      std::string key = trim(line.substr(0, eq));
      double val = parse_double(trim(line.substr(eq + 1)), line_no);
      if (section == "lattice") {
        LatticeConfig& lc = *mf.lattice;
        if (key == "steps")
          lc.steps = (int)val;
        else if (key == "t_total")
          lc.t_total = val;
        else if (key == "m")
          lc.m = val;
        else if (key == "omega0")
          lc.omega0 = val;
        else if (key == "hbar")
          lc.hbar = val;
        else if (key == "x_i")
          lc.x_i = val;
        else if (key == "x_f")
          lc.x_f = val;
        else
          throw ParseError("unknown [lattice] key '" + key + "'", line_no, 1);
      } else {
        BigActionInput& ba = *mf.bigaction;
        if (key == "mass_kg")
          ba.mass_kg = val;
        else if (key == "age_s")
          ba.age_s = val;
        else
          throw ParseError("unknown [bigaction] key '" + key + "'", line_no, 1);
      }
      continue;
    }

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "lagrangian") {
      if (mf.has_lagrangian)
        throw ParseError("duplicate lagrangian", line_no, 1);
      std::string rest = trim(line.substr(line.find(kw) + kw.size()));
      mf.lagrangian = parse_expression(rest, mf.table, line_no);
      mf.has_lagrangian = true;
      continue;
    }
    if (kw == "dim") {
      std::string name, mt, lt, tt;
      if (!(ls >> name >> mt >> lt >> tt))
        throw ParseError("expected: dim <symbol> M^a L^b T^c", line_no, 1);
      mf.dims[name] = Dimension::of(parse_power(mt, 'M', line_no),
                                    parse_power(lt, 'L', line_no),
                                    parse_power(tt, 'T', line_no));
      continue;
    }
    if (parse_declaration(line, mf.table, line_no)) {
      if (kw == "var") {
        std::string name;
        std::istringstream(line.substr(4)) >> name;
        mf.phase_vars.push_back(name);
      }
      continue;
    }
    throw ParseError("unrecognized line '" + line + "'", line_no, 1);
  }
  return mf;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_model_file(ss.str());
}

}  // namespace sslab
