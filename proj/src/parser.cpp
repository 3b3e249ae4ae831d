#include "sslab/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace sslab {

namespace {

struct Token {
  enum class Type { number, ident, op, end };
  Type type = Type::end;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& src, int start_line) : src_(src), line_(start_line) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isdigit((unsigned char)c)) {
      t.type = Token::Type::number;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
        t.text += take();
      return t;
    }
    if (std::isalpha((unsigned char)c)) {
      t.type = Token::Type::ident;
      while (pos_ < src_.size() &&
             (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        t.text += take();
      return t;
    }
    if (std::string("+-*/^(),").find(c) != std::string::npos) {
      t.type = Token::Type::op;
      t.text = take();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_]))
      take();
  }
  const std::string& src_;
  size_t pos_ = 0;
  int line_, col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& src, const SymbolTable& table, int start_line)
      : lex_(src, start_line), table_(table) {
    advance();
  }

  ScalarExpr parse() {
    ScalarExpr e = expr();
    if (cur_.type != Token::Type::end)
      throw ParseError("trailing input '" + cur_.text + "'", cur_.line,
                       cur_.col);
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool accept_op(const std::string& s) {
    if (cur_.type == Token::Type::op && cur_.text == s) {
      advance();
      return true;
    }
    return false;
  }

  void expect_op(const std::string& s) {
    if (!accept_op(s))
      throw ParseError("expected '" + s + "'", cur_.line, cur_.col);
  }

  ScalarExpr expr() {
    ScalarExpr e = term();
    for (;;) {
      if (accept_op("+"))
        e += term();
      else if (accept_op("-"))
        e -= term();
      else
        return e;
    }
  }

  ScalarExpr term() {
    ScalarExpr e = factor();
    for (;;) {
      if (accept_op("*")) {
        e *= factor();
      } else if (accept_op("/")) {
        Token at = cur_;
        ScalarExpr d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at.line, at.col);
        e /= d;
      } else {
        return e;
      }
    }
  }

  ScalarExpr factor() {
    ScalarExpr b = base();
    if (accept_op("^")) {
      long sign = 1;
      if (accept_op("-")) sign = -1;
      if (cur_.type != Token::Type::number)
        throw ParseError("expected integer exponent", cur_.line, cur_.col);
      long n = std::stol(cur_.text);
      advance();
      if (sign < 0 && b.is_zero())
        throw ParseError("division by zero", cur_.line, cur_.col);
      return pow(b, sign * n);
    }
    return b;
  }

  ScalarExpr base() {
    if (cur_.type == Token::Type::number) {
      Rational r(Integer(cur_.text));
      advance();
      return ScalarExpr::rational(r);
    }
    if (accept_op("(")) {
      ScalarExpr e = expr();
      expect_op(")");
      return e;
    }
    if (cur_.type != Token::Type::ident)
      throw ParseError("expected a number, symbol or '('", cur_.line, cur_.col);
    Token name = cur_;
    advance();
    if (name.text == "i") return ScalarExpr::imaginary();
    if (cur_.type == Token::Type::op && cur_.text == "(") {
      // function application
      const SymbolInfo& info = [&]() -> const SymbolInfo& {
        if (!table_.is_declared(name.text))
          throw ParseError("undeclared function '" + name.text + "'",
                           name.line, name.col);
        return table_.lookup(name.text);
      }();
      if (info.kind != SymbolKind::function)
        throw ParseError("'" + name.text + "' is not a function", name.line,
                         name.col);
      advance();  // '('
      std::vector<ScalarExpr> args;
      args.push_back(expr());
      while (accept_op(",")) args.push_back(expr());
      expect_op(")");
      if ((int)args.size() != info.arity)
        throw ParseError("function '" + name.text + "' expects " +
                             std::to_string(info.arity) + " arguments, got " +
                             std::to_string(args.size()),
                         name.line, name.col);
      return ScalarExpr::func(name.text, std::move(args));
    }
    return resolve_symbol(name);
  }

  ScalarExpr resolve_symbol(const Token& name) {
    if (table_.is_declared(name.text)) {
      const SymbolInfo& info = table_.lookup(name.text);
      if (info.kind == SymbolKind::function)
        throw ParseError("function '" + name.text + "' used without arguments",
                         name.line, name.col);
      return ScalarExpr::symbol(name.text);
    }
    // trailing "dot" suffixes on a declared time-dependent symbol
    std::string base = name.text;
    int dots = 0;
    while (base.size() > 3 && base.substr(base.size() - 3) == "dot") {
      base = base.substr(0, base.size() - 3);
      ++dots;
      if (table_.is_declared(base) && table_.is_time_dependent(base))
        return ScalarExpr::symbol(base, dots);
    }
    throw ParseError("undeclared symbol '" + name.text + "'", name.line,
                     name.col);
  }

  Lexer lex_;
  const SymbolTable& table_;
  Token cur_;
};

}  // namespace

ScalarExpr parse_expression(const std::string& text, const SymbolTable& table,
                            int start_line) {
  return Parser(text, table, start_line).parse();
}

bool parse_declaration(const std::string& line, SymbolTable& table,
                       int line_no) {
  std::istringstream is(line);
  std::string kw, name;
  if (!(is >> kw)) return false;
  if (kw != "const" && kw != "var" && kw != "aux" && kw != "func") return false;
  if (!(is >> name))
    throw ParseError("missing symbol name after '" + kw + "'", line_no, 1);
  if (kw == "const") {
    table.declare_constant(name);
  } else if (kw == "var") {
    table.declare_var(name);
  } else if (kw == "aux") {
    table.declare_aux(name);
  } else {
    int arity = 0;
    if (!(is >> arity) || arity < 1)
      throw ParseError("missing arity for function '" + name + "'", line_no, 1);
    table.declare_function(name, arity);
  }
  std::string extra;
  if (is >> extra)
    throw ParseError("trailing input '" + extra + "' in declaration", line_no,
                     1);
  return true;
}

}  // namespace sslab
