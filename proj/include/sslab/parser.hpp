#pragma once

#include <string>

#include "sslab/scalar_expr.hpp"
#include "sslab/symbol_table.hpp"

namespace sslab {

struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" +
              std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// Parse one expression in the model DSL:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := rational | symbol | symbol '(' expr (',' expr)* ')' | '(' expr ')'
/// The suffix "dot" on a declared time-dependent symbol denotes d/dt.
/// "i" is the imaginary unit.
ScalarExpr parse_expression(const std::string& text, const SymbolTable& table,
                            int start_line = 1);

/// Parse a declaration line: "const m" | "var q" | "aux s" | "func H 2".
/// Returns false if the line is not a declaration.
bool parse_declaration(const std::string& line, SymbolTable& table,
                       int line_no = 1);

}  // namespace sslab
