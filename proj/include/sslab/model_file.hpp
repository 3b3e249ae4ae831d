#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sslab/dimension.hpp"
#include "sslab/lattice.hpp"
#include "sslab/parser.hpp"
#include "sslab/scalar_expr.hpp"
#include "sslab/symbol_table.hpp"

namespace sslab {

/// Parsed model file: declarations, one Lagrangian, optional dimension
/// assignments and numeric sections.
///
///   const m
///   var q
///   var p
///   lagrangian p*qdot - p^2/(2*m)
///   dim q M^0 L^1 T^0
///   [lattice]
///   steps = 32
///   [bigaction]
///   mass_kg = 1.0
struct ModelFile {
  SymbolTable table;
  std::vector<std::string> phase_vars;  // declaration order; pairs (q, p)
  ScalarExpr lagrangian;
  bool has_lagrangian = false;
  std::map<std::string, Dimension> dims;
  std::optional<LatticeConfig> lattice;
  std::optional<BigActionInput> bigaction;
};

ModelFile parse_model_file(const std::string& text);
ModelFile load_model_file(const std::string& path);

}  // namespace sslab
