#pragma once

#include <map>
#include <string>

#include "sslab/number.hpp"

namespace sslab {

enum class SymbolKind { constant, phase_var, aux_var, time, function };

struct SymbolInfo {
  SymbolKind kind = SymbolKind::constant;
  bool time_dependent = false;
  int arity = 0;  // functions only
};

struct UndeclaredSymbolError : Error {
  explicit UndeclaredSymbolError(const std::string& name)
      : Error("undeclared symbol '" + name + "'") {}
};

class SymbolTable {
 public:
  SymbolTable() { declare("t", SymbolKind::time, false); }

  void declare(const std::string& name, SymbolKind kind, bool time_dependent,
               int arity = 0) {
    auto [it, inserted] = table_.try_emplace(
        name, SymbolInfo{kind, time_dependent, arity});
    if (!inserted) throw ConstructionError("symbol '" + name + "' redeclared");
  }
  void declare_constant(const std::string& name) {
    declare(name, SymbolKind::constant, false);
  }
  void declare_var(const std::string& name) {
    declare(name, SymbolKind::phase_var, true);
  }
  void declare_aux(const std::string& name, bool time_dependent = true) {
    declare(name, SymbolKind::aux_var, time_dependent);
  }
  void declare_function(const std::string& name, int arity) {
    declare(name, SymbolKind::function, false, arity);
  }

  bool is_declared(const std::string& name) const {
    return table_.count(name) != 0;
  }
  const SymbolInfo& lookup(const std::string& name) const {
    auto it = table_.find(name);
    if (it == table_.end()) throw UndeclaredSymbolError(name);
    return it->second;
  }
  bool is_time_dependent(const std::string& name) const {
    auto it = table_.find(name);
    return it != table_.end() && it->second.time_dependent;
  }

  const std::map<std::string, SymbolInfo>& all() const { return table_; }

 private:
  std::map<std::string, SymbolInfo> table_;
};

}  // namespace sslab
