#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "synthe/expr.hpp"

namespace synthe {

struct FieldDef {
  Symbol name;
  Type type;
};

struct CtorDef {
  Symbol name;
  std::vector<FieldDef> fields;
};

struct AdtDef {
  Symbol name;
  std::vector<Symbol> type_params;
  std::vector<CtorDef> ctors;
  SourcePos pos;
};

struct Param {
  Symbol name;
  Type type;
};

struct Postcondition {
  Symbol binder;
  Expr predicate;
};

struct FunDef {
  Symbol name;
  std::vector<Symbol> type_params;
  std::vector<Param> params;
  Type return_type;
  Expr precondition;  // may be empty
  Expr body;
  std::optional<Postcondition> postcondition;
  SourcePos pos;

  bool is_polymorphic() const { return !type_params.empty(); }
};

/// Where a constructor lives.
struct CtorRef {
  const AdtDef* adt = nullptr;
  const CtorDef* ctor = nullptr;
  std::size_t index = 0;
};

/// ADT and function definitions with name indices. Copying rebuilds the
/// indices; definitions themselves share expression structure.
class Program {
 public:
  Program() = default;
  Program(std::vector<AdtDef> adts, std::vector<FunDef> functions);
  Program(const Program& other);
  Program& operator=(const Program& other);
  Program(Program&&) noexcept = default;
  Program& operator=(Program&&) noexcept = default;

  const std::vector<AdtDef>& adts() const { return adts_; }
  const std::vector<FunDef>& functions() const { return functions_; }

  const AdtDef* find_adt(Symbol name) const;
  const FunDef* find_function(Symbol name) const;
  std::optional<CtorRef> find_ctor(Symbol name) const;

  /// Field types of `ctor` when its ADT is instantiated at `adt_type`.
  std::vector<Type> ctor_field_types(const CtorRef& ctor, const Type& adt_type) const;

  /// Copy with `fn`'s body replaced.
  Program with_body(Symbol fn, Expr body) const;
  Program with_function(FunDef def) const;

 private:
  void reindex();

  std::vector<AdtDef> adts_;
  std::vector<FunDef> functions_;
  std::unordered_map<Symbol, std::size_t> adt_index_;
  std::unordered_map<Symbol, std::size_t> fn_index_;
  std::unordered_map<Symbol, std::pair<std::size_t, std::size_t>> ctor_index_;
};

/// Total AST node count of all function bodies, preconditions and
/// postconditions.
std::size_t program_size(const Program& p);

}  // namespace synthe
