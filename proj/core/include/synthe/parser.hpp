#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "synthe/expr.hpp"
#include "synthe/program.hpp"

namespace synthe {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& msg);
  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

/// Parses a whole benchmark file and resolves names: every variable must be
/// bound, every called name must be a function or constructor of matching
/// arity, every type name must be a declared ADT.
Program parse_program(std::string_view text);

/// Parses one expression. With `context`, applications are resolved against
/// its constructors and functions; free variables are allowed.
Expr parse_expr(std::string_view text, const Program* context = nullptr);

Type parse_type(std::string_view text, const Program* context = nullptr);

}  // namespace synthe
