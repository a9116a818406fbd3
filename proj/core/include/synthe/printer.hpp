#pragma once

#include <string>

#include "synthe/expr.hpp"
#include "synthe/program.hpp"

namespace synthe {

std::string print_type(const Type& t);
std::string print_pattern(const Pattern& p);
std::string print_literal(const LitValue& v);

/// Surface syntax; the output re-parses to the same tree.
std::string print_expr(const Expr& e);
std::string print_function(const FunDef& f);
std::string print_adt(const AdtDef& a);
std::string print_program(const Program& p);

}  // namespace synthe
