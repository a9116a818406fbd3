#pragma once

#include <stdexcept>
#include <string>

#include "synthe/program.hpp"

namespace synthe {

class MonomorphizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mangled name of `fn` at the given type arguments, e.g. `decode$Int`.
std::string mangle(Symbol fn, const std::vector<Type>& type_args);

/// Instantiates every polymorphic function with `inst` (type parameter name
/// to concrete type), plus any further instances reached through calls.
/// Input must be elaborated. Monomorphic functions are kept unchanged and
/// polymorphic ones are replaced by their instances; ADT declarations stay
/// generic. Throws MonomorphizeError when a type parameter has no
/// instantiation.
Program monomorphize(const Program& p, const TypeSubst& inst);

/// The instantiation used by default: every type parameter of every
/// function mapped to Int.
TypeSubst default_instantiation(const Program& p);

}  // namespace synthe
