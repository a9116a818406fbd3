#pragma once

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "synthe/symbol.hpp"

namespace synthe {

/// A type of the object language. Immutable and cheap to copy. A
/// default-constructed Type is "unknown" and only appears before
/// elaboration.
class Type {
 public:
  enum class Kind { Bool, Int, BigInt, Tuple, Adt, Var, Meta };

  Type() = default;

  static Type boolean();
  static Type int32();
  static Type bigint();
  static Type tuple(std::vector<Type> elements);
  static Type adt(Symbol name, std::vector<Type> args = {});
  /// A declared type parameter, e.g. the `A` of `List[A]`.
  static Type var(Symbol name);
  /// Inference variable; only the type checker creates these.
  static Type meta(int id);

  bool known() const { return rep_ != nullptr; }
  Kind kind() const;
  bool is_numeric() const;

  /// Tuple elements or ADT arguments.
  std::span<const Type> args() const;
  /// ADT or type-variable name.
  Symbol name() const;
  int meta_id() const;

  /// True if no Var or Meta occurs anywhere.
  bool is_ground() const;
  bool mentions_meta() const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Rep;
  explicit Type(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

inline std::ostream& operator<<(std::ostream& os, const Type& t) { return os << t.str(); }

using TypeSubst = std::map<Symbol, Type>;

/// Replace type variables according to `subst`; unmapped variables stay.
Type substitute_type(const Type& t, const TypeSubst& subst);

}  // namespace synthe
