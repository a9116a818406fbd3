#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "synthe/expr.hpp"
#include "synthe/program.hpp"

namespace synthe {

class Value;

struct Composite {
  Symbol ctor;  // empty for tuples
  std::vector<Value> elems;
  std::size_t hash = 0;
  std::size_t size = 0;
};

/// Runtime value: Bool, Int, BigInt, tuple or constructor application.
/// Composites are immutable and shared.
class Value {
 public:
  Value() = default;

  static Value boolean(bool b);
  static Value int32(std::int32_t v);
  static Value bigint(BigInt v);
  static Value tuple(std::vector<Value> elems);
  static Value adt(Symbol ctor, std::vector<Value> fields);

  bool is_bool() const { return rep_.index() == 1; }
  bool is_int32() const { return rep_.index() == 2; }
  bool is_bigint() const { return rep_.index() == 3; }
  bool is_tuple() const;
  bool is_adt() const;
  bool empty() const { return rep_.index() == 0; }

  bool as_bool() const { return std::get<bool>(rep_); }
  std::int32_t as_int32() const { return std::get<std::int32_t>(rep_); }
  const BigInt& as_bigint() const { return std::get<BigInt>(rep_); }
  Symbol ctor() const;
  const std::vector<Value>& elems() const;

  std::size_t hash() const;
  std::string str() const;
  std::size_t composite_size() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<std::monostate, bool, std::int32_t, BigInt, std::shared_ptr<const Composite>> rep_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

using Input = std::vector<Value>;

struct InputHash {
  std::size_t operator()(const Input& in) const;
};

std::string input_str(const Input& in);

/// Integers |n|+1; constructor applications 1 + sum of fields; tuples the
/// sum of their elements; booleans 1.
std::size_t value_size(const Value& v);

/// Generation order: value size, then constructor declaration order,
/// nonnegative before negative integers, then fields left to right.
int compare_values(const Program& p, const Value& a, const Value& b);

/// Literal expression denoting `v` at type `t`.
Expr value_to_expr(const Program& p, const Value& v, const Type& t);

/// Converts a ground, call-free literal expression to a value (used for
/// seed examples).
Value expr_to_value(const Program& p, const Expr& e);

/// Enumeration bound: integers with |n| <= bound, constructor nesting depth
/// <= bound (a nullary constructor has depth 1), tuples componentwise.
class ValueDomain {
 public:
  ValueDomain(const Program& p, int bound);

  /// All values of `t` within the bound, in generation order.
  const std::vector<Value>& values(const Type& t);

  /// Calls `f` on every input tuple over `types` in order of summed size,
  /// then lexicographically by component. Stops when `f` returns false.
  void for_each_input(const std::vector<Type>& types, const std::function<bool(const Input&)>& f);

  int bound() const { return bound_; }

 private:
  const std::vector<Value>& values_at_depth(const Type& t, int depth);

  const Program& prog_;
  int bound_;
  std::map<std::pair<Type, int>, std::vector<Value>> cache_;
};

}  // namespace synthe
