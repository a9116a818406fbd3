#include "synthe/types.hpp"

#include <stdexcept>

namespace synthe {

struct Type::Rep {
  Kind kind;
  Symbol name;
  int meta = -1;
  std::vector<Type> args;
};

Type Type::boolean() {
  static const Type t(std::make_shared<const Rep>(Rep{Kind::Bool, {}, -1, {}}));
  return t;
}

Type Type::int32() {
  static const Type t(std::make_shared<const Rep>(Rep{Kind::Int, {}, -1, {}}));
  return t;
}

Type Type::bigint() {
  static const Type t(std::make_shared<const Rep>(Rep{Kind::BigInt, {}, -1, {}}));
  return t;
}

Type Type::tuple(std::vector<Type> elements) {
  return Type(std::make_shared<const Rep>(Rep{Kind::Tuple, {}, -1, std::move(elements)}));
}

Type Type::adt(Symbol name, std::vector<Type> args) {
  return Type(std::make_shared<const Rep>(Rep{Kind::Adt, name, -1, std::move(args)}));
}

Type Type::var(Symbol name) {
  return Type(std::make_shared<const Rep>(Rep{Kind::Var, name, -1, {}}));
}

Type Type::meta(int id) { return Type(std::make_shared<const Rep>(Rep{Kind::Meta, {}, id, {}})); }

Type::Kind Type::kind() const {
  if (!rep_) throw std::logic_error("kind() of unknown type");
  return rep_->kind;
}

bool Type::is_numeric() const {
  return rep_ && (rep_->kind == Kind::Int || rep_->kind == Kind::BigInt);
}

std::span<const Type> Type::args() const {
  if (!rep_) return {};
  return rep_->args;
}

Symbol Type::name() const { return rep_ ? rep_->name : Symbol(); }

int Type::meta_id() const { return rep_ ? rep_->meta : -1; }

bool Type::is_ground() const {
  if (!rep_) return false;
  if (rep_->kind == Kind::Var || rep_->kind == Kind::Meta) return false;
  for (const auto& a : rep_->args)
    if (!a.is_ground()) return false;
  return true;
}

bool Type::mentions_meta() const {
  if (!rep_) return false;
  if (rep_->kind == Kind::Meta) return true;
  for (const auto& a : rep_->args)
    if (a.mentions_meta()) return true;
  return false;
}

std::string Type::str() const {
  if (!rep_) return "?";
  switch (rep_->kind) {
    case Kind::Bool:
      return "Boolean";
    case Kind::Int:
      return "Int";
    case Kind::BigInt:
      return "BigInt";
    case Kind::Var:
      return rep_->name.str();
    case Kind::Meta:
      return "?" + std::to_string(rep_->meta);
    case Kind::Tuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < rep_->args.size(); ++i) {
        if (i) s += ", ";
        s += rep_->args[i].str();
      }
      return s + ")";
    }
    case Kind::Adt: {
      std::string s = rep_->name.str();
      if (!rep_->args.empty()) {
        s += "[";
        for (std::size_t i = 0; i < rep_->args.size(); ++i) {
          if (i) s += ", ";
          s += rep_->args[i].str();
        }
        s += "]";
      }
      return s;
    }
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (!a.rep_) return std::strong_ordering::less;
  if (!b.rep_) return std::strong_ordering::greater;
  if (auto c = a.rep_->kind <=> b.rep_->kind; c != 0) return c;
  if (auto c = a.rep_->name <=> b.rep_->name; c != 0) return c;
  if (auto c = a.rep_->meta <=> b.rep_->meta; c != 0) return c;
  if (auto c = a.rep_->args.size() <=> b.rep_->args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.rep_->args.size(); ++i)
    if (auto c = a.rep_->args[i] <=> b.rep_->args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Type substitute_type(const Type& t, const TypeSubst& subst) {
  if (!t.known()) return t;
  switch (t.kind()) {
    case Type::Kind::Var: {
      auto it = subst.find(t.name());
      return it == subst.end() ? t : it->second;
    }
    case Type::Kind::Tuple: {
      std::vector<Type> elems;
      for (const auto& e : t.args()) elems.push_back(substitute_type(e, subst));
      return Type::tuple(std::move(elems));
    }
    case Type::Kind::Adt: {
      if (t.args().empty()) return t;
      std::vector<Type> args;
      for (const auto& e : t.args()) args.push_back(substitute_type(e, subst));
      return Type::adt(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

}  // namespace synthe
