#include "synthe/program.hpp"

#include <stdexcept>

namespace synthe {

Program::Program(std::vector<AdtDef> adts, std::vector<FunDef> functions)
    : adts_(std::move(adts)), functions_(std::move(functions)) {
  reindex();
}

Program::Program(const Program& other) : adts_(other.adts_), functions_(other.functions_) {
  reindex();
}

Program& Program::operator=(const Program& other) {
  if (this != &other) {
    adts_ = other.adts_;
    functions_ = other.functions_;
    reindex();
  }
  return *this;
}

void Program::reindex() {
  adt_index_.clear();
  fn_index_.clear();
  ctor_index_.clear();
  for (std::size_t i = 0; i < adts_.size(); ++i) {
    adt_index_[adts_[i].name] = i;
    for (std::size_t j = 0; j < adts_[i].ctors.size(); ++j)
      ctor_index_[adts_[i].ctors[j].name] = {i, j};
  }
  for (std::size_t i = 0; i < functions_.size(); ++i) fn_index_[functions_[i].name] = i;
}

const AdtDef* Program::find_adt(Symbol name) const {
  auto it = adt_index_.find(name);
  return it == adt_index_.end() ? nullptr : &adts_[it->second];
}

const FunDef* Program::find_function(Symbol name) const {
  auto it = fn_index_.find(name);
  return it == fn_index_.end() ? nullptr : &functions_[it->second];
}

std::optional<CtorRef> Program::find_ctor(Symbol name) const {
  auto it = ctor_index_.find(name);
  if (it == ctor_index_.end()) return std::nullopt;
  const AdtDef& adt = adts_[it->second.first];
  return CtorRef{&adt, &adt.ctors[it->second.second], it->second.second};
}

std::vector<Type> Program::ctor_field_types(const CtorRef& ctor, const Type& adt_type) const {
  TypeSubst subst;
  auto args = adt_type.args();
  for (std::size_t i = 0; i < ctor.adt->type_params.size() && i < args.size(); ++i)
    subst[ctor.adt->type_params[i]] = args[i];
  std::vector<Type> out;
  for (const auto& f : ctor.ctor->fields) out.push_back(substitute_type(f.type, subst));
  return out;
}

Program Program::with_body(Symbol fn, Expr body) const {
  Program copy = *this;
  auto it = copy.fn_index_.find(fn);
  if (it == copy.fn_index_.end()) throw std::invalid_argument("unknown function " + fn.str());
  copy.functions_[it->second].body = std::move(body);
  return copy;
}

Program Program::with_function(FunDef def) const {
  Program copy = *this;
  auto it = copy.fn_index_.find(def.name);
  if (it == copy.fn_index_.end()) {
    copy.functions_.push_back(std::move(def));
    copy.reindex();
  } else {
    copy.functions_[it->second] = std::move(def);
  }
  return copy;
}

std::size_t program_size(const Program& p) {
  std::size_t n = 0;
  for (const auto& f : p.functions()) {
    n += expr_size(f.body);
    if (f.precondition) n += expr_size(f.precondition);
    if (f.postcondition) n += expr_size(f.postcondition->predicate);
  }
  return n;
}

}  // namespace synthe
