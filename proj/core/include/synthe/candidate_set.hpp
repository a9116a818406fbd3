#pragma once

#include <cstddef>
#include <functional>
#include <unordered_set>
#include <vector>

#include "synthe/expr.hpp"

namespace synthe {

/// Insertion-ordered set of candidate terms, all generated at one size.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::size_t origin_size) : origin_size_(origin_size) {}

  /// False if already present.
  bool insert(const Expr& e);
  bool erase(const Expr& e);
  /// Removes every member for which `pred` holds; returns how many.
  std::size_t erase_if(const std::function<bool(const Expr&)>& pred);
  bool contains(const Expr& e) const { return index_.count(e) != 0; }

  const std::vector<Expr>& candidates() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::size_t origin_size() const { return origin_size_; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Expr> items_;
  std::unordered_set<Expr, ExprHash, ExprEq> index_;
  std::size_t origin_size_ = 0;
};

}  // namespace synthe
