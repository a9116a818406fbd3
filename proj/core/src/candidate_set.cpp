#include "synthe/candidate_set.hpp"

#include <algorithm>

namespace synthe {

bool CandidateSet::insert(const Expr& e) {
  if (!index_.insert(e).second) return false;
  items_.push_back(e);
  return true;
}

bool CandidateSet::erase(const Expr& e) {
  if (!index_.erase(e)) return false;
  items_.erase(std::find_if(items_.begin(), items_.end(), [&](const Expr& x) { return expr_equal(x, e); }));
  return true;
}

std::size_t CandidateSet::erase_if(const std::function<bool(const Expr&)>& pred) {
  std::size_t before = items_.size();
  auto it = std::remove_if(items_.begin(), items_.end(), [&](const Expr& x) {
    if (!pred(x)) return false;
    index_.erase(x);
    return true;
  });
  items_.erase(it, items_.end());
  return before - items_.size();
}

}  // namespace synthe
