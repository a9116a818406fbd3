#include "synthe/example_store.hpp"

#include <stdexcept>

namespace synthe {

bool ExampleStore::add(Input in) {
  if (seq_of_.count(in)) return false;
  seq_of_.emplace(in, next_seq_);
  examples_.push_back({std::move(in), 0, next_seq_++});
  return true;
}

void ExampleStore::record_failure(const Input& in) {
  auto it = seq_of_.find(in);
  if (it == seq_of_.end()) throw std::out_of_range("record_failure: unknown input " + input_str(in));
  std::size_t i = 0;
  while (examples_[i].seq != it->second) ++i;
  ++examples_[i].fail_count;
  auto before = [](const Example& a, const Example& b) {
    return a.fail_count > b.fail_count || (a.fail_count == b.fail_count && a.seq < b.seq);
  };
  while (i > 0 && before(examples_[i], examples_[i - 1])) {
    std::swap(examples_[i], examples_[i - 1]);
    --i;
  }
}

std::vector<Input> ExampleStore::inputs() const {
  std::vector<Input> out;
  out.reserve(examples_.size());
  for (const auto& e : examples_) out.push_back(e.input);
  return out;
}

std::size_t ExampleStore::fail_count(const Input& in) const {
  auto it = seq_of_.find(in);
  if (it == seq_of_.end()) throw std::out_of_range("fail_count: unknown input " + input_str(in));
  for (const auto& e : examples_)
    if (e.seq == it->second) return e.fail_count;
  return 0;
}

ExampleStore record_failure(ExampleStore store, const Input& in) {
  store.record_failure(in);
  return store;
}

}  // namespace synthe
