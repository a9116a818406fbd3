#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "synthe/value.hpp"

namespace synthe {

struct Example {
  Input input;
  std::size_t fail_count = 0;
  std::size_t seq = 0;  // insertion index
};

/// Test inputs ordered by fail count (descending); ties keep insertion
/// order. Inputs are unique.
class ExampleStore {
 public:
  /// Appends `in` with fail count 0; false if already present.
  bool add(Input in);
  /// Increments the fail count of `in` and restores the order.
  /// Throws std::out_of_range for an unknown input.
  void record_failure(const Input& in);

  const std::vector<Example>& examples() const { return examples_; }
  std::vector<Input> inputs() const;
  std::size_t size() const { return examples_.size(); }
  bool empty() const { return examples_.empty(); }
  bool contains(const Input& in) const { return seq_of_.count(in) > 0; }
  std::size_t fail_count(const Input& in) const;

 private:
  std::vector<Example> examples_;
  std::unordered_map<Input, std::size_t, InputHash> seq_of_;
  std::size_t next_seq_ = 0;
};

ExampleStore record_failure(ExampleStore store, const Input& in);

}  // namespace synthe
