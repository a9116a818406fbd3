#pragma once

#include <chrono>
#include <functional>
#include <optional>

namespace synthe {

using TimePoint = std::chrono::steady_clock::time_point;
using Clock = std::function<TimePoint()>;

/// Wall-clock budget with an injectable clock (tests pass a stub).
class Deadline {
 public:
  /// Never expires.
  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget, Clock clock = {});

  bool expired() const;
  std::chrono::duration<double> elapsed() const;

 private:
  Clock clock_;
  TimePoint start_{};
  std::optional<TimePoint> end_;
};

}  // namespace synthe
