#include "synthe/deadline.hpp"

namespace synthe {

Deadline::Deadline(std::chrono::duration<double> budget, Clock clock) : clock_(std::move(clock)) {
  if (!clock_) clock_ = [] { return std::chrono::steady_clock::now(); };
  start_ = clock_();
  end_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
}

bool Deadline::expired() const { return end_ && clock_() >= *end_; }

std::chrono::duration<double> Deadline::elapsed() const {
  if (!clock_) return std::chrono::duration<double>(0);
  return clock_() - start_;
}

}  // namespace synthe
