#pragma once

#include <chrono>
#include <optional>

namespace fiberforge {

/// Wall-clock deadline for long computations. Unlimited by default.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  static Budget unlimited() { return Budget{}; }
  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(s));
    return b;
  }

  bool limited() const noexcept { return deadline_.has_value(); }
  bool expired() const { return deadline_ && Clock::now() > *deadline_; }

 private:
  std::optional<Clock::time_point> deadline_;
};

}  // namespace fiberforge
