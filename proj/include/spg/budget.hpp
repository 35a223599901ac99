#pragma once

#include <cstdint>
#include <string_view>

#include "spg/error.hpp"

namespace spg {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Node budget from SPG_BUDGET, falling back to kDefaultBudget.
std::uint64_t default_budget();

/// Node counter shared by every search performed on behalf of one call.
class Budget {
 public:
  Budget() : Budget(default_budget()) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::string_view where, std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(limit_, std::string(where));
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace spg
