#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spg {

/// Malformed input: bad ids, infeasible strategies, domain violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran past its node budget. Never reported as a negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t limit, const std::string& where)
      : std::runtime_error("search budget of " + std::to_string(limit) +
                           " nodes exceeded in " + where),
        limit_(limit),
        where_(where) {}

  std::uint64_t limit() const { return limit_; }
  const std::string& where() const { return where_; }

 private:
  std::uint64_t limit_;
  std::string where_;
};

}  // namespace spg
