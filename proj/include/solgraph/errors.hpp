#pragma once

#include <stdexcept>
#include <string>

namespace solgraph {

/// A requested enumeration would exceed the configured element cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::uint64_t order, std::uint64_t cap)
      : std::runtime_error("group order " + std::to_string(order) +
                           " exceeds the enumeration cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// A subgroup series kept strictly descending past its length limit.
class SeriesLimitError : public std::runtime_error {
 public:
  explicit SeriesLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive tuple scan would exceed the configured work budget.
class WorkBudgetError : public std::runtime_error {
 public:
  explicit WorkBudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace solgraph
