// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "scissors/errors.hpp"

namespace scissors {

/// Step counter shared by the enumerations of one operation. Every search
/// ticks it; crossing the limit throws BudgetExceeded.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 200'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void tick(std::string_view where, std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExceeded(std::string(where));
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace scissors
