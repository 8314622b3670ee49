// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace scissors {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown ids, non-cospans, invalid documents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A hypothesis required by an operation does not hold (e.g. a sink
/// condition fails before building the sink group).
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// Unreadable input: I/O failures and malformed documents.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An enumeration ran past its step budget. Never a disproof.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& where)
      : Error("budget exhausted in " + where) {}
};

}  // namespace scissors
