// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ils {

enum class ErrorCode {
  SyntaxError,
  EmptyStatement,
  DuplicateRelation,
  BadValue,
  UnknownRelation,
  MissingAxis,
  DuplicateAxis,
  SelfLink,
  UnknownNode,
  UnknownLink,
  FadedLink,
  NotFaded,
  EmptyReport,
  BadHeader,
  CorruptRecord,
  InvariantViolation,
  InvalidArgument,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyStatement: return "EmptyStatement";
    case ErrorCode::DuplicateRelation: return "DuplicateRelation";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::MissingAxis: return "MissingAxis";
    case ErrorCode::DuplicateAxis: return "DuplicateAxis";
    case ErrorCode::SelfLink: return "SelfLink";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownLink: return "UnknownLink";
    case ErrorCode::FadedLink: return "FadedLink";
    case ErrorCode::NotFaded: return "NotFaded";
    case ErrorCode::EmptyReport: return "EmptyReport";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::CorruptRecord: return "CorruptRecord";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every engine failure is reported as an `ils::Error` carrying a code that
/// callers (and the CLI exit path) can dispatch on. `what()` is
/// "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ils
