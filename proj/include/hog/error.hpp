// Copyright 2026 The hog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hog {

enum class ErrorKind {
  kInvalidArgument,
  kTypeMismatch,
  kCoordinateOutOfRange,
  kIncompleteOrder,
  kBudgetExceeded,
  kInvalidProfile,
  kPlayerOutOfRange,
  kUnknownBuiltin,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kTypeMismatch: return "TypeMismatch";
    case ErrorKind::kCoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorKind::kIncompleteOrder: return "IncompleteOrder";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kInvalidProfile: return "InvalidProfile";
    case ErrorKind::kPlayerOutOfRange: return "PlayerOutOfRange";
    case ErrorKind::kUnknownBuiltin: return "UnknownBuiltin";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so that callers (the
// CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hog
