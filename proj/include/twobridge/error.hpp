// Copyright 2026 The twobridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOBRIDGE_ERROR_HPP
#define TWOBRIDGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

/// Domain error categories. Every recoverable failure in the library is
/// reported as a twobridge::Error carrying one of these.
enum class ErrorKind {
  LinkNotKnot,
  NotReduced,
  DegenerateValue,
  DefinedAsZero,
  DivisionByZero,
  DegreeCap,
  NotSymmetric,
  DeterminantNotOne,
  ShapeViolation,
  WordTooLong,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LinkNotKnot: return "LinkNotKnot";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DegenerateValue: return "DegenerateValue";
    case ErrorKind::DefinedAsZero: return "DefinedAsZero";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::WordTooLong: return "WordTooLong";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twobridge

#endif  // TWOBRIDGE_ERROR_HPP
