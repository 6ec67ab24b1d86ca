// Copyright 2026 The acalg Authors. All Rights Reserved.
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

#ifndef ACALG_ERRORS_HPP
#define ACALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acalg {

/// Base of every engine error. `kind()` is a stable machine-readable tag
/// (used verbatim in the CLI's JSON error objects).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ACALG_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

ACALG_DEFINE_ERROR(NonHomogeneousOperand);
ACALG_DEFINE_ERROR(InvalidDegree);
ACALG_DEFINE_ERROR(NotInLieAlgebra);
ACALG_DEFINE_ERROR(OutOfDomain);
ACALG_DEFINE_ERROR(NotADifferential);
ACALG_DEFINE_ERROR(NotWellDefined);
ACALG_DEFINE_ERROR(InternalInconsistency);
ACALG_DEFINE_ERROR(DegeneratePoint);
ACALG_DEFINE_ERROR(UnverifiedRep);
ACALG_DEFINE_ERROR(IdealNotKilled);
ACALG_DEFINE_ERROR(LabelClash);
ACALG_DEFINE_ERROR(SchemaError);
ACALG_DEFINE_ERROR(DimensionMismatch);
ACALG_DEFINE_ERROR(DivisionByZero);

#undef ACALG_DEFINE_ERROR

/// Malformed text input. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error("SyntaxError", message + " at line " + std::to_string(line) +
                                 ", column " + std::to_string(column)),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace acalg

#endif  // ACALG_ERRORS_HPP
