// Copyright 2026 The casp-schemas Authors
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

#ifndef CASP_ERROR_HPP
#define CASP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace casp {

enum class ErrorKind {
  syntax,
  undeclared_variable,
  constraint_in_head,
  duplicate_declaration,
  invalid_program,
  invalid_argument,
  unsupported,
  precondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure located at a 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& msg)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A wall-clock or conflict budget ran out before a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("budget exhausted") {}
};

}  // namespace casp

#endif  // CASP_ERROR_HPP
