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

#ifndef CASP_LINEAR_HPP
#define CASP_LINEAR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casp {

using VarIndex = std::uint32_t;
using Wide = __int128;

/// Relation of a linear constraint.
enum class Rel : std::uint8_t { lt, le, gt, ge, eq, ne };

/// The relation satisfied exactly when `r` is not (< with >=, <= with >, = with !=).
Rel complement(Rel r);
std::string_view rel_token(Rel r);

/// A single summand: `coef * var`, or the constant `coef` when `var` is empty.
struct LinTerm {
  std::int64_t coef = 0;
  std::optional<VarIndex> var;

  friend bool operator==(const LinTerm&, const LinTerm&) = default;
};

/// Terms are kept in source order; like terms are not merged, so two
/// syntactically different expressions stay distinct.
struct LinExpr {
  std::vector<LinTerm> terms;

  friend bool operator==(const LinExpr&, const LinExpr&) = default;
};

struct ConstraintExpr {
  LinExpr lhs;
  Rel rel = Rel::eq;
  LinExpr rhs;

  friend bool operator==(const ConstraintExpr&, const ConstraintExpr&) = default;
};

struct VarDecl {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

/// Values indexed by VarIndex.
using Evaluation = std::vector<std::int64_t>;

Wide evaluate(const LinExpr& e, std::span<const std::int64_t> values);
bool holds(Rel r, Wide lhs, Wide rhs);
bool satisfies(const ConstraintExpr& c, std::span<const std::int64_t> values);

/// Canonical text of a constraint, e.g. `2*A + B #= 10`.
std::string to_string(const ConstraintExpr& c, std::span<const VarDecl> decls);
std::string to_string(const LinExpr& e, std::span<const VarDecl> decls);

/// Throws casp::Error if some in-domain evaluation of `lhs - rhs` leaves the
/// signed 64-bit range.
void check_no_overflow(const ConstraintExpr& c, std::span<const VarDecl> decls);

}  // namespace casp

#endif  // CASP_LINEAR_HPP
