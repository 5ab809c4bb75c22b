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

#ifndef CASP_PARSER_HPP
#define CASP_PARSER_HPP

#include <string>
#include <string_view>

#include "casp/program.hpp"

namespace casp {

/// Parses the ground program format:
///
///   a :- b, not c, not not d.     % rule
///   #false :- a.                  % or ":- a."
///   {a}.                          % choice, read as a :- not not a.
///   #var X 0..24.
///   am :- X #< 12.                % constraint atom
///
/// Throws ParseError carrying line and column.
Program parse_program(std::string_view text);

/// Canonical text. `parse_program(print_program(p)) == p` holds.
std::string print_program(const Program& p);

}  // namespace casp

#endif  // CASP_PARSER_HPP
