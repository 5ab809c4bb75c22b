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

#include "casp/linear.hpp"

#include <cstdlib>
#include <limits>

#include "casp/error.hpp"

namespace casp {

Rel complement(Rel r) {
  switch (r) {
    case Rel::lt: return Rel::ge;
    case Rel::le: return Rel::gt;
    case Rel::gt: return Rel::le;
    case Rel::ge: return Rel::lt;
    case Rel::eq: return Rel::ne;
    case Rel::ne: return Rel::eq;
  }
  return r;
}

std::string_view rel_token(Rel r) {
  switch (r) {
    case Rel::lt: return "#<";
    case Rel::le: return "#<=";
    case Rel::gt: return "#>";
    case Rel::ge: return "#>=";
    case Rel::eq: return "#=";
    case Rel::ne: return "#!=";
  }
  return "?";
}

Wide evaluate(const LinExpr& e, std::span<const std::int64_t> values) {
  Wide sum = 0;
  for (const auto& t : e.terms) {
    sum += t.var ? Wide{t.coef} * Wide{values[*t.var]} : Wide{t.coef};
  }
  return sum;
}

bool holds(Rel r, Wide lhs, Wide rhs) {
  switch (r) {
    case Rel::lt: return lhs < rhs;
    case Rel::le: return lhs <= rhs;
    case Rel::gt: return lhs > rhs;
    case Rel::ge: return lhs >= rhs;
    case Rel::eq: return lhs == rhs;
    case Rel::ne: return lhs != rhs;
  }
  return false;
}

bool satisfies(const ConstraintExpr& c, std::span<const std::int64_t> values) {
  return holds(c.rel, evaluate(c.lhs, values), evaluate(c.rhs, values));
}

namespace {

std::string magnitude(std::int64_t v) {
  // |INT64_MIN| never reaches here: the parser rejects it and builders negate
  // only parsed magnitudes.
  return std::to_string(v < 0 ? -v : v);
}

}  // namespace

std::string to_string(const LinExpr& e, std::span<const VarDecl> decls) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms) {
    if (first) {
      if (t.coef < 0) out += "-";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    first = false;
    if (!t.var) {
      out += magnitude(t.coef);
    } else if (t.coef == 1 || t.coef == -1) {
      out += decls[*t.var].name;
    } else {
      out += magnitude(t.coef);
      out += "*";
      out += decls[*t.var].name;
    }
  }
  return out;
}

std::string to_string(const ConstraintExpr& c, std::span<const VarDecl> decls) {
  std::string out = to_string(c.lhs, decls);
  out += " ";
  out += rel_token(c.rel);
  out += " ";
  out += to_string(c.rhs, decls);
  return out;
}

void check_no_overflow(const ConstraintExpr& c, std::span<const VarDecl> decls) {
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  Wide bound = 0;
  auto add = [&](const LinExpr& e) {
    for (const auto& t : e.terms) {
      Wide coef = t.coef < 0 ? -Wide{t.coef} : Wide{t.coef};
      if (!t.var) {
        bound += coef;
      } else {
        const auto& d = decls[*t.var];
        Wide lo = d.lo < 0 ? -Wide{d.lo} : Wide{d.lo};
        Wide hi = d.hi < 0 ? -Wide{d.hi} : Wide{d.hi};
        bound += coef * (lo > hi ? lo : hi);
      }
      if (bound > kMax) {
        throw Error(ErrorKind::invalid_program,
                    "constraint '" + to_string(c, decls) + "' may overflow 64-bit arithmetic");
      }
    }
  };
  add(c.lhs);
  add(c.rhs);
}

}  // namespace casp
