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

#include "casp/program.hpp"

#include <algorithm>
#include <set>

#include "casp/error.hpp"

namespace casp {

std::optional<AtomId> Program::find_atom(std::string_view name) const {
  auto it = atom_index_.find(std::string(name));
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VarIndex> Program::find_var(std::string_view name) const {
  auto it = var_index_.find(std::string(name));
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<AtomId> Program::constraint_atoms() const {
  std::vector<AtomId> out;
  for (const auto& [id, expr] : gamma_) out.push_back(id);
  return out;
}

VarIndex ProgramBuilder::declare_var(std::string name, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(ErrorKind::invalid_program,
                "empty domain for variable '" + name + "': " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (program_.var_index_.count(name)) {
    throw Error(ErrorKind::duplicate_declaration, "variable '" + name + "' declared twice");
  }
  auto idx = static_cast<VarIndex>(program_.decls_.size());
  program_.var_index_.emplace(name, idx);
  program_.decls_.push_back(VarDecl{std::move(name), lo, hi});
  return idx;
}

std::optional<VarIndex> ProgramBuilder::find_var(std::string_view name) const { return program_.find_var(name); }

AtomId ProgramBuilder::atom(std::string_view name) {
  auto [it, inserted] = program_.atom_index_.try_emplace(std::string(name), 0);
  if (inserted) {
    it->second = static_cast<AtomId>(program_.atoms_.size());
    program_.atoms_.push_back(Atom{std::string(name), AtomKind::regular});
  }
  return it->second;
}

AtomId ProgramBuilder::constraint_atom(ConstraintExpr expr) {
  auto check_vars = [&](const LinExpr& e) {
    for (const auto& t : e.terms) {
      if (t.var && *t.var >= program_.decls_.size()) {
        throw Error(ErrorKind::undeclared_variable, "constraint refers to an undeclared variable");
      }
    }
  };
  check_vars(expr.lhs);
  check_vars(expr.rhs);
  check_no_overflow(expr, program_.decls_);
  std::string name = to_string(expr, program_.decls_);
  auto [it, inserted] = program_.atom_index_.try_emplace(name, 0);
  if (inserted) {
    it->second = static_cast<AtomId>(program_.atoms_.size());
    program_.atoms_.push_back(Atom{std::move(name), AtomKind::constraint});
    program_.gamma_.emplace(it->second, std::move(expr));
  }
  return it->second;
}

namespace {

void dedupe(std::vector<AtomId>& v) {
  std::vector<AtomId> out;
  out.reserve(v.size());
  for (AtomId a : v) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  v = std::move(out);
}

bool overlaps(const std::vector<AtomId>& a, const std::vector<AtomId>& b) {
  for (AtomId x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

}  // namespace

void ProgramBuilder::add_rule(Rule rule) {
  const auto n = program_.atoms_.size();
  auto known = [&](const std::vector<AtomId>& v) {
    return std::all_of(v.begin(), v.end(), [&](AtomId a) { return a < n; });
  };
  if ((rule.head && *rule.head >= n) || !known(rule.pos) || !known(rule.neg) || !known(rule.negneg)) {
    throw Error(ErrorKind::invalid_program, "rule mentions an unknown atom");
  }
  if (rule.head && program_.atoms_[*rule.head].kind == AtomKind::constraint) {
    throw Error(ErrorKind::constraint_in_head,
                "constraint atom '" + program_.atoms_[*rule.head].name + "' in rule head");
  }
  dedupe(rule.pos);
  dedupe(rule.neg);
  dedupe(rule.negneg);
  if (overlaps(rule.pos, rule.neg) || overlaps(rule.pos, rule.negneg) || overlaps(rule.neg, rule.negneg)) {
    throw Error(ErrorKind::invalid_program, "atom occurs in more than one body list of a rule");
  }
  program_.rules_.push_back(std::move(rule));
}

Program ProgramBuilder::build() && { return std::move(program_); }

namespace {

bool is_choice_rule_for(const Rule& r, AtomId c) {
  return r.head == c && r.pos.empty() && r.neg.empty() && r.negneg.size() == 1 && r.negneg[0] == c;
}

std::set<AtomId> free_constraint_atoms(const Program& p) {
  std::set<AtomId> out;
  for (const auto& r : p.rules()) {
    if (r.head && p.is_constraint(*r.head) && is_choice_rule_for(r, *r.head)) out.insert(*r.head);
  }
  return out;
}

}  // namespace

Program extend_with_choices(const Program& p) {
  Program out = p;
  auto present = free_constraint_atoms(p);
  for (const auto& [c, expr] : p.gamma_table()) {
    if (!present.count(c)) out.rules_.push_back(Rule{c, {}, {}, {c}});
  }
  return out;
}

bool is_choice_extended(const Program& p) {
  auto present = free_constraint_atoms(p);
  return std::all_of(p.gamma_table().begin(), p.gamma_table().end(),
                     [&](const auto& kv) { return present.count(kv.first) > 0; });
}

Program with_extra_rules(const Program& p, std::span<const Rule> extra) {
  Program out = p;
  for (const auto& r : extra) {
    auto ok = [&](const std::vector<AtomId>& v) {
      return std::all_of(v.begin(), v.end(), [&](AtomId a) { return a < p.atom_count(); });
    };
    if ((r.head && *r.head >= p.atom_count()) || !ok(r.pos) || !ok(r.neg) || !ok(r.negneg)) {
      throw Error(ErrorKind::invalid_argument, "rule mentions an unknown atom");
    }
    out.rules_.push_back(r);
  }
  return out;
}

std::vector<AtomId> CandidateModel::positive_atoms() const {
  std::vector<AtomId> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i]) out.push_back(static_cast<AtomId>(i));
  }
  return out;
}

std::vector<ConstraintLit> CandidateModel::constraint_literals(const Program& p) const {
  std::vector<ConstraintLit> out;
  for (const auto& [c, expr] : p.gamma_table()) out.push_back(ConstraintLit{c, values_.at(c)});
  return out;
}

std::string to_string(const CandidateModel& m, const Program& p) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!first) out += ", ";
    first = false;
    if (!m.value(static_cast<AtomId>(i))) out += "-";
    out += p.atom(static_cast<AtomId>(i)).name;
  }
  return out + "}";
}

}  // namespace casp
