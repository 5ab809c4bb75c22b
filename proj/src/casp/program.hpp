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

#ifndef CASP_PROGRAM_HPP
#define CASP_PROGRAM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "casp/linear.hpp"

namespace casp {

using AtomId = std::uint32_t;

enum class AtomKind : std::uint8_t { regular, constraint };

struct Atom {
  std::string name;
  AtomKind kind = AtomKind::regular;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// `head :- pos, not neg, not not negneg.`  An empty head is falsum.
struct Rule {
  std::optional<AtomId> head;
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;
  std::vector<AtomId> negneg;

  bool is_falsum() const { return !head.has_value(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A signed constraint atom.
struct ConstraintLit {
  AtomId atom = 0;
  bool positive = true;

  friend auto operator<=>(const ConstraintLit&, const ConstraintLit&) = default;
};

using GammaTable = std::map<AtomId, ConstraintExpr>;

class ProgramBuilder;

/// A ground logic program with constraint atoms. Atoms are interned to dense
/// ids in order of first occurrence. Immutable once built.
class Program {
 public:
  Program() = default;

  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Rule> rules() const { return rules_; }
  std::span<const VarDecl> decls() const { return decls_; }
  const GammaTable& gamma_table() const { return gamma_; }

  std::size_t atom_count() const { return atoms_.size(); }
  const Atom& atom(AtomId id) const { return atoms_.at(id); }
  bool is_constraint(AtomId id) const { return atoms_.at(id).kind == AtomKind::constraint; }
  std::optional<AtomId> find_atom(std::string_view name) const;
  std::optional<VarIndex> find_var(std::string_view name) const;
  /// Constraint atom ids in increasing order.
  std::vector<AtomId> constraint_atoms() const;

  friend bool operator==(const Program& a, const Program& b) {
    return a.atoms_ == b.atoms_ && a.rules_ == b.rules_ && a.decls_ == b.decls_ && a.gamma_ == b.gamma_;
  }

 private:
  friend class ProgramBuilder;
  friend Program extend_with_choices(const Program& p);
  friend Program with_extra_rules(const Program& p, std::span<const Rule> extra);

  std::vector<Atom> atoms_;
  std::vector<Rule> rules_;
  std::vector<VarDecl> decls_;
  GammaTable gamma_;
  std::unordered_map<std::string, AtomId> atom_index_;
  std::unordered_map<std::string, VarIndex> var_index_;
};

/// Incremental construction with validation. Variables must be declared
/// before a constraint mentioning them is interned.
class ProgramBuilder {
 public:
  VarIndex declare_var(std::string name, std::int64_t lo, std::int64_t hi);
  std::optional<VarIndex> find_var(std::string_view name) const;

  AtomId atom(std::string_view name);
  AtomId constraint_atom(ConstraintExpr expr);

  /// Adds a rule; a head that is a constraint atom is rejected.
  void add_rule(Rule rule);
  void add_fact(AtomId head) { add_rule(Rule{head, {}, {}, {}}); }
  /// `{a}.`, i.e. `a :- not not a.`
  void add_choice(AtomId a) { add_rule(Rule{a, {}, {}, {a}}); }
  /// `:- pos, not neg.`
  void add_constraint(std::vector<AtomId> pos, std::vector<AtomId> neg = {}) {
    add_rule(Rule{std::nullopt, std::move(pos), std::move(neg), {}});
  }

  const std::vector<VarDecl>& decls() const { return program_.decls_; }
  Program build() &&;

 private:
  Program program_;
};

/// Pi^C: `p` plus `c :- not not c.` for every constraint atom not already free.
Program extend_with_choices(const Program& p);
/// `p` with `extra` appended; rules may only mention atoms of `p`.
Program with_extra_rules(const Program& p, std::span<const Rule> extra);
/// True when every constraint atom of `p` has its choice rule.
bool is_choice_extended(const Program& p);

/// Complete, consistent assignment to the atoms of a program.
class CandidateModel {
 public:
  CandidateModel() = default;
  explicit CandidateModel(std::vector<bool> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool value(AtomId a) const { return values_.at(a); }
  const std::vector<bool>& values() const { return values_; }

  /// M+ : the atoms assigned true.
  std::vector<AtomId> positive_atoms() const;
  /// M^C : every constraint atom of `p` with its sign.
  std::vector<ConstraintLit> constraint_literals(const Program& p) const;

  friend bool operator==(const CandidateModel&, const CandidateModel&) = default;
  friend bool operator<(const CandidateModel& a, const CandidateModel& b) { return a.values_ < b.values_; }

 private:
  std::vector<bool> values_;
};

std::string to_string(const CandidateModel& m, const Program& p);

}  // namespace casp

#endif  // CASP_PROGRAM_HPP
