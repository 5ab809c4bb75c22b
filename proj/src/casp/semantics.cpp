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

#include "casp/semantics.hpp"

#include <algorithm>
#include <map>

#include "casp/error.hpp"
#include "casp/theory_solver.hpp"

namespace casp {

TheoryCheck default_theory_check(const Program& p) {
  return [&p](std::span<const ConstraintLit> lits) {
    return check_literals(lits, p.gamma_table(), p.decls()).status == TheoryVerdict::Status::sat;
  };
}

std::vector<bool> reduct_least_model(const Program& p, const std::vector<bool>& m) {
  std::vector<const Rule*> reduct;
  for (const auto& r : p.rules()) {
    if (r.is_falsum()) continue;
    bool keep = std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m[a]; }) &&
                std::all_of(r.negneg.begin(), r.negneg.end(), [&](AtomId a) { return m[a]; });
    if (keep) reduct.push_back(&r);
  }
  // Naive fixpoint; at most |reduct| productive rounds.
  std::vector<bool> lm(p.atom_count(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule* r : reduct) {
      if (lm[*r->head]) continue;
      if (std::all_of(r->pos.begin(), r->pos.end(), [&](AtomId a) { return lm[a]; })) {
        lm[*r->head] = true;
        changed = true;
      }
    }
  }
  return lm;
}

bool is_stable(const Program& pic, const std::vector<bool>& m) {
  if (reduct_least_model(pic, m) != m) return false;
  for (const auto& r : pic.rules()) {
    if (!r.is_falsum()) continue;
    bool fires = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return m[a]; }) &&
                 std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m[a]; }) &&
                 std::all_of(r.negneg.begin(), r.negneg.end(), [&](AtomId a) { return m[a]; });
    if (fires) return false;
  }
  return true;
}

bool is_answer_set(const Program& p, const CandidateModel& m, const TheoryCheck& theory) {
  if (m.size() != p.atom_count()) {
    throw Error(ErrorKind::precondition, "candidate model does not assign every atom of the program");
  }
  if (!is_stable(extend_with_choices(p), m.values())) return false;
  auto lits = m.constraint_literals(p);
  return theory(lits);
}

std::vector<CandidateModel> enumerate_answer_sets_oracle(const Program& p, const TheoryCheck& theory) {
  const std::size_t n = p.atom_count();
  if (n > kOracleAtomLimit) {
    throw Error(ErrorKind::precondition,
                "oracle enumeration limited to " + std::to_string(kOracleAtomLimit) + " atoms, program has " +
                    std::to_string(n));
  }
  const Program pic = extend_with_choices(p);
  const auto catoms = p.constraint_atoms();
  std::map<std::vector<bool>, bool> theory_cache;

  std::vector<CandidateModel> out;
  std::vector<bool> m(n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i] = (k >> (n - 1 - i)) & 1U;
    if (!is_stable(pic, m)) continue;
    std::vector<bool> key;
    std::vector<ConstraintLit> lits;
    for (AtomId c : catoms) {
      key.push_back(m[c]);
      lits.push_back(ConstraintLit{c, m[c]});
    }
    auto it = theory_cache.find(key);
    if (it == theory_cache.end()) it = theory_cache.emplace(key, theory(lits)).first;
    if (it->second) out.emplace_back(m);
  }
  return out;
}

}  // namespace casp
