// Copyright 2026 The geninv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared helpers for the catalog checkers. Everything here works on table
// indices only.

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geninv/oracle.hpp"

namespace geninv::oracle::detail {

using Failure = std::optional<std::string>;

struct Clause {
  const char* label;
  bool holds;
};

inline std::string verdict(const Clause& c) { return std::string(c.label) + (c.holds ? " holds" : " fails"); }

// First clause whose truth value differs from the first one.
inline Failure equivalent(const std::vector<Clause>& clauses) {
  for (std::size_t i = 1; i < clauses.size(); ++i)
    if (clauses[i].holds != clauses[0].holds) return verdict(clauses[0]) + " but " + verdict(clauses[i]);
  return std::nullopt;
}

inline Failure equivalent(std::initializer_list<Clause> clauses) { return equivalent(std::vector<Clause>(clauses)); }

inline Failure implies(const Clause& hypothesis, const Clause& conclusion) {
  if (hypothesis.holds && !conclusion.holds) return verdict(hypothesis) + " but " + verdict(conclusion);
  return std::nullopt;
}

inline Failure require(const Clause& c) {
  if (!c.holds) return verdict(c);
  return std::nullopt;
}

inline Failure first_failure(std::initializer_list<Failure> failures) {
  for (const Failure& f : failures)
    if (f) return f;
  return std::nullopt;
}

inline Failure first_failure(const std::vector<Failure>& failures) {
  for (const Failure& f : failures)
    if (f) return f;
  return std::nullopt;
}

inline Set singleton(const TableRing& r, Index a) {
  Set s = r.empty_set();
  s.set(a);
  return s;
}

inline Set of_list(const TableRing& r, const std::vector<Index>& xs) {
  Set s = r.empty_set();
  for (Index x : xs) s.set(x);
  return s;
}

// a{1} for every a, in canonical order.
std::vector<std::vector<Index>> inner_inverses(const TableRing& r);

// Index and Drazin inverse by brute force; nullopt for elements without one.
struct DrazinData {
  unsigned index = 0;
  Index inverse = 0;
};
std::vector<std::optional<DrazinData>> drazin_table(const TableRing& r);

// Invertible symmetric elements: the admissible weights.
std::vector<Index> weights(const TableRing& r);
std::vector<Index> idempotents(const TableRing& r);

// Catalog sections.
void add_basic_cases(std::vector<TheoremCase>& out);
void add_projector_cases(std::vector<TheoremCase>& out);
void add_prescribed_cases(std::vector<TheoremCase>& out);
void add_reflexive_cases(std::vector<TheoremCase>& out);
void add_star_cases(std::vector<TheoremCase>& out);
void add_weighted_cases(std::vector<TheoremCase>& out);
void add_bc_pq_cases(std::vector<TheoremCase>& out);

}  // namespace geninv::oracle::detail
