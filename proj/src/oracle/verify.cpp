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

#include <chrono>

#include "geninv/oracle.hpp"

namespace geninv::oracle {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

CaseSink::CaseSink(const TableRing& ring, const Budget& budget)
    : ring_(ring), budget_(budget), start_(now_seconds()) {}

bool CaseSink::check(const std::optional<std::string>& failure, std::initializer_list<Binding> bindings) {
  if (counterexample_ || exhausted_) return false;
  if (budget_.max_cases && cases_ >= *budget_.max_cases) {
    exhausted_ = true;
    return false;
  }
  // The clock is sampled sparsely; the case limit is the deterministic bound.
  if (budget_.max_seconds && (cases_ & 0xfff) == 0 && now_seconds() - start_ > *budget_.max_seconds) {
    exhausted_ = true;
    return false;
  }
  ++cases_;
  if (!failure) return true;
  Counterexample ce;
  ce.detail = *failure;
  for (const Binding& b : bindings) {
    std::string text;
    if (const Index* e = std::get_if<Index>(&b.value)) {
      text = ring_.render(*e);
    } else if (const Set* const* s = std::get_if<const Set*>(&b.value)) {
      text = ring_.render(**s);
    } else {
      text = std::to_string(std::get<Exponent>(b.value).value);
    }
    ce.bindings.emplace_back(b.name, std::move(text));
  }
  counterexample_ = std::move(ce);
  return false;
}

const TheoremCase* find_case(std::string_view id) {
  for (const TheoremCase& c : catalog())
    if (c.id == id) return &c;
  return nullptr;
}

VerificationReport verify(const TheoremCase& theorem, const TableRing& ring, const Budget& budget) {
  VerificationReport report;
  report.ring = ring.spec();
  report.theorem = theorem.id;
  const double start = now_seconds();
  if (theorem.needs_involution && !ring.has_star()) {
    report.applicable = false;
    report.elapsed_seconds = 0;
    return report;
  }
  CaseSink sink(ring, budget);
  theorem.check(ring, sink);
  report.cases_checked = sink.cases();
  report.counterexample = sink.counterexample();
  report.complete = !sink.exhausted();
  report.elapsed_seconds = now_seconds() - start;
  return report;
}

VerificationReport verify(std::string_view id, const RingSpec& ring, const Budget& budget) {
  const TheoremCase* theorem = find_case(id);
  if (!theorem) throw PreconditionError("unknown theorem id: " + std::string(id));
  TableRing table(ring);
  return verify(*theorem, table, budget);
}

}  // namespace geninv::oracle
