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

#include "geninv/inverses.hpp"

#include <charconv>
#include <sstream>

namespace geninv {

EquationSet::EquationSet(std::initializer_list<int> equations) {
  for (int e : equations) add(e);
}

EquationSet& EquationSet::add(int equation) {
  if (equation < 1 || equation > 9) throw StructuralError("unknown equation " + std::to_string(equation));
  bits_.set(equation);
  return *this;
}

EquationSet& EquationSet::add_power_left(unsigned k) {
  if (k == 0) throw StructuralError("equation 1^k needs k >= 1");
  power_left_ = k;
  return *this;
}

EquationSet& EquationSet::add_power_right(unsigned k) {
  if (k == 0) throw StructuralError("equation ^k1 needs k >= 1");
  power_right_ = k;
  return *this;
}

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view token) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw StructuralError("malformed equation token '" + std::string(token) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

EquationSet EquationSet::parse(std::string_view text) {
  EquationSet set;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    if (token.empty()) throw StructuralError("empty equation token");
    if (token.front() == '^') {
      if (token.size() < 3 || token.back() != '1') {
        throw StructuralError("malformed equation token '" + std::string(token) + "'");
      }
      set.add_power_right(parse_unsigned(token.substr(1, token.size() - 2), token));
    } else if (token.size() > 2 && token.substr(0, 2) == "1^") {
      set.add_power_left(parse_unsigned(token.substr(2), token));
    } else {
      set.add(static_cast<int>(parse_unsigned(token, token)));
    }
  }
  if (set.empty()) throw StructuralError("no equations given");
  return set;
}

std::string EquationSet::str() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  for (int e = 1; e <= 9; ++e) {
    if (bits_.test(e)) sep(), out << e;
  }
  if (power_left_) sep(), out << "1^" << *power_left_;
  if (power_right_) sep(), out << '^' << *power_right_ << '1';
  return out.str();
}

bool satisfies(const Element& a, const Element& x, const EquationSet& eqs) {
  if (!same_ring(a.ring(), x.ring())) throw StructuralError("satisfies: ring mismatch");
  if (eqs.needs_involution()) a.ring().require_involution();
  std::optional<Element> ax;
  std::optional<Element> xa;
  auto get_ax = [&]() -> const Element& {
    if (!ax) ax = a * x;
    return *ax;
  };
  auto get_xa = [&]() -> const Element& {
    if (!xa) xa = x * a;
    return *xa;
  };
  if (eqs.has(1) && get_ax() * a != a) return false;
  if (eqs.has(2) && get_xa() * x != x) return false;
  if (eqs.has(3) && get_ax().star() != get_ax()) return false;
  if (eqs.has(4) && get_xa().star() != get_xa()) return false;
  if (eqs.has(5) && get_ax() != get_xa()) return false;
  if (eqs.has(6) && get_xa() * a != a) return false;
  if (eqs.has(7) && get_ax() * x != x) return false;
  if (eqs.has(8) && a * get_ax() != a) return false;
  if (eqs.has(9) && x * get_xa() != x) return false;
  if (auto k = eqs.power_left(); k && x * a.pow(*k + 1) != a.pow(*k)) return false;
  if (auto k = eqs.power_right(); k && a.pow(*k + 1) * x != a.pow(*k)) return false;
  return true;
}

std::vector<Element> enumerate_inverse_set(const Element& a, const EquationSet& equations) {
  if (equations.needs_involution()) a.ring().require_involution();
  std::vector<Element> out;
  a.ring().for_each_element([&](const Element& x) {
    if (satisfies(a, x, equations)) out.push_back(x);
  });
  return out;
}

std::uint64_t count_inverse_set(const Element& a, const EquationSet& equations) {
  if (equations.needs_involution()) a.ring().require_involution();
  std::uint64_t count = 0;
  a.ring().for_each_element([&](const Element& x) {
    if (satisfies(a, x, equations)) ++count;
  });
  return count;
}

InverseReport unique_report(const Element& a, std::string inverse, const Element& x, EquationSet satisfied) {
  InverseReport r(a, std::move(inverse));
  r.status = InverseStatus::unique;
  r.value = x;
  r.satisfied = std::move(satisfied);
  Element ax = a * x;
  Element xa = x * a;
  if (is_idempotent(ax)) {
    r.projectors.push_back({"phi_ax", Projector::from_idempotent(ax, Side::right)});
    r.projectors.push_back({"ax_phi", Projector::from_idempotent(ax, Side::left)});
  }
  if (is_idempotent(xa)) {
    r.projectors.push_back({"phi_xa", Projector::from_idempotent(xa, Side::right)});
    r.projectors.push_back({"xa_phi", Projector::from_idempotent(xa, Side::left)});
  }
  return r;
}

InverseReport none_report(const Element& a, std::string inverse, std::string reason) {
  InverseReport r(a, std::move(inverse));
  r.status = InverseStatus::none;
  r.reason = std::move(reason);
  return r;
}

namespace {

std::size_t matrix_rank(const Element& a) { return linalg::rank(a.ring().scalars(), a.matrix()); }

std::optional<Element> first_solution(const Element& a, const EquationSet& eqs) {
  std::optional<Element> found;
  const Ring& ring = a.ring();
  std::uint64_t n = *ring.cardinality();
  for (std::uint64_t i = 0; i < n && !found; ++i) {
    Element x = ring.element_at(i);
    if (satisfies(a, x, eqs)) found = x;
  }
  return found;
}

void validate(const Element& a, const Element& x, const EquationSet& eqs, const char* what) {
  if (!satisfies(a, x, eqs)) {
    throw InternalError(std::string(what) + " of " + a.str() + " failed its defining equations");
  }
}

}  // namespace

unsigned drazin_bound(const Ring& ring) {
  if (ring.is_matrix()) return static_cast<unsigned>(ring.size());
  return static_cast<unsigned>(ring.spec().modulus);
}

std::optional<Element> inner_inverse(const Element& a) {
  const Ring& ring = a.ring();
  if (!ring.is_matrix()) return first_solution(a, EquationSet{1});
  const ScalarField& f = ring.scalars();
  auto rf = linalg::rank_factorization(f, a.matrix());
  if (rf.left.cols() == 0) return ring.zero();
  Matrix x = linalg::mul(f, linalg::right_inverse(f, rf.right), linalg::left_inverse(f, rf.left));
  Element result = ring.matrix(std::move(x));
  validate(a, result, EquationSet{1}, "inner inverse");
  return result;
}

std::optional<Element> inner_inverse_with(const Element& a, const Element& left, const Element& right,
                                          const Element& target) {
  const Ring& ring = a.ring();
  for (const Element* e : {&left, &right, &target}) {
    if (!same_ring(e->ring(), ring)) throw StructuralError("ring mismatch");
  }
  if (!ring.is_matrix()) {
    std::optional<Element> found;
    std::uint64_t n = *ring.cardinality();
    for (std::uint64_t i = 0; i < n && !found; ++i) {
      Element z = ring.element_at(i);
      if (a * z * a == a && left * z * right == target) found = z;
    }
    return found;
  }
  const ScalarField& f = ring.scalars();
  const std::size_t n = ring.size();
  // Column-major vectorization: vec(L Z R) = (R^T kron L) vec(Z).
  auto kron = [&](const Matrix& l, const Matrix& r) {
    Matrix k(n * n, n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t j = 0; j < n; ++j) k(p * n + i, q * n + j) = f.mul(r(q, p), l(i, j));
    return k;
  };
  auto vec = [&](const Matrix& m) {
    Matrix v(n * n, 1);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t i = 0; i < n; ++i) v(p * n + i, 0) = m(i, p);
    return v;
  };
  Matrix system = vstack(kron(a.matrix(), a.matrix()), kron(left.matrix(), right.matrix()));
  Matrix rhs = vstack(vec(a.matrix()), vec(target.matrix()));
  auto solution = linalg::solve(f, system, rhs);
  if (!solution) return std::nullopt;
  Matrix z(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i) z(i, p) = (*solution)(p * n + i, 0);
  return ring.matrix(std::move(z));
}

InverseReport drazin_inverse(const Element& a) {
  const Ring& ring = a.ring();
  unsigned bound = drazin_bound(ring);
  if (ring.is_matrix()) {
    unsigned k = 1;
    while (matrix_rank(a.pow(k)) != matrix_rank(a.pow(k + 1))) ++k;
    Element ak = a.pow(k);
    Element x = ak * *inner_inverse(a.pow(2 * k + 1)) * ak;
    EquationSet eqs = EquationSet{2, 5}.add_power_left(k);
    validate(a, x, eqs, "Drazin inverse");
    InverseReport r = unique_report(a, "drazin", x, eqs);
    r.index = k;
    return r;
  }
  for (unsigned k = 1; k <= bound; ++k) {
    EquationSet eqs = EquationSet{2, 5}.add_power_left(k);
    if (auto x = first_solution(a, eqs)) {
      InverseReport r = unique_report(a, "drazin", *x, eqs);
      r.index = k;
      return r;
    }
  }
  return none_report(a, "drazin", "no Drazin inverse with index <= " + std::to_string(bound));
}

InverseReport group_inverse(const Element& a) {
  InverseReport d = drazin_inverse(a);
  if (!d.found()) return none_report(a, "group", d.reason);
  if (*d.index > 1) {
    InverseReport r = none_report(a, "group", "index " + std::to_string(*d.index) + " > 1");
    r.index = d.index;
    return r;
  }
  InverseReport r = unique_report(a, "group", *d.value, EquationSet{1, 2, 5});
  r.index = 1;
  return r;
}

std::optional<Element> one_three_inverse(const Element& a) {
  const Ring& ring = a.ring();
  ring.require_involution();
  Element gram = a.star() * a;
  if (matrix_rank(gram) != matrix_rank(a)) return std::nullopt;
  Element x = *inner_inverse(gram) * a.star();
  validate(a, x, EquationSet{1, 3}, "{1,3}-inverse");
  return x;
}

std::optional<Element> one_four_inverse(const Element& a) {
  const Ring& ring = a.ring();
  ring.require_involution();
  Element gram = a * a.star();
  if (matrix_rank(gram) != matrix_rank(a)) return std::nullopt;
  Element x = a.star() * *inner_inverse(gram);
  validate(a, x, EquationSet{1, 4}, "{1,4}-inverse");
  return x;
}

InverseReport moore_penrose(const Element& a) {
  a.ring().require_involution();
  auto x13 = one_three_inverse(a);
  if (!x13) return none_report(a, "moore-penrose", "rank(a*a) != rank(a): a{1,3} is empty");
  auto x14 = one_four_inverse(a);
  if (!x14) return none_report(a, "moore-penrose", "rank(aa*) != rank(a): a{1,4} is empty");
  Element x = *x14 * a * *x13;
  EquationSet eqs{1, 2, 3, 4};
  validate(a, x, eqs, "Moore-Penrose inverse");
  return unique_report(a, "moore-penrose", x, eqs);
}

InverseReport core_inverse(const Element& a) {
  a.ring().require_involution();
  InverseReport g = group_inverse(a);
  if (!g.found()) return none_report(a, "core", "no group inverse: " + g.reason);
  auto x13 = one_three_inverse(a);
  if (!x13) return none_report(a, "core", "rank(a*a) != rank(a): a{1,3} is empty");
  Element x = *g.value * a * *x13;
  EquationSet eqs{1, 2, 3, 6, 7};
  validate(a, x, eqs, "core inverse");
  return unique_report(a, "core", x, eqs);
}

InverseReport dual_core_inverse(const Element& a) {
  a.ring().require_involution();
  InverseReport g = group_inverse(a);
  if (!g.found()) return none_report(a, "dual-core", "no group inverse: " + g.reason);
  auto x14 = one_four_inverse(a);
  if (!x14) return none_report(a, "dual-core", "rank(aa*) != rank(a): a{1,4} is empty");
  Element x = *x14 * a * *g.value;
  EquationSet eqs{1, 2, 4, 8, 9};
  validate(a, x, eqs, "dual core inverse");
  return unique_report(a, "dual-core", x, eqs);
}

bool Characterization::consistent() const {
  for (const auto& [label, holds] : clauses) {
    if (holds != by_equations) return false;
  }
  return true;
}

bool ProjectorRelations::consistent() const {
  for (const auto& c : characterizations) {
    if (!c.consistent()) return false;
  }
  return true;
}

namespace {

SidedIdeal principal_right(const Element& e) { return SidedIdeal::principal(e, Side::right); }
SidedIdeal principal_left(const Element& e) { return SidedIdeal::principal(e, Side::left); }
SidedIdeal rann(const Element& e) { return SidedIdeal::annihilator(e, Side::right); }
SidedIdeal lann(const Element& e) { return SidedIdeal::annihilator(e, Side::left); }

MapSummary summarize(std::string label, const Element& b, Side side) {
  MapSummary m{std::move(label), b, side, false, std::nullopt, std::nullopt};
  m.is_projector = is_idempotent(b);
  if (m.is_projector) {
    m.onto = SidedIdeal::principal(b, side);
    m.along = SidedIdeal::annihilator(b, side);
  }
  return m;
}

}  // namespace

ProjectorRelations classify_projector_relations(const Element& a, const Element& x) {
  ProjectorRelations rel;
  Element ax = a * x;
  Element xa = x * a;
  rel.maps.push_back(summarize("phi_ax", ax, Side::right));
  rel.maps.push_back(summarize("phi_xa", xa, Side::right));
  rel.maps.push_back(summarize("ax_phi", ax, Side::left));
  rel.maps.push_back(summarize("xa_phi", xa, Side::left));

  auto eq = [&](const Element& b, const SidedIdeal& s, const SidedIdeal& t) {
    return map_equals_projector(b, s, t);
  };

  rel.characterizations.push_back(
      {"{1}",
       satisfies(a, x, {1}),
       {{"phi_ax = rho(aR, rann(ax))", eq(ax, principal_right(a), rann(ax))},
        {"phi_xa = rho(xaR, rann(a))", eq(xa, principal_right(xa), rann(a))},
        {"ax_phi = rho(Rax, lann(a))", eq(ax, principal_left(ax), lann(a))},
        {"xa_phi = rho(Ra, lann(xa))", eq(xa, principal_left(a), lann(xa))}}});
  rel.characterizations.push_back(
      {"{2}",
       satisfies(a, x, {2}),
       {{"phi_ax = rho(axR, rann(x))", eq(ax, principal_right(ax), rann(x))},
        {"phi_xa = rho(xR, rann(xa))", eq(xa, principal_right(x), rann(xa))},
        {"ax_phi = rho(Rx, lann(ax))", eq(ax, principal_left(x), lann(ax))},
        {"xa_phi = rho(Rxa, lann(x))", eq(xa, principal_left(xa), lann(x))}}});
  rel.characterizations.push_back(
      {"{1,2}",
       satisfies(a, x, {1, 2}),
       {{"phi_ax = rho(aR, rann(x))", eq(ax, principal_right(a), rann(x))},
        {"phi_xa = rho(xR, rann(a))", eq(xa, principal_right(x), rann(a))},
        {"ax_phi = rho(Rx, lann(a))", eq(ax, principal_left(x), lann(a))},
        {"xa_phi = rho(Ra, lann(x))", eq(xa, principal_left(a), lann(x))}}});
  rel.characterizations.push_back(
      {"{1,5}",
       satisfies(a, x, {1, 5}),
       {{"phi_ax = phi_xa = rho(aR, rann(a))", ax == xa && eq(ax, principal_right(a), rann(a))},
        {"ax_phi = xa_phi = rho(Ra, lann(a))", ax == xa && eq(ax, principal_left(a), lann(a))}}});

  unsigned l = drazin_bound(a.ring());
  rel.power = l;
  Element al = a.pow(l);
  InverseReport d = drazin_inverse(a);
  bool is_drazin = d.found() && *d.index <= l && *d.value == x;
  bool right_maps = ax == xa && eq(ax, principal_right(al), rann(al));
  bool left_maps = ax == xa && eq(ax, principal_left(al), lann(al));
  rel.characterizations.push_back(
      {"Drazin",
       is_drazin,
       {{"phi_xa = phi_ax = rho(a^l R, rann(a^l)), xR in a^l R",
         right_maps && ideal_subset(principal_right(x), principal_right(al))},
        {"phi_xa = phi_ax = rho(a^l R, rann(a^l)), rann(a^l) in rann(x)",
         right_maps && ideal_subset(rann(al), rann(x))},
        {"xa_phi = ax_phi = rho(R a^l, lann(a^l)), Rx in R a^l",
         left_maps && ideal_subset(principal_left(x), principal_left(al))},
        {"xa_phi = ax_phi = rho(R a^l, lann(a^l)), lann(a^l) in lann(x)",
         left_maps && ideal_subset(lann(al), lann(x))}}});
  return rel;
}

}  // namespace geninv
