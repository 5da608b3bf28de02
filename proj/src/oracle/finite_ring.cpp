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

#include <algorithm>
#include <set>
#include <sstream>

#include "geninv/oracle.hpp"

namespace geninv::oracle {

namespace {

// Canonical order on sets: smaller first, then the set holding the lowest
// differing member first.
bool set_less(const Set& a, const Set& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const Set diff = a ^ b;
  const std::size_t first = diff.find_first();
  if (first == Set::npos) return false;
  return a.test(first);
}

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

TableRing::TableRing(const RingSpec& spec) : spec_(spec) {
  if (spec.kind == RingSpec::Kind::modular) {
    if (spec.modulus < 2) throw StructuralError("modulus must be at least 2");
    size_ = static_cast<std::size_t>(spec.modulus);
    base_ = spec.modulus;
    dim_ = 0;
  } else {
    if (!spec.scalars.is_finite()) throw NotEnumerable(spec.name() + " is infinite");
    base_ = spec.scalars.characteristic();
    dim_ = spec.size * spec.size;
    size_ = 1;
    for (std::size_t k = 0; k < dim_; ++k) size_ *= static_cast<std::size_t>(base_);
  }
  const std::size_t n = size_;

  // Digits of each index, first entry most significant.
  std::vector<std::vector<std::int64_t>> digits(n);
  auto encode = [&](const std::vector<std::int64_t>& d) {
    Index v = 0;
    for (std::int64_t x : d) v = static_cast<Index>(v * base_ + x);
    return v;
  };
  if (dim_ != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> d(dim_);
      std::size_t v = i;
      for (std::size_t k = dim_; k-- > 0;) {
        d[k] = static_cast<std::int64_t>(v % static_cast<std::size_t>(base_));
        v /= static_cast<std::size_t>(base_);
      }
      digits[i] = std::move(d);
    }
  }

  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  const std::size_t m = spec.size;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dim_ == 0) {
        add_[i * n + j] = static_cast<Index>((i + j) % n);
        mul_[i * n + j] = static_cast<Index>((i * j) % n);
      } else {
        std::vector<std::int64_t> s(dim_), p(dim_, 0);
        for (std::size_t k = 0; k < dim_; ++k) s[k] = (digits[i][k] + digits[j][k]) % base_;
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < m; ++t) acc += digits[i][r * m + t] * digits[j][t * m + c];
            p[r * m + c] = acc % base_;
          }
        add_[i * n + j] = encode(s);
        mul_[i * n + j] = encode(p);
      }
    }
    if (dim_ == 0) {
      neg_[i] = static_cast<Index>((n - i) % n);
    } else {
      std::vector<std::int64_t> d(dim_);
      for (std::size_t k = 0; k < dim_; ++k) d[k] = positive_mod(-digits[i][k], base_);
      neg_[i] = encode(d);
    }
  }
  zero_ = 0;
  if (dim_ == 0) {
    one_ = 1;
  } else {
    std::vector<std::int64_t> d(dim_, 0);
    for (std::size_t r = 0; r < m; ++r) d[r * m + r] = 1;
    one_ = encode(d);
    if (spec.involution == Involution::transpose) {
      star_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> d2(dim_);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) d2[c * m + r] = digits[i][r * m + c];
        star_[i] = encode(d2);
      }
    }
  }

  inverse_.assign(n, kNone);
  regular_.assign(n, false);
  rprin_.assign(n, Set(n));
  lprin_.assign(n, Set(n));
  rann_.assign(n, Set(n));
  lann_.assign(n, Set(n));
  for (Index a = 0; a < n; ++a) {
    for (Index r = 0; r < n; ++r) {
      const Index ar = mul(a, r);
      const Index ra = mul(r, a);
      rprin_[a].set(ar);
      lprin_[a].set(ra);
      if (ar == zero_) rann_[a].set(r);
      if (ra == zero_) lann_[a].set(r);
      if (ar == one_ && ra == one_) inverse_[a] = r;
      if (!regular_[a] && mul(ar, a) == a) regular_[a] = true;
    }
  }
}

Index TableRing::star(Index a) const {
  if (star_.empty()) throw UnsupportedInvolution(spec_.name() + " has no involution");
  return star_[a];
}

Index TableRing::pow(Index a, unsigned k) const {
  Index out = one_;
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

std::string TableRing::render(Index a) const {
  if (dim_ == 0) return std::to_string(a);
  std::vector<std::int64_t> d(dim_);
  std::size_t v = a;
  for (std::size_t k = dim_; k-- > 0;) {
    d[k] = static_cast<std::int64_t>(v % static_cast<std::size_t>(base_));
    v /= static_cast<std::size_t>(base_);
  }
  const std::size_t m = spec_.size;
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m; ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m; ++c) out << (c ? "," : "") << d[r * m + c];
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string TableRing::render(const Set& s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) {
    out += first ? "" : ", ";
    out += render(static_cast<Index>(i));
    first = false;
  }
  return out + "}";
}

Index TableRing::index_of(const Element& e) const {
  if (!(e.ring().spec() == spec_)) throw StructuralError("element from another ring");
  if (dim_ == 0) return static_cast<Index>(e.residue());
  Index v = 0;
  for (const Rational& q : e.matrix().entries()) v = static_cast<Index>(v * base_ + q.get_num().get_si());
  return v;
}

Element TableRing::element(const RingPtr& ring, Index a) const {
  if (!(ring->spec() == spec_)) throw StructuralError("ring spec mismatch");
  return ring->element_at(a);
}

Set TableRing::singleton_zero() const {
  Set s(size_);
  s.set(zero_);
  return s;
}

Set TableRing::all() const {
  Set s(size_);
  s.set();
  return s;
}

Set TableRing::rann_of(const Set& s) const {
  Set out = all();
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) out &= rann_[i];
  return out;
}

Set TableRing::lann_of(const Set& s) const {
  Set out = all();
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) out &= lann_[i];
  return out;
}

Set TableRing::left_image(Index a, const Set& s) const {
  Set out(size_);
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) out.set(mul(a, static_cast<Index>(i)));
  return out;
}

Set TableRing::right_image(const Set& s, Index a) const {
  Set out(size_);
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) out.set(mul(static_cast<Index>(i), a));
  return out;
}

Set TableRing::right_preimage(Index a, const Set& s) const {
  Set out(size_);
  for (Index r = 0; r < size_; ++r)
    if (s.test(mul(a, r))) out.set(r);
  return out;
}

Set TableRing::left_preimage(Index a, const Set& s) const {
  Set out(size_);
  for (Index r = 0; r < size_; ++r)
    if (s.test(mul(r, a))) out.set(r);
  return out;
}

Set TableRing::sum(const Set& s, const Set& t) const {
  Set out(size_);
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    for (std::size_t j = t.find_first(); j != Set::npos; j = t.find_next(j))
      out.set(add(static_cast<Index>(i), static_cast<Index>(j)));
  return out;
}

bool TableRing::trivial_meet(const Set& s, const Set& t) const { return (s & t) == singleton_zero(); }

bool TableRing::direct_sum(const Set& s, const Set& t) const {
  // For subgroups, |S + T| = |S| |T| / |S meet T|.
  return trivial_meet(s, t) && s.count() * t.count() == size_;
}

bool TableRing::rho_right(Index b, const Set& s, const Set& t) const {
  if (!direct_sum(s, t)) return false;
  for (Index r = 0; r < size_; ++r) {
    const Index br = mul(b, r);
    if (!s.test(br) || !t.test(sub(r, br))) return false;
  }
  return true;
}

bool TableRing::rho_left(Index b, const Set& s, const Set& t) const {
  if (!direct_sum(s, t)) return false;
  for (Index r = 0; r < size_; ++r) {
    const Index rb = mul(r, b);
    if (!s.test(rb) || !t.test(sub(r, rb))) return false;
  }
  return true;
}

std::optional<Index> TableRing::component(const Set& s, const Set& t, Index r) const {
  if (!direct_sum(s, t)) return std::nullopt;
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    if (t.test(sub(r, static_cast<Index>(i)))) return static_cast<Index>(i);
  return std::nullopt;
}

std::optional<Index> TableRing::unit_component(const Set& s, const Set& t) const { return component(s, t, one_); }

bool TableRing::is_right_ideal(const Set& s) const {
  if (!s.test(zero_)) return false;
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) {
    for (std::size_t j = s.find_first(); j != Set::npos; j = s.find_next(j))
      if (!s.test(add(static_cast<Index>(i), static_cast<Index>(j)))) return false;
    if (!subset(rprin_[i], s)) return false;
  }
  return true;
}

bool TableRing::is_left_ideal(const Set& s) const {
  if (!s.test(zero_)) return false;
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) {
    for (std::size_t j = s.find_first(); j != Set::npos; j = s.find_next(j))
      if (!s.test(add(static_cast<Index>(i), static_cast<Index>(j)))) return false;
    if (!subset(lprin_[i], s)) return false;
  }
  return true;
}

std::vector<Set> TableRing::lattice(const std::vector<Set>& seeds) const {
  // Every one-sided ideal (every subgroup) is a finite sum of principal
  // (cyclic) ones, so closing the seeds under sums reaches all of them.
  std::set<Set> seen(seeds.begin(), seeds.end());
  std::vector<Set> all_sets(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all_sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Set s = sum(all_sets[i], all_sets[j]);
      if (seen.insert(s).second) all_sets.push_back(std::move(s));
    }
  }
  std::sort(all_sets.begin(), all_sets.end(), set_less);
  return all_sets;
}

const std::vector<Set>& TableRing::right_ideals() const {
  if (!right_ideals_) right_ideals_ = lattice(rprin_);
  return *right_ideals_;
}

const std::vector<Set>& TableRing::left_ideals() const {
  if (!left_ideals_) left_ideals_ = lattice(lprin_);
  return *left_ideals_;
}

const std::vector<Set>& TableRing::subgroups() const {
  if (!subgroups_) {
    std::vector<Set> cyclic;
    for (Index a = 0; a < size_; ++a) {
      Set s(size_);
      Index v = zero_;
      do {
        s.set(v);
        v = add(v, a);
      } while (v != zero_);
      cyclic.push_back(std::move(s));
    }
    subgroups_ = lattice(cyclic);
  }
  return *subgroups_;
}

bool TableRing::satisfies(Index a, Index x, const EquationSet& eqs) const {
  const Index ax = mul(a, x);
  const Index xa = mul(x, a);
  if (eqs.has(1) && mul(ax, a) != a) return false;
  if (eqs.has(2) && mul(xa, x) != x) return false;
  if (eqs.has(3) && star(ax) != ax) return false;
  if (eqs.has(4) && star(xa) != xa) return false;
  if (eqs.has(5) && ax != xa) return false;
  if (eqs.has(6) && mul(xa, a) != a) return false;
  if (eqs.has(7) && mul(ax, x) != x) return false;
  if (eqs.has(8) && mul(a, ax) != a) return false;
  if (eqs.has(9) && mul(x, xa) != x) return false;
  if (auto k = eqs.power_left(); k && mul(x, pow(a, *k + 1)) != pow(a, *k)) return false;
  if (auto k = eqs.power_right(); k && mul(pow(a, *k + 1), x) != pow(a, *k)) return false;
  return true;
}

std::vector<Index> TableRing::solutions(Index a, const EquationSet& eqs) const {
  if (eqs.needs_involution()) star(zero_);
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x)
    if (satisfies(a, x, eqs)) out.push_back(x);
  return out;
}

Set TableRing::solution_set(Index a, const EquationSet& eqs) const {
  Set out(size_);
  for (Index x : solutions(a, eqs)) out.set(x);
  return out;
}

std::vector<Element> brute_force_set(const Element& a, const std::function<bool(const Element&)>& predicate) {
  const Ring& ring = a.ring();
  if (!ring.is_finite()) throw NotEnumerable(ring.name() + " is infinite");
  std::vector<Element> out;
  ring.for_each_element([&](const Element& x) {
    if (predicate(x)) out.push_back(x);
  });
  return out;
}

}  // namespace geninv::oracle
