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

#include "geninv/field.hpp"

#include <cctype>

namespace geninv {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ScalarField ScalarField::prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw StructuralError("prime field characteristic " + std::to_string(p) + " is not prime");
  }
  return ScalarField(p);
}

namespace {

mpz_class mod_floor(const mpz_class& v, std::int64_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Rational ScalarField::normalize(const Rational& v) const {
  if (p_ == 0) {
    Rational r = v;
    r.canonicalize();
    return r;
  }
  mpz_class num = mod_floor(v.get_num(), p_);
  mpz_class den = mod_floor(v.get_den(), p_);
  if (den == 0) {
    throw StructuralError("denominator vanishes modulo " + std::to_string(p_));
  }
  if (den != 1) {
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    num = mod_floor(num * den_inv, p_);
  }
  return Rational(num);
}

Rational ScalarField::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= p_) s -= p_;
  return Rational(s);
}

Rational ScalarField::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += p_;
  return Rational(s);
}

Rational ScalarField::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return Rational(mod_floor(a.get_num() * b.get_num(), p_));
}

Rational ScalarField::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return a == 0 ? a : Rational(p_ - a.get_num());
}

Rational ScalarField::inv(const Rational& a) const {
  if (a == 0) throw PreconditionError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Rational(r);
}

std::string ScalarField::render(const Rational& v) const { return v.get_str(); }

Rational ScalarField::parse(std::string_view text) const {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw StructuralError("empty scalar");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw StructuralError("malformed scalar '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw StructuralError("zero denominator in '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return normalize(r);
}

std::uint64_t ScalarField::index_of(const Rational& v) const {
  if (p_ == 0) throw NotEnumerable("the rationals are not enumerable");
  return v.get_num().get_ui();
}

std::string ScalarField::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace geninv
