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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geninv {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different rings, malformed shapes, side mismatches.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInvolution : public Error {
 public:
  using Error::Error;
};

class NotEnumerable : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computed answer failed its own validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Exact scalar field: Q when the characteristic is 0, otherwise F_p.
// F_p values are stored as integers in [0, p).
class ScalarField {
 public:
  static ScalarField rationals() { return ScalarField(0); }
  static ScalarField prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::int64_t characteristic() const { return p_; }

  Rational normalize(const Rational& v) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  // Canonical text: "p/q" or "p" over Q, the residue over F_p.
  std::string render(const Rational& v) const;
  Rational parse(std::string_view text) const;

  // Position of a residue in the canonical order 0, 1, ..., p-1.
  std::uint64_t index_of(const Rational& v) const;
  Rational from_index(std::uint64_t i) const { return Rational(static_cast<long>(i)); }

  std::string name() const;

  bool operator==(const ScalarField&) const = default;

 private:
  explicit ScalarField(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace geninv
