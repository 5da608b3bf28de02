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


#include <gtest/gtest.h>

#include "geninv/io.hpp"
#include "geninv/special.hpp"
#include "support.hpp"

namespace geninv::testing {
namespace {

using io::Json;

std::vector<RingSpec> sample_specs() {
  return {RingSpec::modular_ring(6),
          RingSpec::modular_ring(8),
          RingSpec::matrix_ring(2, ScalarField::rationals(), Involution::transpose),
          RingSpec::matrix_ring(2, ScalarField::prime(5), Involution::transpose),
          RingSpec::matrix_ring(3, ScalarField::prime(2), Involution::none)};
}

TEST(JsonRing, RoundTrip) {
  for (const RingSpec& s : sample_specs()) {
    EXPECT_EQ(io::parse_ring(io::ring_to_json(s)), s) << s.name();
    EXPECT_EQ(io::parse_ring_text(io::dump(io::ring_to_json(s))), s) << s.name();
  }
}

TEST(JsonRing, Shorthands) {
  EXPECT_EQ(io::parse_ring_text("zn:6"), RingSpec::modular_ring(6));
  EXPECT_EQ(io::parse_ring_text("m2q"), RingSpec::matrix_ring(2, ScalarField::rationals(), Involution::transpose));
  EXPECT_EQ(io::parse_ring_text("m2f5"), RingSpec::matrix_ring(2, ScalarField::prime(5), Involution::transpose));
  EXPECT_EQ(io::parse_ring_text("m2f2:nostar"), RingSpec::matrix_ring(2, ScalarField::prime(2), Involution::none));
  EXPECT_EQ(io::parse_ring_text(R"({"kind":"matrix","size":2,"scalars":{"kind":"q"},"involution":"transpose"})"),
            io::parse_ring_text("m2q"));
}

TEST(JsonRing, RejectsMalformed) {
  EXPECT_THROW(io::parse_ring_text("zn:"), io::FormatError);
  EXPECT_THROW(io::parse_ring_text("m2f6"), Error);
  EXPECT_THROW(io::parse_ring(Json{{"kind", "modular"}}), io::FormatError);
  EXPECT_THROW(io::parse_ring(Json{{"kind", "modular"}, {"n", 6}, {"extra", 1}}), io::FormatError);
  EXPECT_THROW(io::parse_ring(Json{{"kind", "matrix"}, {"size", 2}, {"scalars", {{"kind", "r"}}}, {"involution", "none"}}),
               io::FormatError);
  EXPECT_THROW(io::parse_text("{"), io::FormatError);
}

TEST(JsonElement, RoundTripAllSmallElements) {
  for (RingPtr r : {z(6), m2f2()})
    for (const Element& e : r->elements()) EXPECT_EQ(io::parse_element(r, io::element_to_json(e)), e);
  RingPtr q = m2q();
  Element x = el(q, R"([["1/4","-7/3"],["0","5"]])");
  EXPECT_EQ(io::element_to_json(x), Json::parse(R"([["1/4","-7/3"],["0","5"]])"));
  EXPECT_EQ(io::parse_element(q, io::element_to_json(x)), x);
  EXPECT_EQ(io::element_to_json(z(6)->residue(5)), Json("5"));
}

TEST(JsonElement, Shorthands) {
  RingPtr q = m2q();
  EXPECT_EQ(el(q, "E12"), q->matrix_unit(0, 1));
  EXPECT_EQ(el(q, "I"), q->one());
  EXPECT_EQ(el(q, "3"), q->matrix({{3, 0}, {0, 3}}));
  EXPECT_EQ(el(z(6), "8"), z(6)->residue(2));
  EXPECT_THROW(el(q, "E31"), io::FormatError);
  EXPECT_THROW(el(q, R"([["1"],["2"]])"), io::FormatError);
  EXPECT_THROW(el(q, R"([["1/0","0"],["0","0"]])"), Error);
}

TEST(JsonIdeal, RoundTrip) {
  for (RingPtr r : {z(6), z(8), m2f2()})
    for (const Element& a : r->elements())
      for (Side side : {Side::right, Side::left})
        for (const SidedIdeal& i : {SidedIdeal::principal(a, side), SidedIdeal::annihilator(a, side)}) {
          Json j = io::ideal_to_json(i);
          EXPECT_EQ(io::parse_ideal(r, j), i) << io::dump(j);
          EXPECT_EQ(io::ideal_to_json(io::parse_ideal(r, j)), j);
        }
  RingPtr q = m2q();
  SidedIdeal s = SidedIdeal::principal(a3(q), Side::right);
  EXPECT_EQ(io::parse_ideal(q, io::ideal_to_json(s)), s);
}

TEST(JsonIdeal, InputForms) {
  RingPtr r = z(6);
  SidedIdeal two = SidedIdeal::principal(r->residue(2), Side::right);
  EXPECT_EQ(io::parse_ideal(r, Json::parse(R"({"side":"right","principal":"2"})")), two);
  EXPECT_EQ(io::parse_ideal(r, Json::parse(R"({"side":"right","set":["0","2","4"]})")), two);
  EXPECT_EQ(io::parse_ideal(r, Json::parse(R"({"side":"right","annihilator":"3"})")), two);
  EXPECT_EQ(io::parse_ideal(r, Json::parse(R"({"principal":"2"})"), Side::right), two);
  EXPECT_TRUE(io::parse_ideal(r, Json::parse(R"({"side":"left","whole":true})")).is_whole());
  EXPECT_TRUE(io::parse_ideal(r, Json::parse(R"({"side":"left","zero":true})")).is_zero());
  RingPtr f5 = m2f5();
  EXPECT_EQ(io::parse_ideal(f5, Json::parse(R"({"side":"right","colspace":[["0","1"]]})")),
            span_ideal(f5, Side::right, {{0, 1}}));
  EXPECT_THROW(io::parse_ideal(r, Json::parse(R"({"principal":"2"})")), io::FormatError);
  EXPECT_THROW(io::parse_ideal(r, Json::parse(R"({"side":"right","principal":"2","zero":true})")), io::FormatError);
  EXPECT_THROW(io::parse_ideal(r, Json::parse(R"({"side":"right","set":["0","1"]})")), Error);
  EXPECT_THROW(io::parse_ideal(f5, Json::parse(R"({"side":"left","colspace":[["0","1"]]})")), io::FormatError);
}

TEST(JsonConstraints, RoundTrip) {
  RingPtr f5 = m2f5();
  IdealConstraints c;
  c.right_prin = span_ideal(f5, Side::right, {{0, 1}});
  c.left_ann = span_ideal(f5, Side::left, {{1, 0}});
  Json j = io::constraints_to_json(c);
  IdealConstraints back = io::parse_constraints(f5, j);
  EXPECT_EQ(back.right_prin, c.right_prin);
  EXPECT_EQ(back.left_ann, c.left_ann);
  EXPECT_FALSE(back.right_ann);
  EXPECT_EQ(io::constraints_to_json(back), j);
  EXPECT_THROW(io::parse_constraints(f5, Json::object()), Error);
  EXPECT_THROW(io::parse_constraints(f5, Json::parse(R"({"rprin":{"zero":true}})")), io::FormatError);
}

TEST(JsonReport, RoundTrip) {
  RingPtr q = m2q();
  RingPtr f2 = m2f2();
  std::vector<InverseReport> reports = {moore_penrose(a3(q)),
                                        drazin_inverse(q->matrix_unit(0, 1)),
                                        group_inverse(q->matrix_unit(0, 1)),
                                        moore_penrose(f2->matrix({{1, 1}, {0, 0}})),
                                        right_w_core(f2->matrix_unit(0, 1), f2->one()),
                                        bc_inverse(a3(q), a3(q), a3(q), BcFlavor::full)};
  for (const InverseReport& r : reports) {
    Json j = io::report_to_json(r);
    InverseReport back = io::report_from_json(r.subject.ring_ptr(), j);
    EXPECT_EQ(io::report_to_json(back), j) << io::dump(j);
    EXPECT_EQ(back.status, r.status);
    EXPECT_EQ(back.value, r.value);
    EXPECT_EQ(back.members, r.members);
  }
  EXPECT_THROW(io::report_from_json(f2, io::report_to_json(reports[0])), io::FormatError);
}

TEST(JsonVerification, RoundTrip) {
  oracle::VerificationReport pass = oracle::verify("T-1I-projectors", RingSpec::modular_ring(6));
  oracle::VerificationReport na = oracle::verify("T-13-projectors", RingSpec::modular_ring(6));
  oracle::VerificationReport ce;
  ce.ring = RingSpec::modular_ring(8);
  ce.theorem = "X";
  ce.cases_checked = 4;
  ce.counterexample = oracle::Counterexample{{{"a", "2"}, {"x", "3"}}, "clause fails"};
  for (const oracle::VerificationReport& r : {pass, na, ce}) {
    Json j = io::verification_to_json(r, false);
    EXPECT_FALSE(j.contains("elapsed_seconds"));
    EXPECT_EQ(io::verification_to_json(io::verification_from_json(j), false), j);
  }
  EXPECT_TRUE(io::verification_to_json(pass, true).contains("elapsed_seconds"));
  EXPECT_EQ(io::verification_to_json(ce, false)["passed"], false);
}

TEST(JsonJob, RoundTrip) {
  io::JobSpec job;
  job.command = io::Command::prescribe;
  job.ring = io::parse_ring_text("m2f5");
  job.element = Json::parse(R"([["0","1"],["0","0"]])");
  job.options = Json::parse(R"({"mode":"outer","constraints":{"right_prin":{"side":"right","colspace":[["0","1"]]}}})");
  EXPECT_EQ(io::parse_job(io::job_to_json(job)), job);
  io::JobSpec verify;
  verify.command = io::Command::verify;
  verify.options = Json::parse(R"({"theorems":"all"})");
  EXPECT_EQ(io::parse_job(io::job_to_json(verify)), verify);
  EXPECT_THROW(io::parse_job(Json::parse(R"({"command":"launch"})")), io::FormatError);
  EXPECT_THROW(io::parse_job(Json::parse(R"({"command":"verify","bogus":1})")), io::FormatError);
}

TEST(JsonText, CanonicalDump) {
  Json j = Json::parse(R"({"b":1,"a":{"d":"x","c":[1,2]}})");
  std::string text = io::dump(j);
  EXPECT_EQ(text, "{\n  \"a\": {\n    \"c\": [\n      1,\n      2\n    ],\n    \"d\": \"x\"\n  },\n  \"b\": 1\n}\n");
  EXPECT_EQ(io::dump(io::parse_text(text)), text);
}

}  // namespace
}  // namespace geninv::testing
