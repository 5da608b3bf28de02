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

// JSON encodings of rings, elements, ideals, reports and jobs. Scalars are
// strings so exact values survive; object keys are emitted in sorted order
// so equal values render to identical text.

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "geninv/oracle.hpp"
#include "geninv/special.hpp"

namespace geninv::io {

using Json = nlohmann::json;

// Malformed or inconsistent input document.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Two-space indented text with sorted keys and a trailing newline.
std::string dump(const Json& j);
// Parses JSON text; FormatError on syntax errors.
Json parse_text(std::string_view text);

// Rings: {"kind":"modular","n":6} or {"kind":"matrix","size":2,
// "scalars":{"kind":"q"} | {"kind":"fp","p":5},"involution":"transpose"|"none"}.
// Shorthands: "zn:6", "m2q", "m2f5", with ":nostar" dropping the involution.
RingSpec parse_ring(const Json& j);
// A shorthand or JSON text.
RingSpec parse_ring_text(std::string_view text);
Json ring_to_json(const RingSpec& spec);

// Residues as strings; matrices as arrays of rows of scalar strings. Also
// accepted: integers (a multiple of the identity on matrix rings) and the
// matrix units "E12", "I".
Element parse_element(const RingPtr& ring, const Json& j);
// JSON text, or a bare token such as E12 that is not valid JSON.
Element parse_element_text(const RingPtr& ring, std::string_view text);
Json element_to_json(const Element& e);

// Ideals: {"side": "right"|"left"} plus exactly one of {"principal": elem},
// {"annihilator": elem}, {"set": [elem...]}, {"colspace": [vector...]} for
// right ideals, {"rowspace": [vector...]} for left ideals, {"whole": true}
// or {"zero": true}. The side may be implied by the caller.
SidedIdeal parse_ideal(const RingPtr& ring, const Json& j, std::optional<Side> implied_side = std::nullopt);
// Canonical form: "set" on Z_n, "colspace"/"rowspace" with the echelon
// basis on matrix rings.
Json ideal_to_json(const SidedIdeal& ideal);

// {"right_prin": ideal, "right_ann": ideal, "left_prin": ideal,
// "left_ann": ideal}, any nonempty subset.
IdealConstraints parse_constraints(const RingPtr& ring, const Json& j);
Json constraints_to_json(const IdealConstraints& c);

Json report_to_json(const InverseReport& report);
InverseReport report_from_json(const RingPtr& ring, const Json& j);

Json verification_to_json(const oracle::VerificationReport& report, bool timing);
oracle::VerificationReport verification_from_json(const Json& j);

enum class Command { compute, enumerate, prescribe, verify };

const char* command_name(Command c);
Command parse_command(std::string_view name);

// One CLI invocation. Elements stay in canonical JSON form; options holds
// the command-specific settings as a JSON object.
struct JobSpec {
  Command command = Command::compute;
  std::optional<RingSpec> ring;
  std::optional<Json> element;
  Json options = Json::object();

  bool operator==(const JobSpec&) const = default;
};

JobSpec parse_job(const Json& j);
Json job_to_json(const JobSpec& job);

}  // namespace geninv::io
