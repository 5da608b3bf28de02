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

#include <regex>
#include <set>

#include "geninv/io.hpp"

namespace geninv::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw FormatError(message); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
}

// Rejects keys outside `allowed`.
void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) fail(std::string("unknown field \"") + it.key() + "\" in " + what);
  }
}

std::int64_t integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    static const std::regex re("-?[0-9]+");
    if (std::regex_match(s, re)) {
      try {
        return std::stoll(s);
      } catch (const std::out_of_range&) {
      }
    }
  }
  fail(std::string(what) + " must be an integer");
}

Rational scalar(const ScalarField& field, const Json& j) {
  if (j.is_number_integer()) return field.normalize(Rational(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) fail("scalars must be strings or integers");
  return field.parse(j.get<std::string>());
}

Side parse_side(const Json& j) {
  if (j == "right") return Side::right;
  if (j == "left") return Side::left;
  fail("side must be \"right\" or \"left\"");
}

// Vectors of length n as the columns of an n x k matrix.
Matrix vectors_to_columns(const Ring& ring, const Json& j) {
  if (!j.is_array()) fail("subspace vectors must be an array");
  const std::size_t n = ring.size();
  Matrix m(n, j.size());
  for (std::size_t c = 0; c < j.size(); ++c) {
    if (!j[c].is_array() || j[c].size() != n) fail("each vector must have " + std::to_string(n) + " entries");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = scalar(ring.scalars(), j[c][r]);
  }
  return m;
}

const char* status_name(InverseStatus s) {
  switch (s) {
    case InverseStatus::unique: return "unique";
    case InverseStatus::family: return "family";
    case InverseStatus::none: return "none";
  }
  return "none";
}

InverseStatus parse_status(const Json& j) {
  if (j == "unique") return InverseStatus::unique;
  if (j == "family") return InverseStatus::family;
  if (j == "none") return InverseStatus::none;
  fail("status must be unique, family or none");
}

Json element_list(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const Element& x : xs) out.push_back(element_to_json(x));
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Rings.

RingSpec parse_ring(const Json& j) {
  if (j.is_string()) return parse_ring_text(j.get<std::string>());
  require_object(j, "ring");
  const Json& kind = field(j, "kind");
  if (kind == "modular") {
    check_keys(j, {"kind", "n"}, "modular ring");
    return RingSpec::modular_ring(integer(field(j, "n"), "n"));
  }
  if (kind != "matrix") fail("ring kind must be \"modular\" or \"matrix\"");
  check_keys(j, {"kind", "size", "scalars", "involution"}, "matrix ring");
  const std::int64_t size = integer(field(j, "size"), "size");
  if (size < 1) fail("matrix size must be positive");
  const Json& scalars = field(j, "scalars");
  require_object(scalars, "scalars");
  ScalarField f = ScalarField::rationals();
  const Json& skind = field(scalars, "kind");
  if (skind == "q") {
    check_keys(scalars, {"kind"}, "scalars");
  } else if (skind == "fp") {
    check_keys(scalars, {"kind", "p"}, "scalars");
    f = ScalarField::prime(integer(field(scalars, "p"), "p"));
  } else {
    fail("scalars kind must be \"q\" or \"fp\"");
  }
  Involution inv = Involution::transpose;
  if (auto it = j.find("involution"); it != j.end()) {
    if (*it == "none") {
      inv = Involution::none;
    } else if (*it != "transpose") {
      fail("involution must be \"transpose\" or \"none\"");
    }
  }
  return RingSpec::matrix_ring(static_cast<std::size_t>(size), f, inv);
}

RingSpec parse_ring_text(std::string_view text) {
  const std::string s(text);
  if (!s.empty() && s.front() == '{') return parse_ring(parse_text(s));
  static const std::regex modular("zn:([0-9]{1,18})");
  static const std::regex matrix("m([0-9]{1,3})(q|f([0-9]{1,18}))(:nostar)?");
  std::smatch m;
  if (std::regex_match(s, m, modular)) return RingSpec::modular_ring(std::stoll(m[1]));
  if (std::regex_match(s, m, matrix)) {
    const ScalarField f = m[2] == "q" ? ScalarField::rationals() : ScalarField::prime(std::stoll(m[3]));
    return RingSpec::matrix_ring(std::stoul(m[1]), f, m[4].matched ? Involution::none : Involution::transpose);
  }
  fail("unrecognized ring \"" + s + "\"; expected zn:N, mNq, mNfP or a JSON ring");
}

Json ring_to_json(const RingSpec& spec) {
  if (spec.kind == RingSpec::Kind::modular) return {{"kind", "modular"}, {"n", spec.modulus}};
  Json scalars = spec.scalars.is_rational() ? Json{{"kind", "q"}}
                                            : Json{{"kind", "fp"}, {"p", spec.scalars.characteristic()}};
  return {{"kind", "matrix"},
          {"size", spec.size},
          {"scalars", scalars},
          {"involution", spec.involution == Involution::transpose ? "transpose" : "none"}};
}

// ---------------------------------------------------------------------------
// Elements.

Element parse_element(const RingPtr& ring, const Json& j) {
  if (!ring->is_matrix()) {
    if (j.is_array()) fail("elements of " + ring->name() + " are integers");
    return ring->residue(integer(j, "a residue"));
  }
  const std::size_t n = ring->size();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    static const std::regex unit("E([1-9])([1-9])");
    std::smatch m;
    if (s == "I") return ring->one();
    if (std::regex_match(s, m, unit)) {
      const std::size_t i = std::stoul(m[1]), k = std::stoul(m[2]);
      if (i > n || k > n) fail("matrix unit " + s + " is outside " + ring->name());
      return ring->matrix_unit(i - 1, k - 1);
    }
  }
  if (j.is_string() || j.is_number_integer()) {
    Matrix m = Matrix::identity(n);
    const Rational v = scalar(ring->scalars(), j);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = v;
    return ring->matrix(std::move(m));
  }
  if (!j.is_array() || j.size() != n) fail("a matrix must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) fail("each matrix row must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar(ring->scalars(), j[i][k]);
  }
  return ring->matrix(std::move(m));
}

Element parse_element_text(const RingPtr& ring, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    j = std::string(text);
  }
  return parse_element(ring, j);
}

Json element_to_json(const Element& e) {
  if (!e.is_matrix()) return std::to_string(e.residue());
  const Matrix& m = e.matrix();
  const ScalarField& f = e.ring().scalars();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(f.render(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Ideals.

SidedIdeal parse_ideal(const RingPtr& ring, const Json& j, std::optional<Side> implied_side) {
  require_object(j, "ideal");
  check_keys(j, {"side", "principal", "annihilator", "set", "colspace", "rowspace", "whole", "zero"}, "ideal");
  std::optional<Side> side = implied_side;
  if (auto it = j.find("side"); it != j.end()) {
    const Side given = parse_side(*it);
    if (side && *side != given) fail(std::string("ideal declared ") + side_name(given) + " where a " +
                                     side_name(*side) + " ideal is required");
    side = given;
  }
  if (!side) fail("ideal needs a \"side\"");
  if (j.size() - j.count("side") != 1) fail("ideal needs exactly one of principal, annihilator, set, colspace, rowspace, whole, zero");
  if (auto it = j.find("principal"); it != j.end()) return SidedIdeal::principal(parse_element(ring, *it), *side);
  if (auto it = j.find("annihilator"); it != j.end()) return SidedIdeal::annihilator(parse_element(ring, *it), *side);
  if (auto it = j.find("whole"); it != j.end()) {
    if (*it != true) fail("\"whole\" must be true");
    return SidedIdeal::whole(ring, *side);
  }
  if (auto it = j.find("zero"); it != j.end()) {
    if (*it != true) fail("\"zero\" must be true");
    return SidedIdeal::zero(ring, *side);
  }
  if (auto it = j.find("set"); it != j.end()) {
    if (!it->is_array()) fail("\"set\" must be an array of elements");
    std::vector<Element> xs;
    for (const Json& e : *it) xs.push_back(parse_element(ring, e));
    return SidedIdeal::from_elements(ring, *side, xs);
  }
  if (!ring->is_matrix()) fail("colspace and rowspace need a matrix ring");
  if (auto it = j.find("colspace"); it != j.end()) {
    if (*side != Side::right) fail("\"colspace\" describes a right ideal");
    return SidedIdeal::from_vectors(ring, Side::right, vectors_to_columns(*ring, *it));
  }
  const Json& rows = j.at("rowspace");
  if (*side != Side::left) fail("\"rowspace\" describes a left ideal");
  return SidedIdeal::from_vectors(ring, Side::left, vectors_to_columns(*ring, rows));
}

Json ideal_to_json(const SidedIdeal& ideal) {
  Json out{{"side", side_name(ideal.side())}};
  if (!ideal.is_subspace()) {
    out["set"] = element_list(ideal.members());
    return out;
  }
  const Matrix basis = ideal.subspace().basis();
  const ScalarField& f = ideal.ring().scalars();
  Json vectors = Json::array();
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Json v = Json::array();
    for (std::size_t r = 0; r < basis.rows(); ++r) v.push_back(f.render(basis(r, c)));
    vectors.push_back(std::move(v));
  }
  out[ideal.side() == Side::right ? "colspace" : "rowspace"] = std::move(vectors);
  return out;
}

IdealConstraints parse_constraints(const RingPtr& ring, const Json& j) {
  require_object(j, "constraints");
  check_keys(j, {"right_prin", "right_ann", "left_prin", "left_ann"}, "constraints");
  if (j.empty()) fail("constraints must name at least one ideal");
  IdealConstraints c;
  if (auto it = j.find("right_prin"); it != j.end()) c.right_prin = parse_ideal(ring, *it, Side::right);
  if (auto it = j.find("right_ann"); it != j.end()) c.right_ann = parse_ideal(ring, *it, Side::right);
  if (auto it = j.find("left_prin"); it != j.end()) c.left_prin = parse_ideal(ring, *it, Side::left);
  if (auto it = j.find("left_ann"); it != j.end()) c.left_ann = parse_ideal(ring, *it, Side::left);
  return c;
}

Json constraints_to_json(const IdealConstraints& c) {
  Json out = Json::object();
  if (c.right_prin) out["right_prin"] = ideal_to_json(*c.right_prin);
  if (c.right_ann) out["right_ann"] = ideal_to_json(*c.right_ann);
  if (c.left_prin) out["left_prin"] = ideal_to_json(*c.left_prin);
  if (c.left_ann) out["left_ann"] = ideal_to_json(*c.left_ann);
  return out;
}

// ---------------------------------------------------------------------------
// Reports.

Json report_to_json(const InverseReport& r) {
  Json out{{"ring", ring_to_json(r.subject.ring().spec())},
           {"subject", element_to_json(r.subject)},
           {"inverse", r.inverse},
           {"status", status_name(r.status)}};
  if (r.value) out["result"] = element_to_json(*r.value);
  if (!r.members.empty()) out["members"] = element_list(r.members);
  if (r.count) out["count"] = *r.count;
  if (!r.satisfied.empty()) out["satisfied"] = r.satisfied.str();
  if (r.index) out["index"] = *r.index;
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (!r.projectors.empty()) {
    Json ps = Json::array();
    for (const NamedProjector& p : r.projectors) {
      ps.push_back({{"label", p.label},
                    {"onto", ideal_to_json(p.projector.onto())},
                    {"along", ideal_to_json(p.projector.along())},
                    {"unit_image", element_to_json(p.projector.unit_image())}});
    }
    out["projectors"] = std::move(ps);
  }
  if (!r.checks.empty()) {
    Json cs = Json::array();
    for (const auto& [label, holds] : r.checks) cs.push_back({{"label", label}, {"holds", holds}});
    out["checks"] = std::move(cs);
  }
  return out;
}

InverseReport report_from_json(const RingPtr& ring, const Json& j) {
  require_object(j, "inverse report");
  check_keys(j, {"ring", "subject", "inverse", "status", "result", "members", "count", "satisfied", "index", "reason",
                 "projectors", "checks"},
             "inverse report");
  if (!(parse_ring(field(j, "ring")) == ring->spec())) fail("report ring does not match");
  InverseReport r(parse_element(ring, field(j, "subject")), field(j, "inverse").get<std::string>());
  r.status = parse_status(field(j, "status"));
  if (auto it = j.find("result"); it != j.end()) r.value = parse_element(ring, *it);
  if (auto it = j.find("members"); it != j.end())
    for (const Json& e : *it) r.members.push_back(parse_element(ring, e));
  if (auto it = j.find("count"); it != j.end()) r.count = it->get<std::uint64_t>();
  if (auto it = j.find("satisfied"); it != j.end()) r.satisfied = EquationSet::parse(it->get<std::string>());
  if (auto it = j.find("index"); it != j.end()) r.index = it->get<unsigned>();
  if (auto it = j.find("reason"); it != j.end()) r.reason = it->get<std::string>();
  if (auto it = j.find("projectors"); it != j.end()) {
    for (const Json& p : *it) {
      auto proj = Projector::from_sum(parse_ideal(ring, field(p, "onto")), parse_ideal(ring, field(p, "along")));
      if (!proj) fail("projector ideals do not form a direct sum");
      if (proj->unit_image() != parse_element(ring, field(p, "unit_image"))) fail("projector unit image mismatch");
      r.projectors.push_back({field(p, "label").get<std::string>(), *proj});
    }
  }
  if (auto it = j.find("checks"); it != j.end())
    for (const Json& c : *it) r.checks.emplace_back(field(c, "label").get<std::string>(), field(c, "holds").get<bool>());
  return r;
}

Json verification_to_json(const oracle::VerificationReport& report, bool timing) {
  Json out{{"ring", ring_to_json(report.ring)},
           {"ring_name", report.ring.name()},
           {"theorem", report.theorem},
           {"applicable", report.applicable},
           {"cases_checked", report.cases_checked},
           {"complete", report.complete},
           {"passed", report.passed()},
           {"counterexample", nullptr}};
  if (report.counterexample) {
    Json bindings = Json::array();
    for (const auto& [name, value] : report.counterexample->bindings)
      bindings.push_back({{"name", name}, {"value", value}});
    out["counterexample"] = {{"detail", report.counterexample->detail}, {"bindings", std::move(bindings)}};
  }
  if (timing && report.elapsed_seconds) out["elapsed_seconds"] = *report.elapsed_seconds;
  return out;
}

oracle::VerificationReport verification_from_json(const Json& j) {
  require_object(j, "verification report");
  check_keys(j, {"ring", "ring_name", "theorem", "applicable", "cases_checked", "complete", "passed", "counterexample",
                 "elapsed_seconds"},
             "verification report");
  oracle::VerificationReport r;
  r.ring = parse_ring(field(j, "ring"));
  r.theorem = field(j, "theorem").get<std::string>();
  r.applicable = field(j, "applicable").get<bool>();
  r.cases_checked = field(j, "cases_checked").get<std::uint64_t>();
  r.complete = field(j, "complete").get<bool>();
  const Json& ce = field(j, "counterexample");
  if (!ce.is_null()) {
    oracle::Counterexample c;
    c.detail = field(ce, "detail").get<std::string>();
    for (const Json& b : field(ce, "bindings"))
      c.bindings.emplace_back(field(b, "name").get<std::string>(), field(b, "value").get<std::string>());
    r.counterexample = std::move(c);
  }
  if (auto it = j.find("elapsed_seconds"); it != j.end()) r.elapsed_seconds = it->get<double>();
  else r.elapsed_seconds.reset();
  return r;
}

// ---------------------------------------------------------------------------
// Jobs.

const char* command_name(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::enumerate: return "enumerate";
    case Command::prescribe: return "prescribe";
    case Command::verify: return "verify";
  }
  return "compute";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::compute, Command::enumerate, Command::prescribe, Command::verify})
    if (name == command_name(c)) return c;
  fail("unknown command \"" + std::string(name) + "\"");
}

JobSpec parse_job(const Json& j) {
  require_object(j, "job");
  check_keys(j, {"command", "ring", "element", "options"}, "job");
  JobSpec job;
  const Json& command = field(j, "command");
  if (!command.is_string()) fail("command must be a string");
  job.command = parse_command(command.get<std::string>());
  if (auto it = j.find("ring"); it != j.end()) job.ring = parse_ring(*it);
  if (auto it = j.find("element"); it != j.end()) {
    if (!job.ring) fail("an element needs a ring");
    job.element = element_to_json(parse_element(Ring::make(*job.ring), *it));
  }
  if (auto it = j.find("options"); it != j.end()) {
    require_object(*it, "options");
    job.options = *it;
  }
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json out{{"command", command_name(job.command)}, {"options", job.options}};
  if (job.ring) out["ring"] = ring_to_json(*job.ring);
  if (job.element) out["element"] = *job.element;
  return out;
}

}  // namespace geninv::io
