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

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "geninv/cli.hpp"

namespace geninv::cli {

namespace {

using io::Json;

const char* const kParamNames[] = {"e", "f", "w", "v", "b", "c", "p", "q"};

Element param_or_one(const std::map<std::string, Element>& params, const char* name, const Element& a) {
  auto it = params.find(name);
  return it == params.end() ? a.ring().one() : it->second;
}

const Element& required_param(const std::map<std::string, Element>& params, const char* name,
                              const std::string& inverse) {
  auto it = params.find(name);
  if (it == params.end()) throw io::FormatError(inverse + " needs the element --" + name);
  return it->second;
}

// Every inner inverse on finite rings; one witness otherwise.
InverseReport inner_report(const Element& a) {
  auto x = inner_inverse(a);
  if (!x) return none_report(a, "inner", "a is not regular: a{1} is empty");
  InverseReport r(a, "inner");
  r.status = InverseStatus::family;
  r.value = *x;
  r.satisfied = EquationSet{1};
  if (a.ring().is_finite()) {
    r.members = enumerate_inverse_set(a, {1});
    r.count = r.members.size();
  }
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RingPtr job_ring(const io::JobSpec& job) {
  if (!job.ring) throw io::FormatError(std::string(io::command_name(job.command)) + " needs --ring");
  return Ring::make(*job.ring);
}

Element job_element(const io::JobSpec& job, const RingPtr& ring) {
  if (!job.element) throw io::FormatError(std::string(io::command_name(job.command)) + " needs --element");
  return io::parse_element(ring, *job.element);
}

const Json& required_option(const io::JobSpec& job, const char* key) {
  auto it = job.options.find(key);
  if (it == job.options.end())
    throw io::FormatError(std::string(io::command_name(job.command)) + " needs the option " + key);
  return *it;
}

std::string string_option(const io::JobSpec& job, const char* key, const std::string& fallback) {
  auto it = job.options.find(key);
  if (it == job.options.end()) return fallback;
  if (!it->is_string()) throw io::FormatError(std::string("option ") + key + " must be a string");
  return it->get<std::string>();
}

void check_option_keys(const io::JobSpec& job, std::initializer_list<const char*> allowed) {
  for (auto it = job.options.begin(); it != job.options.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known)
      throw io::FormatError("unknown option \"" + it.key() + "\" for " + io::command_name(job.command));
  }
}

int run_compute(const io::JobSpec& job, bool timing, std::ostream& out) {
  check_option_keys(job, {"inverse", "flavor", "e", "f", "w", "v", "b", "c", "p", "q"});
  const auto start = std::chrono::steady_clock::now();
  RingPtr ring = job_ring(job);
  Element a = job_element(job, ring);
  const Json& name = required_option(job, "inverse");
  if (!name.is_string()) throw io::FormatError("option inverse must be a string");
  std::map<std::string, Element> params;
  for (const char* p : kParamNames)
    if (auto it = job.options.find(p); it != job.options.end()) params.emplace(p, io::parse_element(ring, *it));
  InverseReport report = compute_inverse(a, name.get<std::string>(), params, string_option(job, "flavor", ""));
  Json j = io::report_to_json(report);
  if (timing) j["elapsed_seconds"] = seconds_since(start);
  out << io::dump(j);
  return report.found() ? kOk : kNotFound;
}

int run_enumerate(const io::JobSpec& job, bool timing, std::ostream& out) {
  check_option_keys(job, {"equations", "count_only"});
  const auto start = std::chrono::steady_clock::now();
  RingPtr ring = job_ring(job);
  Element a = job_element(job, ring);
  const Json& text = required_option(job, "equations");
  if (!text.is_string()) throw io::FormatError("option equations must be a string such as \"1,2\"");
  const EquationSet eqs = EquationSet::parse(text.get<std::string>());
  if (eqs.needs_involution()) ring->require_involution();
  bool count_only = false;
  if (auto it = job.options.find("count_only"); it != job.options.end()) {
    if (!it->is_boolean()) throw io::FormatError("option count_only must be a boolean");
    count_only = it->get<bool>();
  }
  Json j{{"ring", io::ring_to_json(ring->spec())}, {"subject", io::element_to_json(a)}, {"equations", eqs.str()}};
  if (count_only) {
    j["count"] = count_inverse_set(a, eqs);
  } else {
    const std::vector<Element> members = enumerate_inverse_set(a, eqs);
    Json list = Json::array();
    for (const Element& x : members) list.push_back(io::element_to_json(x));
    j["count"] = members.size();
    j["members"] = std::move(list);
  }
  if (timing) j["elapsed_seconds"] = seconds_since(start);
  out << io::dump(j);
  return kOk;
}

int run_prescribe(const io::JobSpec& job, bool timing, std::ostream& out) {
  check_option_keys(job, {"constraints", "mode"});
  const auto start = std::chrono::steady_clock::now();
  RingPtr ring = job_ring(job);
  Element a = job_element(job, ring);
  const IdealConstraints constraints = io::parse_constraints(ring, required_option(job, "constraints"));
  constraints.validate(*ring);
  const std::string mode = string_option(job, "mode", "one");
  Json j;
  int code = kOk;
  if (mode == "one") {
    std::string why;
    auto family = one_inverse_family(a, constraints, &why);
    j = {{"ring", io::ring_to_json(ring->spec())},
         {"subject", io::element_to_json(a)},
         {"inverse", "inner-with-ideals"}};
    if (!family) {
      j["status"] = "none";
      j["reason"] = why;
      code = kNotFound;
    } else {
      j["status"] = "family";
      j["shape"] = shape_name(family->shape);
      j["result"] = io::element_to_json(family->base);
      j["parametrization"] = {{"left", io::element_to_json(family->left_mult)},
                              {"inner", io::element_to_json(family->inner)},
                              {"right", io::element_to_json(family->right_mult)},
                              {"inner_fixed", family->inner_fixed},
                              {"free_parameter", family->free_parameter_role}};
      if (ring->is_finite()) {
        Json list = Json::array();
        const std::vector<Element> members = family->members();
        for (const Element& x : members) list.push_back(io::element_to_json(x));
        j["count"] = members.size();
        j["members"] = std::move(list);
      }
    }
  } else if (mode == "outer" || mode == "reflexive") {
    InverseReport report = outer_with(a, constraints, mode == "reflexive");
    j = io::report_to_json(report);
    code = report.found() ? kOk : kNotFound;
  } else {
    throw io::FormatError("mode must be one, outer or reflexive");
  }
  j["mode"] = mode;
  j["constraints"] = io::constraints_to_json(constraints);
  if (timing) j["elapsed_seconds"] = seconds_since(start);
  out << io::dump(j);
  return code;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string id;
  while (std::getline(in, id, ','))
    if (!id.empty()) out.push_back(id);
  return out;
}

std::string catalog_listing() {
  std::string s = "known theorem ids:";
  for (const oracle::TheoremCase& c : oracle::catalog()) s += "\n  " + c.id;
  return s;
}

int run_verify(const io::JobSpec& job, bool timing, std::ostream& out) {
  check_option_keys(job, {"theorems", "max_cases", "max_seconds"});
  std::vector<std::string> ids;
  const Json theorems = job.options.value("theorems", Json("all"));
  if (theorems.is_string()) {
    ids = split_ids(theorems.get<std::string>());
  } else if (theorems.is_array()) {
    for (const Json& t : theorems) {
      if (!t.is_string()) throw io::FormatError("theorem ids must be strings");
      ids.push_back(t.get<std::string>());
    }
  } else {
    throw io::FormatError("option theorems must be \"all\", a comma separated list or an array");
  }
  std::vector<const oracle::TheoremCase*> cases;
  if (ids.size() == 1 && ids[0] == "all") {
    for (const oracle::TheoremCase& c : oracle::catalog()) cases.push_back(&c);
  } else {
    if (ids.empty()) throw io::FormatError("no theorem ids given");
    for (const std::string& id : ids) {
      const oracle::TheoremCase* c = oracle::find_case(id);
      if (!c) throw io::FormatError("unknown theorem id \"" + id + "\"\n" + catalog_listing());
      cases.push_back(c);
    }
  }
  oracle::Budget budget;
  if (auto it = job.options.find("max_cases"); it != job.options.end()) {
    if (!it->is_number_unsigned()) throw io::FormatError("option max_cases must be a nonnegative integer");
    budget.max_cases = it->get<std::uint64_t>();
  }
  if (auto it = job.options.find("max_seconds"); it != job.options.end()) {
    if (!it->is_number()) throw io::FormatError("option max_seconds must be a number");
    budget.max_seconds = it->get<double>();
  }
  std::vector<RingSpec> rings;
  if (job.ring) {
    rings.push_back(*job.ring);
  } else {
    rings = {RingSpec::modular_ring(6), RingSpec::modular_ring(8),
             RingSpec::matrix_ring(2, ScalarField::prime(2), Involution::transpose)};
  }
  Json reports = Json::array();
  std::uint64_t counterexamples = 0, incomplete = 0;
  for (const RingSpec& spec : rings) {
    const oracle::TableRing table(spec);
    for (const oracle::TheoremCase* c : cases) {
      const oracle::VerificationReport r = oracle::verify(*c, table, budget);
      if (r.counterexample) ++counterexamples;
      else if (!r.complete) ++incomplete;
      reports.push_back(io::verification_to_json(r, timing));
    }
  }
  Json j{{"reports", std::move(reports)},
         {"summary",
          {{"rings", rings.size()},
           {"theorems", cases.size()},
           {"counterexamples", counterexamples},
           {"incomplete", incomplete}}}};
  out << io::dump(j);
  if (counterexamples) return kCounterexample;
  if (incomplete) return kBudgetExceeded;
  return kOk;
}

}  // namespace

const std::vector<std::string>& inverse_names() {
  static const std::vector<std::string> names = {
      "inner", "group", "drazin", "moore-penrose", "core", "dual-core", "ef-mp", "e-core", "f-dual-core",
      "w-core", "v-dual-core", "right-w-core", "left-v-dual-core", "bc", "pq", "bott-duffin"};
  return names;
}

InverseReport compute_inverse(const Element& a, const std::string& name, const std::map<std::string, Element>& params,
                              const std::string& flavor) {
  if (name == "inner") return inner_report(a);
  if (name == "group") return group_inverse(a);
  if (name == "drazin") return drazin_inverse(a);
  if (name == "moore-penrose") return moore_penrose(a);
  if (name == "core") return core_inverse(a);
  if (name == "dual-core") return dual_core_inverse(a);
  if (name == "ef-mp") return weighted_mp(a, param_or_one(params, "e", a), param_or_one(params, "f", a));
  if (name == "e-core") return e_core(a, param_or_one(params, "e", a));
  if (name == "f-dual-core") return f_dual_core(a, param_or_one(params, "f", a));
  if (name == "w-core") return w_core(a, param_or_one(params, "w", a));
  if (name == "v-dual-core") return v_dual_core(a, param_or_one(params, "v", a));
  if (name == "right-w-core") return right_w_core(a, param_or_one(params, "w", a));
  if (name == "left-v-dual-core") return left_v_dual_core(a, param_or_one(params, "v", a));
  if (name == "bc") {
    return bc_inverse(a, required_param(params, "b", name), required_param(params, "c", name),
                      parse_bc_flavor(flavor.empty() ? "full" : flavor));
  }
  if (name == "pq") {
    return pq_inverse(a, required_param(params, "p", name), required_param(params, "q", name),
                      parse_pq_flavor(flavor.empty() ? "djordjevic-wei" : flavor));
  }
  if (name == "bott-duffin") {
    const Element& p = required_param(params, "p", name);
    auto q = params.find("q");
    if (q == params.end()) return pq_inverse(a, p, p, PqFlavor::bott_duffin_p);
    return pq_inverse(a, p, q->second, PqFlavor::bott_duffin_pq);
  }
  std::string known;
  for (const std::string& n : inverse_names()) known += (known.empty() ? "" : ", ") + n;
  throw io::FormatError("unknown inverse \"" + name + "\"; expected one of " + known);
}

int execute(const io::JobSpec& job, bool timing, std::ostream& out) {
  switch (job.command) {
    case io::Command::compute: return run_compute(job, timing, out);
    case io::Command::enumerate: return run_enumerate(job, timing, out);
    case io::Command::prescribe: return run_prescribe(job, timing, out);
    case io::Command::verify: return run_verify(job, timing, out);
  }
  return kUsage;
}

namespace {

struct Flags {
  std::string ring;
  std::string element;
  std::string inverse;
  std::string flavor;
  std::map<std::string, std::string> params;
  std::string equations;
  bool count_only = false;
  std::string constraints;
  std::string mode = "one";
  std::string theorems = "all";
  std::optional<std::uint64_t> max_cases;
  std::optional<double> max_seconds;
};

// Reads a file path, or stdin for "-".
std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw io::FormatError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

// Element-valued options are stored in canonical JSON form.
Json element_option(const io::JobSpec& job, const std::string& text) {
  if (!job.ring) throw io::FormatError("element options need --ring");
  return io::element_to_json(io::parse_element_text(Ring::make(*job.ring), text));
}

io::JobSpec job_from_flags(io::Command command, const Flags& f, std::istream& in) {
  io::JobSpec job;
  job.command = command;
  if (!f.ring.empty()) job.ring = io::parse_ring_text(f.ring);
  if (!f.element.empty()) job.element = element_option(job, f.element);
  switch (command) {
    case io::Command::compute:
      if (!f.inverse.empty()) job.options["inverse"] = f.inverse;
      if (!f.flavor.empty()) job.options["flavor"] = f.flavor;
      for (const auto& [name, text] : f.params) job.options[name] = element_option(job, text);
      break;
    case io::Command::enumerate:
      if (!f.equations.empty()) job.options["equations"] = f.equations;
      if (f.count_only) job.options["count_only"] = true;
      break;
    case io::Command::prescribe:
      if (!f.constraints.empty()) {
        const std::string text = f.constraints.front() == '@' ? slurp(f.constraints.substr(1), in) : f.constraints;
        job.options["constraints"] = io::parse_text(text);
      }
      job.options["mode"] = f.mode;
      break;
    case io::Command::verify:
      job.options["theorems"] = f.theorems;
      if (f.max_cases) job.options["max_cases"] = *f.max_cases;
      if (f.max_seconds) job.options["max_seconds"] = *f.max_seconds;
      break;
  }
  return job;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UnsupportedInvolution& e) {
    err << "error: " << e.what() << "\n";
    return kNoInvolution;
  } catch (const NotEnumerable& e) {
    err << "error: " << e.what() << "\n";
    return kNotEnumerable;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const io::Json::exception& e) {
    err << "error: malformed JSON value: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses in Z_n and matrix rings, with an exhaustive theorem checker.", "geninv"};
  app.require_subcommand(0, 1);
  std::string job_path;
  bool timing = false;
  app.add_option("--job", job_path, "Read a JSON job from a file, or stdin for -");
  app.add_flag("--timing", timing, "Add elapsed_seconds to the output");

  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", f.ring, "zn:N, mNq, mNfP (optionally :nostar) or a JSON ring");
    sub->add_flag("--timing", timing, "Add elapsed_seconds to the output");
  };
  CLI::App* compute = app.add_subcommand("compute", "Compute a named inverse");
  common(compute);
  compute->add_option("--element", f.element, "Element as JSON, an integer, I or Eij")->required();
  compute->add_option("--inverse", f.inverse, "Inverse name")->required();
  compute->add_option("--flavor", f.flavor, "(b,c) or (p,q) variant");
  for (const char* p : kParamNames)
    compute->add_option(std::string("--") + p, f.params[p], std::string("Element ") + p);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List a{i,j,...} on a finite ring");
  common(enumerate);
  enumerate->add_option("--element", f.element, "Element")->required();
  enumerate->add_option("--equations", f.equations, "Equations such as 1,2 or 1^2")->required();
  enumerate->add_flag("--count-only", f.count_only, "Print only the cardinality");

  CLI::App* prescribe = app.add_subcommand("prescribe", "Inverses with prescribed ideals");
  common(prescribe);
  prescribe->add_option("--element", f.element, "Element")->required();
  prescribe->add_option("--constraints", f.constraints, "Constraint JSON, or @file")->required();
  prescribe->add_option("--mode", f.mode, "one, outer or reflexive")->check(CLI::IsMember({"one", "outer", "reflexive"}));

  CLI::App* verify = app.add_subcommand("verify", "Run the theorem catalog on finite rings");
  common(verify);
  verify->add_option("--theorems", f.theorems, "all, or comma separated ids");
  verify->add_option("--max-cases", f.max_cases, "Stop after this many cases per theorem and ring");
  verify->add_option("--max-seconds", f.max_seconds, "Stop after this many seconds per theorem and ring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  // Empty element options mean "not given".
  for (auto it = f.params.begin(); it != f.params.end();) it = it->second.empty() ? f.params.erase(it) : std::next(it);

  return guarded(
      [&]() -> int {
        if (!job_path.empty()) {
          if (!app.get_subcommands().empty()) throw io::FormatError("--job replaces the subcommand");
          return execute(io::parse_job(io::parse_text(slurp(job_path, in))), timing, out);
        }
        io::Command command;
        if (compute->parsed()) command = io::Command::compute;
        else if (enumerate->parsed()) command = io::Command::enumerate;
        else if (prescribe->parsed()) command = io::Command::prescribe;
        else if (verify->parsed()) command = io::Command::verify;
        else throw io::FormatError("a subcommand or --job is required\n" + app.help());
        return execute(job_from_flags(command, f, in), timing, out);
      },
      err);
}

}  // namespace geninv::cli
