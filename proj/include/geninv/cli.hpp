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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "geninv/io.hpp"

namespace geninv::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,               // found, or every check passed
  kNotFound = 1,         // the requested inverse does not exist
  kCounterexample = 2,   // verify found a counterexample
  kBudgetExceeded = 3,   // verify stopped before finishing
  kUsage = 64,           // bad arguments or malformed input
  kNoInvolution = 65,    // the ring has no involution
  kNotEnumerable = 66,   // the ring is infinite
  kInternal = 70,        // a computed answer failed its own validation
};

// Names accepted by the compute command, in documentation order.
const std::vector<std::string>& inverse_names();

// Dispatches one named inverse. `params` holds the optional weights and
// idempotents (e, f, w, v, b, c, p, q); `flavor` selects the (b,c) or (p,q)
// variant and may be empty.
InverseReport compute_inverse(const Element& a, const std::string& name, const std::map<std::string, Element>& params,
                              const std::string& flavor);

// Runs a job and writes its JSON result to out.
int execute(const io::JobSpec& job, bool timing, std::ostream& out);

// Full command line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace geninv::cli
