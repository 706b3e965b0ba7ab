// Copyright 2026 The morphplan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHPLAN_ERRORS_HPP
#define MORPHPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace morphplan {

/// Findings produced by the report-style validators. Empty means valid.
using Findings = std::vector<std::string>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document does not match its interchange schema, or a decimal is malformed.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A model, configuration, operation or instance violates an invariant.
/// Carries the individual findings when more than one was detected.
class ValidationError : public Error {
 public:
  // By reference: callers often build `what` from the same findings in the
  // same full-expression.
  explicit ValidationError(std::string what, const Findings& findings = {})
      : Error(std::move(what)), findings_(findings) {}

  const Findings& findings() const noexcept { return findings_; }

 private:
  Findings findings_;
};

/// An edit was authored against a different alternative than the one held.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No selection satisfies the budget, or the instance is out of solver range.
class SolverError : public Error {
 public:
  using Error::Error;
};

inline std::string join_findings(const Findings& findings) {
  std::string out;
  for (const auto& f : findings) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

}  // namespace morphplan

#endif  // MORPHPLAN_ERRORS_HPP
