// Copyright 2026 The mbqc-gflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mbqc {

/// An exhaustive search or dense representation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A transfer map or assembled matrix is not unitary, so the pattern did not act deterministically.
class NotDeterministic : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Upstream data violated an invariant it was promised to satisfy (e.g. a gFlow with too few
/// disjoint input/output paths).
class InconsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An operation was called out of sequence on a stateful object.
class InvalidState : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Malformed input document. `field` names the offending member when known.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, std::string field = {})
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

   private:
    std::string field_;
};

}  // namespace mbqc
