// Copyright 2026 The Authors.
//
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

#ifndef KAHN_ERRORS_HPP_
#define KAHN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kahn {

// Bad user input: invalid ids, malformed parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated by the caller.
class CallerBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The independence oracle contradicted the matroid axioms. Every guarantee
// built on top of the oracle is void once this is raised.
class OracleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance or solution file does not match the schema or fails validation.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kahn

#endif  // KAHN_ERRORS_HPP_
