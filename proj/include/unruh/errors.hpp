// Copyright 2026 The unruh-chsh Authors
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

#ifndef UNRUH_ERRORS_HPP
#define UNRUH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unruh {

/// Bad argument: out-of-range index, dimension mismatch, invalid config.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but degenerate (e.g. normalizing a zero vector).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result that must be real or hermitian came out otherwise beyond tolerance.
class NumericalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace unruh

#endif  // UNRUH_ERRORS_HPP
