// Copyright 2026 the lpbench authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lpbench {

// Error taxonomy. The CLI maps these onto process exit codes:
// usage/schema -> 64, precondition/degenerate -> 65, anything else -> 70.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Label or index-set mismatch: unknown label, functions on different sets.
class domain_error : public error {
 public:
  using error::error;
};

// Structural mismatch: wrong vector dimension, non-square kernel, ragged data.
class shape_error : public error {
 public:
  using error::error;
};

// The call itself is malformed: invalid exponent combination, bad flag value.
class usage_error : public error {
 public:
  using error::error;
};

// Numeric precondition violated: non-conjugate exponents at runtime, negative
// inputs where nonnegative ones are required, norms exceeding a stated bound.
class precondition_error : public error {
 public:
  using error::error;
};

// Input is degenerate for the requested construction (e.g. witness of the
// zero function).
class degenerate_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// JSON payload does not match the expected schema; message carries the path
// to the offending field.
class schema_error : public usage_error {
 public:
  using usage_error::usage_error;
};

}  // namespace lpbench
