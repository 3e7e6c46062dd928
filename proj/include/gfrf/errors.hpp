// gfrf/errors.hpp

// Copyright 2026 GFRF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gfrf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments, malformed files, shape mismatches. Mapped to CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: solver residual too large, singular frame, overflow.
// Mapped to CLI exit code 1.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfrf
