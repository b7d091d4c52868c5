// Copyright 2026 The entsim Authors
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

namespace entsim {

/// Input violates a documented precondition (bad dimension, non-unit axis,
/// malformed table, ...).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal algebraic check failed. These indicate a bug, not bad input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The observable is outside the supported +1/-1 spectral family.
class unsupported_observable : public validation_error {
 public:
  using validation_error::validation_error;
};

/// A hidden-variable model broke its response contract (value not in {-1,+1}).
class model_contract_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entsim
