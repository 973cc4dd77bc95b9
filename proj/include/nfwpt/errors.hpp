// SPDX-License-Identifier: Apache-2.0
//
// nfwpt: near-field wireless power transfer simulation library
// Copyright (C) 2026 The nfwpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfwpt {

/// Radiator and observation point coincide (or a sphere swallows a radiator).
class SingularGeometryError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The effective channel is zero, so no transmit power reaches the target.
class UnreachableTargetError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Frequency outside the tabulated exposure-limit range.
class FrequencyRangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class OptimizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Scenario text could not be parsed or violates a constraint.
/// `line()` is 0 for constraint errors that are not tied to one line.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string &what, std::size_t line = 0, std::string key = {})
        : std::runtime_error(what), line_(line), key_(std::move(key)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &key() const noexcept { return key_; }

  private:
    std::size_t line_;
    std::string key_;
};

} // namespace nfwpt
