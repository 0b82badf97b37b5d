// SPDX-License-Identifier: Apache-2.0
//
// wlansim: WLAN coverage, interference and adaptive beamforming simulator
// Copyright (C) 2026 The wlansim authors
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

#include <stdexcept>
#include <string>

namespace wlansim
{

// Bad configuration or violated precondition. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Vector or matrix sizes that do not agree.
class DimensionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Lookup of an id that is not part of a static table.
class NotFoundError : public std::out_of_range
{
  public:
    using std::out_of_range::out_of_range;
};

// Input parsed but contained no usable records.
class EmptyInputError : public ValidationError
{
  public:
    using ValidationError::ValidationError;
};

// Least-squares system without a unique solution.
class DegenerateFitError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Unreadable input or unwritable output. Maps to CLI exit code 2.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wlansim
