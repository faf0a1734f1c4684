// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy analysis of FC-RIS and UAV assisted multiuser downlinks
// Copyright (C) 2026 The rissec Authors
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

namespace rissec {

// Argument outside the mathematical domain of an operation (zero distance,
// negative shape, empty user list, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A numerical routine could not reach its accuracy target.
class AccuracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Problem size exceeds what an exact enumeration path supports.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace rissec
