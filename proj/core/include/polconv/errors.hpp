// Copyright 2026 The polconv Authors
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

namespace polconv {

/// Raised when a state carries more weight on the top Fock levels than the
/// configured threshold allows, i.e. the cutoff is too small for the physics.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double tail_mass)
      : std::runtime_error(what), tail_mass_(tail_mass) {}

  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double tail_mass_;
};

/// Raised for inputs at which a quantity is undefined (vacuum Mandel Q,
/// zero-intensity polarization, impossible herald).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace polconv
