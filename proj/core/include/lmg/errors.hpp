// Copyright 2026 The lmg Authors
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

#ifndef LMG_ERRORS_HPP
#define LMG_ERRORS_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace lmg {

/// A parameter is outside the set the operation is defined for
/// (e.g. a spin quantum number that is not a half-integer).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical function was evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested problem exceeds a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a value object was not met (e.g. an unrepaired
/// kappa matrix passed where a positive semi-definite one is required).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative numerical method failed. `last_good_time` is the last
/// time (or abscissa) for which the result is trustworthy, NaN if none.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double last_good_time = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(what), last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

/// Least-squares fit rejected because the data is not in the expected regime.
class FitQualityError : public NumericError {
 public:
  FitQualityError(const std::string& what, double r_squared)
      : NumericError(what), r_squared_(r_squared) {}

  double r_squared() const noexcept { return r_squared_; }

 private:
  double r_squared_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lmg

#endif  // LMG_ERRORS_HPP
