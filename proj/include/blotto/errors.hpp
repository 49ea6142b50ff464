// Copyright 2026 The Blotto Transfers Authors
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

namespace blotto {

// Base class for every error raised by the library. Callers that only care
// about "bad input vs. everything else" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A game parameter is zero or negative.
class NonPositiveParameter : public Error {
 public:
  explicit NonPositiveParameter(std::string field)
      : Error(field + " must be > 0"), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A game parameter is NaN or infinite.
class NonFinite : public Error {
 public:
  explicit NonFinite(std::string field)
      : Error(field + " must be finite"), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A transfer component lies outside its open domain.
class TransferOutOfRange : public Error {
 public:
  TransferOutOfRange(std::string component, double bound, bool upper)
      : Error(component + (upper ? " must be < " : " must be > ") +
              std::to_string(bound)),
        component_(std::move(component)),
        bound_(bound),
        upper_(upper) {}
  const std::string& component() const noexcept { return component_; }
  double bound() const noexcept { return bound_; }
  bool is_upper_bound() const noexcept { return upper_; }

 private:
  std::string component_;
  double bound_;
  bool upper_;
};

// Case classification fell through every condition. Indicates a logic error.
class Unclassifiable : public Error {
 public:
  using Error::Error;
};

// A derivative was requested at a point where the payoff is not smooth.
class OnCaseBoundary : public Error {
 public:
  using Error::Error;
};

// A finite-difference probe crossed a case boundary.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class DegenerateAllZero : public Error {
 public:
  DegenerateAllZero() : Error("quadratic with all-zero coefficients") {}
};

class NotInGv : public Error {
 public:
  NotInGv() : Error("game admits no mutually beneficial valuation transfer") {}
};

}  // namespace blotto
