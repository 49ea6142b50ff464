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

#include "blotto/quadratic.hpp"

#include "blotto/errors.hpp"
#include "gtest/gtest.h"

namespace blotto {
namespace {

using Kind = QuadraticRoots::Kind;

TEST(QuadraticRoots, TwoReal) {
  const auto r = quadratic_roots(1, -3, 2);
  EXPECT_EQ(r.kind, Kind::TwoReal);
  EXPECT_DOUBLE_EQ(r.z_minus, 1);
  EXPECT_DOUBLE_EQ(r.z_plus, 2);
}

TEST(QuadraticRoots, NoReal) {
  EXPECT_EQ(quadratic_roots(1, 0, 1).kind, Kind::NoReal);
}

TEST(QuadraticRoots, DoubleRoot) {
  const auto r = quadratic_roots(1, -2, 1);
  EXPECT_EQ(r.kind, Kind::DoubleRoot);
  EXPECT_DOUBLE_EQ(r.z_minus, 1);
  EXPECT_DOUBLE_EQ(r.z_plus, 1);
}

TEST(QuadraticRoots, LinearFallback) {
  const auto r = quadratic_roots(0, 2, -1);
  EXPECT_EQ(r.kind, Kind::DoubleRoot);
  EXPECT_DOUBLE_EQ(r.z_minus, 0.5);
  EXPECT_EQ(quadratic_roots(0, 0, 3).kind, Kind::NoReal);
  EXPECT_THROW(quadratic_roots(0, 0, 0), DegenerateAllZero);
}

TEST(QuadraticRoots, StableUnderCancellation) {
  // Roots 1e-8 and 1e8.
  const auto r = quadratic_roots(1, -(1e8 + 1e-8), 1);
  EXPECT_EQ(r.kind, Kind::TwoReal);
  EXPECT_NEAR(r.z_minus, 1e-8, 1e-22);
  EXPECT_NEAR(r.z_plus, 1e8, 1e-6);
}

TEST(QuadraticRoots, NegativeLeadingCoefficient) {
  const auto r = quadratic_roots(-2, 2, 4);
  EXPECT_EQ(r.kind, Kind::TwoReal);
  EXPECT_DOUBLE_EQ(r.z_minus, -1);
  EXPECT_DOUBLE_EQ(r.z_plus, 2);
}

}  // namespace
}  // namespace blotto
