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

#include <algorithm>
#include <cmath>

#include "blotto/errors.hpp"

namespace blotto {

QuadraticRoots quadratic_roots(double a, double b, double c) {
  QuadraticRoots r{a, b, c};
  if (a == 0) {
    if (b == 0) {
      if (c == 0) throw DegenerateAllZero();
      r.kind = QuadraticRoots::Kind::NoReal;
      return r;
    }
    r.kind = QuadraticRoots::Kind::DoubleRoot;
    r.z_minus = r.z_plus = -c / b;
    return r;
  }
  const double disc = b * b - 4 * a * c;
  const double scale = std::max(b * b, 4 * std::fabs(a * c));
  if (std::fabs(disc) <= 1e-12 * scale) {
    r.kind = QuadraticRoots::Kind::DoubleRoot;
    r.z_minus = r.z_plus = -b / (2 * a);
    return r;
  }
  if (disc < 0) {
    r.kind = QuadraticRoots::Kind::NoReal;
    return r;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double z1 = q / a;
  double z2 = q != 0 ? c / q : -z1;
  if (z1 > z2) std::swap(z1, z2);
  r.kind = QuadraticRoots::Kind::TwoReal;
  r.z_minus = z1;
  r.z_plus = z2;
  return r;
}

}  // namespace blotto
