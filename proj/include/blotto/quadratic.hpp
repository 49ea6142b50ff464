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

namespace blotto {

// Real roots of a z^2 + b z + c = 0.
struct QuadraticRoots {
  enum class Kind { TwoReal, DoubleRoot, NoReal };

  double a = 0;
  double b = 0;
  double c = 0;
  Kind kind = Kind::NoReal;
  // TwoReal: z_minus < z_plus. DoubleRoot: both hold the single root.
  double z_minus = 0;
  double z_plus = 0;
};

// Uses the sign(b) form to avoid cancellation. A discriminant within
// 1e-12 * max(b^2, 4|ac|) of zero is reported as a double root; a == 0 falls
// back to the linear root (reported as DoubleRoot). Throws DegenerateAllZero
// when a == b == c == 0.
QuadraticRoots quadratic_roots(double a, double b, double c);

}  // namespace blotto
