// Copyright 2026 The twrmec Authors
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

#ifndef TWRMEC_LAMBERT_W_H_
#define TWRMEC_LAMBERT_W_H_

namespace twrmec {

// Arguments this far below -1/e are treated as rounding noise and clamped to
// the branch point.
inline constexpr double kLambertDomainSlack = 1e-15;

// Principal branch W0 of the Lambert W function: the w >= -1 solving
// w * exp(w) = x. Halley iteration from a branch-point series, Taylor series or
// asymptotic starting guess.
//
// Throws std::domain_error if x < -1/e - kLambertDomainSlack or x is NaN.
double LambertW0(double x);

}  // namespace twrmec

#endif  // TWRMEC_LAMBERT_W_H_
