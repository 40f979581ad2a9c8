// Copyright 2026 The duality-lab Authors
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

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace duality_lab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// omega^power with omega = exp(2*pi*i/N). The exponent is reduced mod N
/// first so large products k*l keep full precision.
inline Complex root_of_unity(int num_paths, std::int64_t power) {
  std::int64_t r = power % num_paths;
  if (r < 0) r += num_paths;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(num_paths);
  return std::polar(1.0, angle);
}

inline int mod(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace duality_lab
