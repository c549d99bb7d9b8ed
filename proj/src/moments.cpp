/*
 * Copyright 2026 the cjmoment authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "moments.hpp"

#include <algorithm>
#include <cmath>

namespace cjm {

namespace {
constexpr double kWeightClampFloor = -1e-12;
}

void require_normalized(const MomentSequence& s, double tol) {
  if (s.empty()) fail(ErrorCode::parse_error, "moment sequence is empty");
  if (std::abs(s[0] - Complex(1.0)) > tol)
    fail(ErrorCode::normalization_error, "moment sequence must start with s_0 = 1");
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double tau, double rho)
    : atoms_(std::move(atoms)), tau_(tau), rho_(rho) {
  if (atoms_.empty()) fail(ErrorCode::empty_measure, "measure needs at least one atom");
  for (auto& a : atoms_) {
    if (!std::isfinite(a.w) || !std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()))
      fail(ErrorCode::invalid_argument, "non-finite atom");
    if (a.w < 0.0) {
      if (a.w < kWeightClampFloor)
        fail(ErrorCode::negative_weight, "negative weight beyond rounding tolerance");
      most_negative_ = std::min(most_negative_, a.w);
      a.w = 0.0;
      ++clamped_count_;
    }
  }
}

double AtomicMeasure::mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.w;
  return m;
}

double AtomicMeasure::support_radius() const {
  double r = 0.0;
  for (const auto& a : atoms_) r = std::max(r, std::abs(a.z));
  return r;
}

}  // namespace cjm
