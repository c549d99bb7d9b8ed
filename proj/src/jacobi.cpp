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

#include "jacobi.hpp"

namespace cjm::jacobi {

MomentSequence compute_moments(const JacobiSpec& spec, std::size_t K) {
  return MomentSequence(window_moments(spec, K));
}

double norm_bound(const JacobiSpec& spec) {
  validate(spec);
  const std::size_t n = spec.size();
  if (spec.a.empty()) return std::abs(spec.b[0]);
  double bound = std::abs(spec.b[0]) + std::abs(spec.a[0]);  // row 0
  for (std::size_t r = 1; r + 1 < n; ++r)
    bound = std::max(bound,
                     std::abs(spec.a[r - 1]) + std::abs(spec.b[r]) + std::abs(spec.a[r]));
  // rows from n-1 on repeat the last window entries
  bound = std::max(bound, 2.0 * std::abs(spec.a.back()) + std::abs(spec.b.back()));
  return bound;
}

linalg::Matrix finite_section(const JacobiSpec& spec, std::size_t n) {
  if (n == 0 || n > spec.size())
    fail(ErrorCode::window_overflow, "section size exceeds the window");
  linalg::Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = spec.b[i];
    if (i + 1 < n) {
      m(i, i + 1) = spec.a[i];
      m(i + 1, i) = spec.a[i];
    }
  }
  return m;
}

}  // namespace cjm::jacobi
