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

#include "functional.hpp"

#include <cmath>

namespace cjm::functional {

linalg::Matrix hankel_window(const BilinearFunctional& f, std::size_t k) {
  if (2 * k > f.max_index())
    fail(ErrorCode::insufficient_moments, "Hankel window of order " + std::to_string(k) +
                                              " needs moment 2k");
  linalg::Matrix h(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) h(i, j) = f.moments()[i + j];
  return h;
}

HankelReport hankel_nonsingular(const BilinearFunctional& f, std::size_t k, double tol) {
  const linalg::Matrix h = hankel_window(f, k);
  const auto sv = linalg::singular_values(h);
  HankelReport rep;
  rep.smallest_sv = sv.back();
  rep.largest_sv = sv.front();
  rep.nonsingular = rep.smallest_sv > tol * rep.largest_sv && rep.largest_sv > 0.0;
  return rep;
}

namespace {

template <class T>
T pair_bilinear(const std::vector<T>& u, const std::vector<T>& v) {
  T acc(0);
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) acc += u[i] * v[i];
  return acc;
}

}  // namespace

OrthonormalityReport check_orthonormality(const jacobi::JacobiSpec& spec, std::size_t n_max,
                                          double tol) {
  if (spec.size() == 0 || 2 * n_max > spec.size() - 1)
    fail(ErrorCode::window_overflow, "window too short for moments up to 2 n_max");
  const auto u = jacobi::recurrence_basis_vectors(spec, n_max + 1);
  OrthonormalityReport rep;
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t m = n; m <= n_max; ++m) {
      const Complex val = pair_bilinear(u[n], u[m]);
      const double want = n == m ? 1.0 : 0.0;
      rep.max_deviation = std::max(rep.max_deviation, std::abs(val - want));
    }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

bool check_orthonormality_exact(const jacobi::JacobiSpecQ& spec, std::size_t n_max) {
  if (spec.size() == 0 || 2 * n_max > spec.size() - 1)
    fail(ErrorCode::window_overflow, "window too short for moments up to 2 n_max");
  const auto u = jacobi::recurrence_basis_vectors(spec, n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t m = n; m <= n_max; ++m) {
      RationalComplex val = pair_bilinear(u[n], u[m]);
      if (n == m) val = val - RationalComplex(1);
      if (!val.is_zero()) return false;
    }
  return true;
}

}  // namespace cjm::functional
