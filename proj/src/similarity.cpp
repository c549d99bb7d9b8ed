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

#include "similarity.hpp"

#include <cmath>

namespace cjm::similarity {

GramReport gram_matrix(const BasisMapD& map, const AtomicMeasure& mu, std::size_t d) {
  if (mu.size() == 0) fail(ErrorCode::empty_measure, "measure has no atoms");
  if (d > map.degree())
    fail(ErrorCode::degree_overflow, "Gram degree exceeds the basis map");
  const std::size_t n = d + 1;
  // values p_j(z_i)
  std::vector<std::vector<Complex>> vals(mu.size(), std::vector<Complex>(n));
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) vals[i][j] = map.polys[j].eval(mu.atoms()[i].z);

  GramReport rep;
  rep.matrix = linalg::Matrix(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc(0);
      for (std::size_t i = 0; i < mu.size(); ++i)
        acc += mu.atoms()[i].w * vals[i][j] * std::conj(vals[i][k]);
      rep.matrix(j, k) = acc;
    }
  const auto eig = linalg::hermitian_eig(rep.matrix, 1e-8);
  rep.smallest_sv = std::max(eig.eigenvalues.front(), 0.0);
  // G is PSD by construction, so its singular values are its eigenvalues.
  return rep;
}

linalg::Matrix bilinear_gram(const BasisMapD& map, const AtomicMeasure& mu, std::size_t d) {
  if (mu.size() == 0) fail(ErrorCode::empty_measure, "measure has no atoms");
  if (d > map.degree())
    fail(ErrorCode::degree_overflow, "Gram degree exceeds the basis map");
  const std::size_t n = d + 1;
  std::vector<std::vector<Complex>> vals(mu.size(), std::vector<Complex>(n));
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) vals[i][j] = map.polys[j].eval(mu.atoms()[i].z);
  linalg::Matrix g(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc(0);
      for (std::size_t i = 0; i < mu.size(); ++i)
        acc += mu.atoms()[i].w * vals[i][j] * vals[i][k];
      g(j, k) = acc;
    }
  return g;
}

}  // namespace cjm::similarity
