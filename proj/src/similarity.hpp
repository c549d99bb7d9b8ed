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

#ifndef CJM_SIMILARITY_HPP
#define CJM_SIMILARITY_HPP

#include <cstddef>
#include <vector>

#include "jacobi.hpp"
#include "linalg.hpp"
#include "moments.hpp"
#include "polynomial.hpp"

namespace cjm::similarity {

// The basis map T sends coordinate vectors to polynomial combinations of the
// recurrence family: T(xi) = sum_k xi_k p_k. The polynomials are regenerated
// from the window and the recurrence is re-checked on construction.
template <class T>
struct BasisMap {
  jacobi::Window<T> spec;
  std::vector<Poly<T>> polys;  // p_0..p_d

  std::size_t degree() const { return polys.empty() ? 0 : polys.size() - 1; }

  static BasisMap build(const jacobi::Window<T>& spec, std::size_t d) {
    jacobi::validate(spec);
    if (d + 2 > spec.size())
      fail(ErrorCode::window_overflow, "basis map needs window of at least d+2");
    BasisMap map;
    map.spec = spec;
    map.polys = jacobi::recurrence_polynomials(spec, d + 1);
    for (std::size_t k = 0; k < map.polys.size(); ++k)
      if (map.polys[k].degree() != static_cast<int>(k))
        fail(ErrorCode::invalid_argument, "recurrence degrees are inconsistent");
    return map;
  }
};

using BasisMapD = BasisMap<Complex>;
using BasisMapQ = BasisMap<RationalComplex>;

template <class T>
Poly<T> apply_T(const BasisMap<T>& map, const std::vector<T>& xi) {
  if (xi.size() > map.polys.size())
    fail(ErrorCode::degree_overflow, "coefficient vector exceeds the basis degree");
  Poly<T> acc;
  for (std::size_t k = 0; k < xi.size(); ++k) acc = acc + xi[k] * map.polys[k];
  return acc;
}

// Coefficient-level intertwining residual: max over k <= d of the coefficient
// deviation between lambda p_k and a_{k-1} p_{k-1} + b_k p_k + a_k p_{k+1}.
// Exactly zero in the rational mode, where it is the recurrence re-read.
template <class T>
double check_intertwining(const jacobi::Window<T>& spec, std::size_t d) {
  if (d + 2 > spec.size())
    fail(ErrorCode::window_overflow, "intertwining check needs window of at least d+2");
  const auto p = jacobi::recurrence_polynomials(spec, d + 2);
  double residual = 0.0;
  for (std::size_t k = 0; k <= d; ++k) {
    Poly<T> lhs = p[k].shifted_up();
    Poly<T> rhs = spec.b[k] * p[k] + spec.a[k] * p[k + 1];
    if (k > 0) rhs = rhs + spec.a[k - 1] * p[k - 1];
    const Poly<T> diff = lhs - rhs;
    for (const auto& c : diff.coeffs()) residual = std::max(residual, abs_approx(c));
  }
  return residual;
}

struct GramReport {
  linalg::Matrix matrix;
  double smallest_sv = 0.0;
};

// Hermitian Gram matrix G_{jk} = sum_i w_i p_j(z_i) conj(p_k(z_i)) of the
// basis images in L^2 of the measure; a positive smallest singular value
// certifies injectivity of T on vectors of length d+1.
GramReport gram_matrix(const BasisMapD& map, const AtomicMeasure& mu, std::size_t d);

// Bilinear (non-conjugated) Gram values sum_i w_i p_j(z_i) p_k(z_i); for
// measures that solve the window's moment problem these return to the
// orthonormality pattern.
linalg::Matrix bilinear_gram(const BasisMapD& map, const AtomicMeasure& mu, std::size_t d);

}  // namespace cjm::similarity

#endif
