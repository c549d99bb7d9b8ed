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

#ifndef CJM_DILATION_HPP
#define CJM_DILATION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "moments.hpp"

namespace cjm::dilation {

// max over 1 <= n <= K of |s_n|^(1/n); every windowed moment satisfies
// |s_n| <= R^n by construction.
double growth_radius(const MomentSequence& s);

// s_n -> s_n / tau^n.
MomentSequence scale_moments(const MomentSequence& s, double tau);

// The vectors g = (0, conj s_1, conj s_2, ...) and
// f = (conj s_1, conj s_2 - conj(s_1)^2, conj s_3 - conj(s_2)conj(s_1), ...),
// truncated to length L. Needs moments up to index L.
std::pair<std::vector<Complex>, std::vector<Complex>> moment_vectors(const MomentSequence& s,
                                                                     std::size_t L);

// L x L matrix of the shift-plus-rank-two operator in the standard basis:
// row 0 = (s_1, s_2 - s_1^2, ..., s_{L} - s_{L-1} s_1), row 1 = (1, -s_1,
// ..., -s_{L-1}), then a subdiagonal of ones. Built columnwise from the
// rank-two form and checked entrywise against the row pattern.
linalg::Matrix moment_matrix(const MomentSequence& s, std::size_t L);

// max over n <= n_max of |(M^n e_0)_0 - s_n|. Exact up to rounding for
// n_max <= L-1.
double verify_moment_identity(const linalg::Matrix& m, const MomentSequence& s,
                              std::size_t n_max);

// Certified upper bound rho for the spectral norm: the smaller of the
// power-iteration estimate with a 1e-6 safety factor and the structural
// triangle bound 1 + |f| + |g| read off the rows; a second, independently
// started power iteration must confirm |M/rho| <= 1 or the triangle bound
// wins outright.
double contraction_bound(const linalg::Matrix& m);

// Finite unitary power dilation on K+2 block coordinates; the compression of
// U^n to the first block equals the n-th power of the contraction for all
// n <= K+1 by the block sparsity alone.
linalg::Matrix power_dilation(const linalg::Matrix& contraction, std::size_t K);

// The proof objects, assembled at double precision for inspection and tests.
struct DilationModel {
  MomentSequence scaled;            // s~_0 .. s~_{K+1}
  std::vector<Complex> f, g;
  linalg::Matrix mat;               // L x L, L = K+1
  double tau = 0.0;
  double rho = 0.0;
  linalg::Matrix contraction;       // mat / rho
  std::size_t K = 0;
  linalg::Matrix dilation;          // (K+2)(K+1) unitary
  std::vector<Complex> x0;          // embedded first basis vector
};

DilationModel build_dilation_model(const MomentSequence& s, std::size_t K,
                                   std::optional<double> tau = std::nullopt);

struct SolveOptions {
  std::optional<double> tau;   // default 1.25 * max(growth_radius, 1e-3)
  double tolerance = 1e-8;     // required moment reproduction
};

// Full solver: scale, build the operator, certify the contraction, dilate,
// atomize the spectral decomposition. The returned measure has mass
// one, atoms on the circle of radius tau*rho, and reproduces s_0..s_K within
// options.tolerance (IdentityCheckFailed otherwise).
AtomicMeasure solve_moment_problem(const MomentSequence& s, std::size_t K,
                                   const SolveOptions& options = {});

// s_n = sum_j w_j z_j^n for n <= K, accumulated in extended precision.
MomentSequence measure_moments(const AtomicMeasure& mu, std::size_t K);

}  // namespace cjm::dilation

#endif
