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

#ifndef CJM_RECONSTRUCT_HPP
#define CJM_RECONSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "jacobi.hpp"
#include "moments.hpp"
#include "scalars.hpp"

namespace cjm::reconstruct {

// Branch choice for the off-diagonal square roots. The principal branch puts
// the argument in (-pi/2, pi/2], with sqrt(-t) = +i sqrt(t) on the cut; an
// explicit list flips individual entries.
struct SignRule {
  enum class Kind { principal, explicit_list };
  Kind kind = Kind::principal;
  std::vector<int> signs;  // +1 / -1, used by explicit_list

  static SignRule principal() { return {}; }
  static SignRule list(std::vector<int> s) {
    SignRule r;
    r.kind = Kind::explicit_list;
    r.signs = std::move(s);
    return r;
  }
};

// Formal orthogonalization: recovers the window (a_0..a_{n-2}, b_0..b_{n-1})
// from moments s_0..s_{2n-2} (plus s_{2n-1} for the last b). Breakdown(k)
// signals a vanishing self-pairing sigma(q, q) at step k.
jacobi::JacobiSpec moments_to_jacobi(const MomentSequence& s, std::size_t n,
                                     const SignRule& rule);

// Exact-rational variant; the square roots must exist in the Gaussian
// rationals (they do on roundtrips), otherwise InexactSquareRoot.
jacobi::JacobiSpecQ moments_to_jacobi_exact(const std::vector<RationalComplex>& s, std::size_t n,
                                            const SignRule& rule);

struct RoundtripReport {
  double max_b_deviation = 0.0;
  double max_a_sq_deviation = 0.0;
  bool signs_reproduce = false;     // some +/-1 list recovers the original a_k
  double sign_match_deviation = 0.0;
  std::vector<int> matching_signs;
};

RoundtripReport roundtrip_check(const jacobi::JacobiSpec& spec, std::size_t n,
                                const SignRule& rule);

}  // namespace cjm::reconstruct

#endif
