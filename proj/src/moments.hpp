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

#ifndef CJM_MOMENTS_HPP
#define CJM_MOMENTS_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace cjm {

// Power moments s_0..s_K. Consumers that assume the normalization s_0 = 1
// (the solver, reconstruction, file loaders) call require_normalized first;
// measure_moments may legitimately produce sequences of any mass.
struct MomentSequence {
  std::vector<Complex> values;

  MomentSequence() = default;
  explicit MomentSequence(std::vector<Complex> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  // Highest available moment index K.
  std::size_t max_index() const { return values.empty() ? 0 : values.size() - 1; }
  const Complex& operator[](std::size_t n) const { return values[n]; }
};

void require_normalized(const MomentSequence& s, double tol = 1e-9);

struct Atom {
  Complex z;
  double w;
};

// Finitely many point masses with nonnegative weights. Construction clamps
// rounding-level negative weights (>= -1e-12) to zero and records how many;
// anything more negative is rejected.
class AtomicMeasure {
 public:
  explicit AtomicMeasure(std::vector<Atom> atoms, double tau = 0.0, double rho = 0.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double mass() const;
  double support_radius() const;

  double tau() const { return tau_; }
  double rho() const { return rho_; }

  // Clamp diagnostics: number of weights snapped to zero and the most
  // negative raw value seen.
  std::size_t clamped_count() const { return clamped_count_; }
  double most_negative_weight() const { return most_negative_; }

 private:
  std::vector<Atom> atoms_;
  double tau_;
  double rho_;
  std::size_t clamped_count_ = 0;
  double most_negative_ = 0.0;
};

}  // namespace cjm

#endif
