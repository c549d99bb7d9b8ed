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

#ifndef CJM_FUNCTIONAL_HPP
#define CJM_FUNCTIONAL_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "jacobi.hpp"
#include "linalg.hpp"
#include "moments.hpp"
#include "polynomial.hpp"

namespace cjm::functional {

// The linear functional S and the bilinear functional sigma determined by a
// moment list: S(z^n) = s_n by linearity, sigma(u, v) = S(uv). In this
// representation sigma(zu, v) = sigma(u, zv) holds bitwise, both being the
// same coefficient sum.
template <class T>
class BasicFunctional {
 public:
  explicit BasicFunctional(std::vector<T> moments) : s_(std::move(moments)) {}

  std::size_t max_index() const { return s_.empty() ? 0 : s_.size() - 1; }
  const std::vector<T>& moments() const { return s_; }

  T S(const Poly<T>& p) const {
    if (p.degree() > static_cast<int>(max_index()) || s_.empty())
      fail(ErrorCode::insufficient_moments,
           "functional needs moments up to degree " + std::to_string(p.degree()));
    T acc(0);
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * s_[k];
    return acc;
  }

  T sigma(const Poly<T>& u, const Poly<T>& v) const {
    if (u.is_zero() || v.is_zero()) return T(0);
    if (u.degree() + v.degree() > static_cast<int>(max_index()))
      fail(ErrorCode::insufficient_moments, "sigma needs moments beyond the window");
    return S(u * v);
  }

 private:
  std::vector<T> s_;
};

using BilinearFunctional = BasicFunctional<Complex>;
using BilinearFunctionalQ = BasicFunctional<RationalComplex>;

inline BilinearFunctional make_functional(const MomentSequence& s) {
  return BilinearFunctional(s.values);
}

// Matrix of sigma on monomials of degree <= k: entry (i,j) = s_{i+j}.
// Symmetric, not Hermitian.
linalg::Matrix hankel_window(const BilinearFunctional& f, std::size_t k);

struct HankelReport {
  bool nonsingular = false;
  double smallest_sv = 0.0;
  double largest_sv = 0.0;
};

// Numerical nondegeneracy of sigma on polynomials of degree <= k, via the
// singular values of the Hankel window.
HankelReport hankel_nonsingular(const BilinearFunctional& f, std::size_t k, double tol = 1e-10);

struct OrthonormalityReport {
  double max_deviation = 0.0;
  bool pass = false;
};

// max over n,m <= n_max of |S(p_n p_m) - delta_{nm}| for the recurrence
// polynomials of the window. Evaluated through the band-action vectors
// p_n(J)e_0 and the bilinear pairing, which is the numerically faithful
// route for S on this family.
OrthonormalityReport check_orthonormality(const jacobi::JacobiSpec& spec, std::size_t n_max,
                                          double tol);

// Exact-mode variant: true iff every deviation is exactly zero.
bool check_orthonormality_exact(const jacobi::JacobiSpecQ& spec, std::size_t n_max);

}  // namespace cjm::functional

#endif
