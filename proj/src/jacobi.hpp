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

#ifndef CJM_JACOBI_HPP
#define CJM_JACOBI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "moments.hpp"
#include "polynomial.hpp"
#include "scalars.hpp"

namespace cjm::jacobi {

// Finite window of a semi-infinite tridiagonal matrix: diagonal entries
// b_0..b_{N-1} and off-diagonal entries a_0..a_{N-2} (the matrix is complex
// symmetric, the same a_k sits on both sides of the diagonal). Identities
// that would need entries outside the window raise WindowOverflow instead of
// silently truncating.
template <class T>
struct Window {
  std::vector<T> a;
  std::vector<T> b;

  std::size_t size() const { return b.size(); }
};

using JacobiSpec = Window<Complex>;
using JacobiSpecQ = Window<RationalComplex>;

inline JacobiSpecQ to_exact(const JacobiSpec& s) {
  JacobiSpecQ q;
  q.a.reserve(s.a.size());
  q.b.reserve(s.b.size());
  for (const auto& z : s.a) q.a.push_back(RationalComplex::from(z));
  for (const auto& z : s.b) q.b.push_back(RationalComplex::from(z));
  return q;
}

inline JacobiSpec to_double(const JacobiSpecQ& s) {
  JacobiSpec d;
  d.a.reserve(s.a.size());
  d.b.reserve(s.b.size());
  for (const auto& z : s.a) d.a.push_back(z.to_complex());
  for (const auto& z : s.b) d.b.push_back(z.to_complex());
  return d;
}

struct ValidationReport {
  std::size_t window = 0;
  double entry_bound = 0.0;  // max(max|a_k|, max|b_k|)
};

template <class T>
ValidationReport validate(const Window<T>& spec) {
  if (spec.size() == 0) fail(ErrorCode::empty_spec, "empty Jacobi window");
  if (spec.a.size() + 1 != spec.b.size())
    fail(ErrorCode::invalid_argument,
         "off-diagonal count must be one less than the diagonal count");
  ValidationReport rep;
  rep.window = spec.size();
  for (std::size_t k = 0; k < spec.a.size(); ++k) {
    if (scalar_is_zero(spec.a[k]))
      fail(ErrorCode::zero_off_diagonal, "off-diagonal entry a_" + std::to_string(k) + " is zero",
           static_cast<long>(k));
    rep.entry_bound = std::max(rep.entry_bound, abs_approx(spec.a[k]));
  }
  for (const auto& z : spec.b) rep.entry_bound = std::max(rep.entry_bound, abs_approx(z));
  return rep;
}

// Band action (Ju)_n = a_{n-1} u_{n-1} + b_n u_n + a_n u_{n+1} with a_{-1} = 0.
// The result is one coordinate longer; the window must cover it exactly.
template <class T>
std::vector<T> apply_window(const Window<T>& spec, const std::vector<T>& u) {
  const std::size_t len = u.size();
  if (len == 0) return {};
  if (len > spec.size() - 1 || spec.size() == 0)
    fail(ErrorCode::window_overflow,
         "band action would reach coordinates outside the window");
  std::vector<T> r(len + 1, T(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (scalar_is_zero(u[i])) continue;
    if (i > 0) r[i - 1] += spec.a[i - 1] * u[i];
    r[i] += spec.b[i] * u[i];
    r[i + 1] += spec.a[i] * u[i];
  }
  return r;
}

// First `count` recurrence polynomials p_0..p_{count-1}: p_0 = 1 and
// a_{n-1} p_{n-1} + b_n p_n + a_n p_{n+1} = lambda p_n. deg p_k = k and the
// leading coefficient is 1/(a_0...a_{k-1}).
template <class T>
std::vector<Poly<T>> recurrence_polynomials(const Window<T>& spec, std::size_t count) {
  if (count > spec.size())
    fail(ErrorCode::window_overflow, "polynomial count exceeds the window");
  std::vector<Poly<T>> p;
  p.reserve(count);
  if (count == 0) return p;
  p.push_back(Poly<T>::constant(T(1)));
  for (std::size_t k = 0; k + 1 < count; ++k) {
    Poly<T> q = p[k].shifted_up() - spec.b[k] * p[k];
    if (k > 0) q = q - spec.a[k - 1] * p[k - 1];
    p.push_back((T(1) / spec.a[k]) * q);
  }
  return p;
}

// Vectors u_k = p_k(J) e_0, computed by the coordinate recurrence; u_k equals
// e_k exactly in exact arithmetic.
template <class T>
std::vector<std::vector<T>> recurrence_basis_vectors(const Window<T>& spec, std::size_t count) {
  if (count > spec.size())
    fail(ErrorCode::window_overflow, "basis vector count exceeds the window");
  std::vector<std::vector<T>> u;
  u.reserve(count);
  if (count == 0) return u;
  u.push_back({T(1)});
  for (std::size_t k = 0; k + 1 < count; ++k) {
    std::vector<T> q = apply_window(spec, u[k]);
    for (std::size_t i = 0; i < u[k].size(); ++i) q[i] -= spec.b[k] * u[k][i];
    if (k > 0)
      for (std::size_t i = 0; i < u[k - 1].size(); ++i) q[i] -= spec.a[k - 1] * u[k - 1][i];
    const T inv = T(1) / spec.a[k];
    for (auto& x : q) x = inv * x;
    u.push_back(std::move(q));
  }
  return u;
}

// Moments s_n = (J^n e_0)_0 for n <= K, via iterated band action and the
// bilinear coordinate read-off.
template <class T>
std::vector<T> window_moments(const Window<T>& spec, std::size_t K) {
  if (spec.size() == 0 || K > spec.size() - 1)
    fail(ErrorCode::window_overflow, "moment order exceeds the exact window");
  std::vector<T> s;
  s.reserve(K + 1);
  std::vector<T> u{T(1)};
  s.push_back(T(1));
  for (std::size_t n = 0; n < K; ++n) {
    u = apply_window(spec, u);
    s.push_back(u.empty() ? T(0) : u[0]);
  }
  return s;
}

MomentSequence compute_moments(const JacobiSpec& spec, std::size_t K);

// Upper bound for the operator norm of the semi-infinite matrix whose window
// agrees with spec and whose tail repeats the last entries: the row-sum bound
// sup_n (|a_{n-1}| + |b_n| + |a_n|).
double norm_bound(const JacobiSpec& spec);

// Leading principal n x n submatrix, dense; symmetric, not Hermitian.
linalg::Matrix finite_section(const JacobiSpec& spec, std::size_t n);

}  // namespace cjm::jacobi

#endif
