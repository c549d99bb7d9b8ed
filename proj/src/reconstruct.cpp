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

#include "reconstruct.hpp"

#include <cmath>
#include <string>

#include "functional.hpp"
#include "polynomial.hpp"

namespace cjm::reconstruct {

namespace {

void check_rule(const SignRule& rule, std::size_t n) {
  if (rule.kind == SignRule::Kind::explicit_list) {
    if (n >= 1 && rule.signs.size() + 1 < n)
      fail(ErrorCode::invalid_argument, "sign list shorter than the off-diagonal count");
    for (int s : rule.signs)
      if (s != 1 && s != -1) fail(ErrorCode::invalid_argument, "signs must be +1 or -1");
  }
}

int sign_at(const SignRule& rule, std::size_t k) {
  return rule.kind == SignRule::Kind::explicit_list ? rule.signs[k] : 1;
}

}  // namespace

jacobi::JacobiSpec moments_to_jacobi(const MomentSequence& s, std::size_t n,
                                     const SignRule& rule) {
  if (n == 0) fail(ErrorCode::invalid_argument, "window size must be positive");
  require_normalized(s);
  if (s.max_index() + 1 < 2 * n)
    fail(ErrorCode::insufficient_moments,
         "reconstruction of a window of size " + std::to_string(n) + " needs 2n-1 moments");
  check_rule(rule, n);

  double smax_sq = 1.0;
  for (const auto& z : s.values) smax_sq = std::max(smax_sq, std::norm(z));
  const double breakdown_floor = 1e-12 * smax_sq;

  functional::BilinearFunctional f(s.values);
  jacobi::JacobiSpec out;
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(Complex(1)));
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial lp = p[k].shifted_up();
    out.b.push_back(f.sigma(lp, p[k]));
    if (k + 1 == n) break;
    Polynomial q = lp - out.b[k] * p[k];
    if (k > 0) q = q - out.a[k - 1] * p[k - 1];
    const Complex c = f.sigma(q, q);
    if (std::abs(c) <= breakdown_floor)
      fail(ErrorCode::breakdown,
           "orthogonalization broke down at step " + std::to_string(k) +
               " (|sigma(q,q)| = " + std::to_string(std::abs(c)) + ")",
           static_cast<long>(k));
    const Complex root = std::sqrt(c);  // principal branch
    const Complex ak = double(sign_at(rule, k)) * root;
    out.a.push_back(ak);
    p.push_back((Complex(1) / ak) * q);
  }
  return out;
}

jacobi::JacobiSpecQ moments_to_jacobi_exact(const std::vector<RationalComplex>& s, std::size_t n,
                                            const SignRule& rule) {
  if (n == 0) fail(ErrorCode::invalid_argument, "window size must be positive");
  if (s.empty() || !(s[0] == RationalComplex(1)))
    fail(ErrorCode::normalization_error, "moment sequence must start with s_0 = 1");
  if (s.size() < 2 * n)
    fail(ErrorCode::insufficient_moments, "exact reconstruction needs 2n-1 moments");
  check_rule(rule, n);

  functional::BilinearFunctionalQ f(s);
  jacobi::JacobiSpecQ out;
  std::vector<PolynomialQ> p;
  p.push_back(PolynomialQ::constant(RationalComplex(1)));
  for (std::size_t k = 0; k < n; ++k) {
    const PolynomialQ lp = p[k].shifted_up();
    out.b.push_back(f.sigma(lp, p[k]));
    if (k + 1 == n) break;
    PolynomialQ q = lp - out.b[k] * p[k];
    if (k > 0) q = q - out.a[k - 1] * p[k - 1];
    const RationalComplex c = f.sigma(q, q);
    if (c.is_zero())
      fail(ErrorCode::breakdown,
           "orthogonalization broke down at step " + std::to_string(k), static_cast<long>(k));
    auto root = rational_complex_sqrt(c);
    if (!root)
      fail(ErrorCode::inexact_square_root,
           "sigma(q,q) has no exact Gaussian-rational square root at step " +
               std::to_string(k),
           static_cast<long>(k));
    RationalComplex ak = *root;
    if (sign_at(rule, k) < 0) ak = -ak;
    out.a.push_back(ak);
    p.push_back((RationalComplex(1) / ak) * q);
  }
  return out;
}

RoundtripReport roundtrip_check(const jacobi::JacobiSpec& spec, std::size_t n,
                                const SignRule& rule) {
  jacobi::validate(spec);
  if (n == 0 || spec.size() < 2 * n)
    fail(ErrorCode::window_overflow, "roundtrip needs a window of at least 2n");
  const MomentSequence s = jacobi::compute_moments(spec, 2 * n - 1);
  const jacobi::JacobiSpec rec = moments_to_jacobi(s, n, rule);

  RoundtripReport rep;
  for (std::size_t k = 0; k < n; ++k)
    rep.max_b_deviation = std::max(rep.max_b_deviation, std::abs(rec.b[k] - spec.b[k]));
  rep.matching_signs.reserve(n - 1);
  double scale = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    rep.max_a_sq_deviation =
        std::max(rep.max_a_sq_deviation, std::abs(rec.a[k] * rec.a[k] - spec.a[k] * spec.a[k]));
    const double plus = std::abs(rec.a[k] - spec.a[k]);
    const double minus = std::abs(rec.a[k] + spec.a[k]);
    const int flip = rule.kind == SignRule::Kind::explicit_list ? rule.signs[k] : 1;
    rep.matching_signs.push_back(plus <= minus ? flip : -flip);
    rep.sign_match_deviation = std::max(rep.sign_match_deviation, std::min(plus, minus));
    scale = std::max(scale, std::abs(spec.a[k]));
  }
  rep.signs_reproduce = rep.sign_match_deviation <= 1e-6 * scale;
  return rep;
}

}  // namespace cjm::reconstruct
