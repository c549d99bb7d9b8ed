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

#include "scalars.hpp"

#include "errors.hpp"

namespace cjm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::normalization_error: return "NormalizationError";
    case ErrorCode::zero_off_diagonal: return "ZeroOffDiagonal";
    case ErrorCode::empty_spec: return "EmptySpec";
    case ErrorCode::window_overflow: return "WindowOverflow";
    case ErrorCode::insufficient_moments: return "InsufficientMoments";
    case ErrorCode::degree_overflow: return "DegreeOverflow";
    case ErrorCode::breakdown: return "Breakdown";
    case ErrorCode::inexact_square_root: return "InexactSquareRoot";
    case ErrorCode::nonpositive_tau: return "NonpositiveTau";
    case ErrorCode::not_a_contraction: return "NotAContraction";
    case ErrorCode::identity_check_failed: return "IdentityCheckFailed";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::negative_eigenvalue: return "NegativeEigenvalue";
    case ErrorCode::negative_weight: return "NegativeWeight";
    case ErrorCode::empty_measure: return "EmptyMeasure";
    case ErrorCode::tolerance_exceeded: return "ToleranceExceeded";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  auto num = integer_sqrt_exact(boost::multiprecision::numerator(x));
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(boost::multiprecision::denominator(x));
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<RationalComplex> rational_complex_sqrt(const RationalComplex& z) {
  if (z.im == 0) {
    if (z.re >= 0) {
      auto r = rational_sqrt(z.re);
      if (!r) return std::nullopt;
      return RationalComplex(*r, 0);
    }
    auto r = rational_sqrt(-z.re);
    if (!r) return std::nullopt;
    return RationalComplex(0, *r);  // branch point: sqrt(-t) = +i sqrt(t)
  }
  // z = u + iv, v != 0: with m = |z|, the root is p + iq, p^2 = (u + m)/2,
  // q = v / (2p); all pieces must be exact rationals.
  auto m = rational_sqrt(z.re * z.re + z.im * z.im);
  if (!m) return std::nullopt;
  auto p = rational_sqrt((z.re + *m) / 2);
  if (!p || *p == 0) return std::nullopt;
  Rational q = z.im / (2 * (*p));
  // principal branch: Re > 0 here since p > 0
  return RationalComplex(*p, q);
}

}  // namespace cjm
