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

#ifndef CJM_SCALARS_HPP
#define CJM_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <optional>

namespace cjm {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// Gaussian rational x + iy with exact arithmetic. Used by the exact mode of
// the recurrence identities; a double converts into it without loss.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(int v) : re(v) {}  // NOLINT: implicit for 0/1 literals in templates
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static RationalComplex from(const Complex& z) {
    return RationalComplex(Rational(z.real()), Rational(z.imag()));
  }

  Complex to_complex() const {
    return Complex(static_cast<double>(re), static_cast<double>(im));
  }

  bool is_zero() const { return re == 0 && im == 0; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
  RationalComplex& operator-=(const RationalComplex& o) { return *this = *this - o; }
  RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool scalar_is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool scalar_is_zero(const RationalComplex& z) { return z.is_zero(); }

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline RationalComplex conj_of(const RationalComplex& z) { return {z.re, -z.im}; }

// Magnitude for reporting; exact zero maps to exact 0.0.
inline double abs_approx(const Complex& z) { return std::abs(z); }
inline double abs_approx(const RationalComplex& z) {
  if (z.is_zero()) return 0.0;
  return std::hypot(static_cast<double>(z.re), static_cast<double>(z.im));
}

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const RationalComplex& z) { return z.to_complex(); }

// Exact square root of a nonnegative rational, when one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

// Exact square root in the Gaussian rationals, when one exists. The principal
// branch is returned: argument in (-pi/2, pi/2], a negative real gets +i|x|^(1/2).
std::optional<RationalComplex> rational_complex_sqrt(const RationalComplex& z);

}  // namespace cjm

#endif
