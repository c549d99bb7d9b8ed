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

#ifndef CJM_POLYNOMIAL_HPP
#define CJM_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "scalars.hpp"

namespace cjm {

// Dense polynomial in the monomial basis; coefficient k multiplies z^k.
// Only exact zero coefficients are trimmed, so the degree bookkeeping is
// tolerance-free: the zero polynomial has degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(std::size_t k, T coeff = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(coeff);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  T eval(const T& z) const {
    if (c_.empty()) return T(0);
    T acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> c(p.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
    return Poly(std::move(c));
  }

  // Cauchy convolution. The accumulation order (outer index over `a`) is part
  // of the contract: it makes mul(shift(a), b) and mul(a, shift(b)) bitwise
  // identical, which the functional module's exact symmetry tests rely on.
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  // Multiplication by the variable: exact coefficient shift.
  Poly shifted_up() const {
    if (c_.empty()) return Poly();
    std::vector<T> c(c_.size() + 1, T(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k];
    return Poly(std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!scalar_is_zero(a.c_[k] - b.c_[k])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = Poly<Complex>;
using PolynomialQ = Poly<RationalComplex>;

inline PolynomialQ to_exact(const Polynomial& p) {
  std::vector<RationalComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.push_back(RationalComplex::from(z));
  return PolynomialQ(std::move(c));
}

inline Polynomial to_double(const PolynomialQ& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.push_back(z.to_complex());
  return Polynomial(std::move(c));
}

}  // namespace cjm

#endif
