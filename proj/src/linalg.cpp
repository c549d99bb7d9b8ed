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

#include "linalg.hpp"

#include <numeric>

namespace cjm::linalg {

namespace {

struct Givens {
  double c;   // real
  Complex s;
};

Givens make_givens(Complex f, Complex g) {
  if (g == Complex(0)) return {1.0, Complex(0)};
  if (f == Complex(0)) return {0.0, std::conj(g) / std::abs(g)};
  const double d = std::hypot(std::abs(f), std::abs(g));
  const double c = std::abs(f) / d;
  const Complex s = (f / std::abs(f)) * std::conj(g) / d;
  return {c, s};
}

// Householder reduction to upper Hessenberg form, accumulating the transform.
void hessenberg(Matrix& h, Matrix& q) {
  const std::size_t n = h.size();
  q = Matrix::identity(n);
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double nx = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) nx += std::norm(h(i, k));
    nx = std::sqrt(nx);
    if (nx < 1e-300) continue;
    const Complex alpha = h(k + 1, k);
    const Complex phase = std::abs(alpha) > 0 ? alpha / std::abs(alpha) : Complex(1);
    double nv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] += phase * nx;
    for (std::size_t i = k + 1; i < n; ++i) nv += std::norm(v[i]);
    nv = std::sqrt(nv);
    if (nv < 1e-300) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= nv;
    // rows: H <- (I - 2 v v^H) H
    for (std::size_t j = k; j < n; ++j) {
      Complex acc(0);
      for (std::size_t i = k + 1; i < n; ++i) acc += std::conj(v[i]) * h(i, j);
      acc *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= acc * v[i];
    }
    // columns: H <- H (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0);
      for (std::size_t j = k + 1; j < n; ++j) acc += h(i, j) * v[j];
      acc *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= acc * std::conj(v[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0);
      for (std::size_t j = k + 1; j < n; ++j) acc += q(i, j) * v[j];
      acc *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= acc * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex(0);
  }
}

// Shifted QR on the Hessenberg matrix; returns the triangular factor in h and
// the accumulated Schur basis in z. Explicit single shift with a Givens chase.
void qr_schur(Matrix& h, Matrix& z) {
  const std::size_t n = h.size();
  if (n == 0) return;
  const double ulp = std::numeric_limits<double>::epsilon();
  const std::size_t max_steps = 30 * n;
  std::size_t steps = 0;
  std::size_t hi = n - 1;
  int stall = 0;
  std::vector<Givens> rots(n);
  while (true) {
    while (hi > 0) {
      const double sd = std::abs(h(hi, hi - 1));
      if (sd <= ulp * (std::abs(h(hi, hi)) + std::abs(h(hi - 1, hi - 1))) || sd < 1e-300) {
        h(hi, hi - 1) = Complex(0);
        --hi;
        stall = 0;
      } else {
        break;
      }
    }
    if (hi == 0) break;
    std::size_t lo = hi;
    while (lo > 0) {
      const double sd = std::abs(h(lo, lo - 1));
      if (sd <= ulp * (std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1))) || sd < 1e-300) {
        h(lo, lo - 1) = Complex(0);
        break;
      }
      --lo;
    }

    // Wilkinson shift: eigenvalue of the trailing 2x2 nearest to h(hi,hi)
    const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1), d = h(hi, hi);
    Complex shift = d;
    const Complex p = 0.5 * (a - d);
    const Complex disc = std::sqrt(p * p + b * c);
    const Complex den = std::abs(p + disc) >= std::abs(p - disc) ? p + disc : p - disc;
    if (std::abs(den) > 1e-300) shift = d - (b * c) / den;
    ++stall;
    if (stall % 10 == 0) {
      shift = d + 0.75 * std::abs(h(hi, hi - 1)) * Complex(1.0, 0.5);
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= shift;
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = make_givens(h(i, i), h(i + 1, i));
      rots[i] = g;
      for (std::size_t j = i; j < n; ++j) {
        const Complex t1 = h(i, j), t2 = h(i + 1, j);
        h(i, j) = g.c * t1 + g.s * t2;
        h(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = rots[i];
      const std::size_t top = std::min(i + 2, hi + 1);
      for (std::size_t r = 0; r < top; ++r) {
        const Complex t1 = h(r, i), t2 = h(r, i + 1);
        h(r, i) = g.c * t1 + std::conj(g.s) * t2;
        h(r, i + 1) = -g.s * t1 + g.c * t2;
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Complex t1 = z(r, i), t2 = z(r, i + 1);
        z(r, i) = g.c * t1 + std::conj(g.s) * t2;
        z(r, i + 1) = -g.s * t1 + g.c * t2;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += shift;

    if (++steps > max_steps)
      fail(ErrorCode::no_convergence, "QR iteration exceeded the 30n step budget");
  }
}

// Eigenvector of the triangular factor for eigenvalue at position k, by
// back-substitution; near-singular pivots get the customary floor.
std::vector<Complex> schur_vector(const Matrix& t, std::size_t k, double tnorm) {
  const std::size_t n = t.size();
  std::vector<Complex> y(n, Complex(0));
  y[k] = Complex(1);
  const double floor_den = std::numeric_limits<double>::epsilon() * tnorm;
  for (std::size_t jj = k; jj-- > 0;) {
    Complex acc(0);
    for (std::size_t m = jj + 1; m <= k; ++m) acc += t(jj, m) * y[m];
    Complex den = t(jj, jj) - t(k, k);
    if (std::abs(den) < floor_den) den = Complex(floor_den);
    y[jj] = -acc / den;
  }
  return y;
}

}  // namespace

ComplexEig complex_eig(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty matrix");
  if (n > kMaxDimension) fail(ErrorCode::invalid_argument, "dimension above supported cap");

  const double anorm = fro_norm(a);

  // commutator test for normality, Frobenius throughout
  const Matrix ah = adjoint(a);
  const Matrix comm = sub(matmul(ah, a), matmul(a, ah));
  const bool normal = fro_norm(comm) <= 1e-9 * std::max(anorm * anorm, 1e-290);

  // unitary test decides the eigenvalue ordering
  Matrix gram = matmul(ah, a);
  for (std::size_t i = 0; i < n; ++i) gram(i, i) -= Complex(1);
  const bool unitary = fro_norm(gram) <= 1e-9 * static_cast<double>(n);

  Matrix t = a, z;
  hessenberg(t, z);
  qr_schur(t, z);

  double strict_upper = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) strict_upper += std::norm(t(i, j));
  strict_upper = std::sqrt(strict_upper);

  ComplexEig out;
  out.normal_input = normal;
  out.schur_strict_upper = strict_upper;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = t(k, k);

  Matrix vecs(n);
  if (normal) {
    vecs = z;  // Schur basis is the eigenbasis
  } else {
    const double tnorm = std::max(fro_norm(t), 1e-290);
    for (std::size_t k = 0; k < n; ++k) {
      const auto y = schur_vector(t, k, tnorm);
      std::vector<Complex> v(n, Complex(0));
      for (std::size_t r = 0; r < n; ++r) {
        Complex acc(0);
        for (std::size_t m = 0; m <= k; ++m) acc += z(r, m) * y[m];
        v[r] = acc;
      }
      double nv = 0.0;
      for (const auto& x : v) nv += std::norm(x);
      nv = std::sqrt(nv);
      for (std::size_t r = 0; r < n; ++r) vecs(r, k) = v[r] / nv;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (unitary) {
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const double ax = std::arg(out.eigenvalues[x]), ay = std::arg(out.eigenvalues[y]);
      if (ax != ay) return ax < ay;
      return std::abs(out.eigenvalues[x]) < std::abs(out.eigenvalues[y]);
    });
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const Complex& ex = out.eigenvalues[x];
      const Complex& ey = out.eigenvalues[y];
      if (ex.real() != ey.real()) return ex.real() < ey.real();
      return ex.imag() < ey.imag();
    });
  }
  ComplexEig sorted;
  sorted.normal_input = out.normal_input;
  sorted.schur_strict_upper = out.schur_strict_upper;
  sorted.eigenvalues.resize(n);
  sorted.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted.eigenvalues[k] = out.eigenvalues[order[k]];
    for (std::size_t r = 0; r < n; ++r) sorted.vectors(r, k) = vecs(r, order[k]);
  }
  return sorted;
}

}  // namespace cjm::linalg
