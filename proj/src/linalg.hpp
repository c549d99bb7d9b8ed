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

#ifndef CJM_LINALG_HPP
#define CJM_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace cjm::linalg {

inline constexpr std::size_t kMaxDimension = 4096;  // O(n^3) kernels, desk scale

// Dense square complex matrix, row-major. The real type is a template
// parameter so the dilation pipeline can run in extended precision.
template <class R>
class Mat {
 public:
  using C = std::complex<R>;

  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), e_(n * n) {}

  static Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = C(1);
    return m;
  }

  // Checked construction for external data: rejects non-finite entries.
  static Mat from_entries(std::size_t n, std::vector<C> entries) {
    if (entries.size() != n * n)
      fail(ErrorCode::invalid_argument, "entry count does not match dimension");
    for (const auto& z : entries)
      if (!std::isfinite(static_cast<double>(z.real())) ||
          !std::isfinite(static_cast<double>(z.imag())))
        fail(ErrorCode::invalid_argument, "non-finite matrix entry");
    Mat m;
    m.n_ = n;
    m.e_ = std::move(entries);
    return m;
  }

  std::size_t size() const { return n_; }
  C& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const C& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<C>& entries() const { return e_; }

 private:
  std::size_t n_ = 0;
  std::vector<C> e_;
};

using Matrix = Mat<double>;

template <class R>
Mat<R> adjoint(const Mat<R>& a) {
  Mat<R> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

template <class R>
Mat<R> matmul(const Mat<R>& a, const Mat<R>& b) {
  const std::size_t n = a.size();
  Mat<R> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == std::complex<R>(0)) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <class R>
std::vector<std::complex<R>> matvec(const Mat<R>& a, const std::vector<std::complex<R>>& v) {
  const std::size_t n = a.size();
  std::vector<std::complex<R>> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<R> acc(0);
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

template <class R>
R fro_norm(const Mat<R>& a) {
  R acc(0);
  for (const auto& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

template <class R>
Mat<R> sub(const Mat<R>& a, const Mat<R>& b) {
  Mat<R> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline Mat<long double> widen(const Matrix& a) {
  Mat<long double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      r(i, j) = std::complex<long double>(a(i, j).real(), a(i, j).imag());
  return r;
}

inline Matrix narrow(const Mat<long double>& a) {
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      r(i, j) = Complex(static_cast<double>(a(i, j).real()),
                        static_cast<double>(a(i, j).imag()));
  return r;
}

template <class R>
struct HermitianEig {
  std::vector<R> eigenvalues;  // ascending
  Mat<R> vectors;              // unitary, columns matched to eigenvalues
};

// Cyclic complex Jacobi rotations. Quadratic convergence once the
// off-diagonal mass is small; the unitarity of the accumulated rotations is
// what the dilation module's weight normalization leans on.
template <class R>
HermitianEig<R> hermitian_eig(const Mat<R>& a_in, R hermitian_tol = R(1e-10));

// Hermitian PSD square root via hermitian_eig; eigenvalues in
// [-1e-10*|A|, 0) are clamped to zero, lower ones are an error.
template <class R>
Mat<R> psd_sqrt(const Mat<R>& a);

template <class R>
struct NormBound {
  R estimate;      // power-iteration value
  R upper_bound;   // estimate*(1+10 tol) capped by sqrt(maxrowsum*maxcolsum)
};

template <class R>
NormBound<R> spectral_norm_bound(const Mat<R>& a, R tol = R(1e-10));

template <class R>
struct NormalEig {
  std::vector<std::complex<R>> eigenvalues;
  Mat<R> vectors;  // orthonormal columns
};

// Eigendecomposition for (numerically) normal matrices: jointly diagonalizes
// the Hermitian and skew parts with Jacobi rotations, so the returned basis
// is orthonormal to rounding. Eigenvalues sorted by ascending argument, then
// modulus.
template <class R>
NormalEig<R> normal_eig(const Mat<R>& a);

// Singular values in descending order, through the Hermitian eigenvalues of
// [[0, A], [A^H, 0]] (which are +-sigma_i). This keeps absolute accuracy at
// the u*|A| level; forming A^H A would square away the small ones.
template <class R>
std::vector<R> singular_values(const Mat<R>& a) {
  const std::size_t n = a.size();
  Mat<R> w(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w(i, n + j) = a(i, j);
      w(n + i, j) = std::conj(a(j, i));
    }
  auto eig = hermitian_eig(w);
  std::vector<R> sv(n);
  for (std::size_t k = 0; k < n; ++k) sv[k] = std::max(eig.eigenvalues[2 * n - 1 - k], R(0));
  return sv;
}

struct ComplexEig {
  std::vector<Complex> eigenvalues;
  Matrix vectors;            // columns; orthonormal iff normal_input
  bool normal_input = false;
  double schur_strict_upper = 0.0;  // Frobenius mass above the diagonal of T
};

// General dense eigensolver: Householder Hessenberg reduction, then shifted
// QR with deflation (Wilkinson shifts, exceptional shift every 10 stalled
// steps, 30n step budget). Normal inputs return the Schur basis itself;
// otherwise eigenvectors come from back-substitution on the Schur factor.
// Ordering: ascending argument (then modulus) when the input is unitary,
// ascending real part (then imaginary) otherwise.
ComplexEig complex_eig(const Matrix& a);

// ---- definitions of the templated kernels ----

template <class R>
HermitianEig<R> hermitian_eig(const Mat<R>& a_in, R hermitian_tol) {
  const std::size_t n = a_in.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty matrix");
  if (n > kMaxDimension) fail(ErrorCode::invalid_argument, "dimension above supported cap");
  using C = std::complex<R>;

  R scale(0), herm_dev(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      scale += std::norm(a_in(i, j));
      herm_dev += std::norm(a_in(i, j) - std::conj(a_in(j, i)));
    }
  scale = std::sqrt(scale);
  if (std::sqrt(herm_dev) > hermitian_tol * std::max(scale, R(1e-290)) && scale > R(0))
    fail(ErrorCode::not_hermitian, "matrix is not Hermitian within tolerance");

  Mat<R> a = a_in;
  // symmetrize exactly so rotations see real diagonals
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      C m = (a(i, j) + std::conj(a(j, i))) / R(2);
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
    a(i, i) = C(a(i, i).real(), R(0));
  }

  Mat<R> q = Mat<R>::identity(n);
  const R eps = std::numeric_limits<R>::epsilon();
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    R off(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
    if (std::sqrt(R(2) * off) <= R(8) * eps * std::max(scale, R(1e-290))) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t qq = p + 1; qq < n; ++qq) {
        const C apq = a(p, qq);
        const R mag = std::abs(apq);
        if (mag == R(0)) continue;
        const R app = a(p, p).real(), aqq2 = a(qq, qq).real();
        const C phase = apq / mag;
        const R tau = (aqq2 - app) / (R(2) * mag);
        R t;
        if (tau == R(0)) {
          t = R(1);
        } else {
          const R sgn = tau > R(0) ? R(1) : R(-1);
          t = sgn / (std::abs(tau) + std::sqrt(R(1) + tau * tau));
        }
        const R c = R(1) / std::sqrt(R(1) + t * t);
        const C s = phase * (t * c);
        // A <- J^H A J on the (p,q) plane, J = [[c, s],[-conj(s), c]]
        for (std::size_t r = 0; r < n; ++r) {
          const C t1 = a(r, p), t2 = a(r, qq);
          a(r, p) = c * t1 - std::conj(s) * t2;
          a(r, qq) = s * t1 + c * t2;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const C t1 = a(p, r), t2 = a(qq, r);
          a(p, r) = c * t1 - s * t2;
          a(qq, r) = std::conj(s) * t1 + c * t2;
        }
        a(p, qq) = C(0);
        a(qq, p) = C(0);
        a(p, p) = C(a(p, p).real(), R(0));
        a(qq, qq) = C(a(qq, qq).real(), R(0));
        for (std::size_t r = 0; r < n; ++r) {
          const C t1 = q(r, p), t2 = q(r, qq);
          q(r, p) = c * t1 - std::conj(s) * t2;
          q(r, qq) = s * t1 + c * t2;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEig<R> out;
  out.eigenvalues.resize(n);
  out.vectors = Mat<R>(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = q(r, order[k]);
  }
  return out;
}

template <class R>
Mat<R> psd_sqrt(const Mat<R>& a) {
  auto eig = hermitian_eig(a);
  const std::size_t n = a.size();
  R top(0);
  for (auto v : eig.eigenvalues) top = std::max(top, std::abs(v));
  // eigenvalues inside the solver's own resolution are zeros; taking their
  // square roots would inflate rounding dust to sqrt(u) size
  const R snap = R(256) * std::numeric_limits<R>::epsilon() * top;
  std::vector<R> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    R v = eig.eigenvalues[k];
    if (v < R(0)) {
      if (v < R(-1e-10) * std::max(top, R(1e-290)))
        fail(ErrorCode::negative_eigenvalue, "matrix has a negative eigenvalue beyond the clamp");
      v = R(0);
    }
    if (v <= snap) v = R(0);
    roots[k] = std::sqrt(v);
  }
  Mat<R> s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::complex<R> acc(0);
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      s(i, j) = acc;
      s(j, i) = std::conj(acc);
    }
  return s;
}

template <class R>
NormBound<R> spectral_norm_bound(const Mat<R>& a, R tol) {
  using C = std::complex<R>;
  const std::size_t n = a.size();
  if (n == 0) return {R(0), R(0)};
  R maxrow(0), maxcol(0);
  std::vector<R> colsum(n, R(0));
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    R rs(0);
    for (std::size_t j = 0; j < n; ++j) {
      const R m = std::abs(a(i, j));
      if (m != R(0)) all_zero = false;
      rs += m;
      colsum[j] += m;
    }
    maxrow = std::max(maxrow, rs);
  }
  for (auto v : colsum) maxcol = std::max(maxcol, v);
  if (all_zero) return {R(0), R(0)};

  // deterministic start vector, generic direction
  std::vector<C> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const R t = R(0.7) * R(i + 1) + R(0.3);
    v[i] = C(std::cos(t), std::sin(R(1.3) * R(i + 1) + R(0.2)));
  }
  R vn(0);
  for (auto& z : v) vn += std::norm(z);
  vn = std::sqrt(vn);
  for (auto& z : v) z /= vn;

  const Mat<R> ah = adjoint(a);
  R est(0);
  for (int it = 0; it < 500; ++it) {
    auto w = matvec(a, v);
    R wn(0);
    for (auto& z : w) wn += std::norm(z);
    wn = std::sqrt(wn);
    if (wn == R(0)) {
      est = R(0);
      break;
    }
    auto u = matvec(ah, w);
    R un(0);
    for (auto& z : u) un += std::norm(z);
    un = std::sqrt(un);
    const R next = wn;  // ||A v||, with ||v|| = 1
    if (un == R(0)) {
      est = next;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
    if (it > 2 && std::abs(next - est) <= tol * std::max(next, R(1e-290))) {
      est = next;
      break;
    }
    est = next;
  }
  // Schur test: ||A||_2 <= sqrt(||A||_1 ||A||_inf)
  const R cross = std::sqrt(maxrow * maxcol);
  return {est, std::min(est * (R(1) + R(10) * tol), cross)};
}

template <class R>
NormalEig<R> normal_eig(const Mat<R>& a) {
  using C = std::complex<R>;
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty matrix");
  Mat<R> h(n), s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const C x = a(i, j), y = std::conj(a(j, i));
      h(i, j) = (x + y) / R(2);
      s(i, j) = (x - y) / (C(0, 2));
    }
  auto he = hermitian_eig(h, R(1e-6));
  Mat<R>& q = he.vectors;

  // Within clusters of the Hermitian part, diagonalize the skew part.
  R hscale(0);
  for (auto v : he.eigenvalues) hscale = std::max(hscale, std::abs(v));
  const R ctol =
      std::max(R(1024) * R(n) * std::numeric_limits<R>::epsilon() * std::max(hscale, R(1)),
               R(1e-290));
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo;
    while (hi + 1 < n && he.eigenvalues[hi + 1] - he.eigenvalues[hi] <= ctol) ++hi;
    const std::size_t m = hi - lo + 1;
    if (m > 1) {
      Mat<R> block(m);
      // block = Q_c^H S Q_c
      std::vector<C> tmp(n);
      for (std::size_t bj = 0; bj < m; ++bj) {
        for (std::size_t r = 0; r < n; ++r) {
          C acc(0);
          for (std::size_t k = 0; k < n; ++k) acc += s(r, k) * q(k, lo + bj);
          tmp[r] = acc;
        }
        for (std::size_t bi = 0; bi < m; ++bi) {
          C acc(0);
          for (std::size_t r = 0; r < n; ++r) acc += std::conj(q(r, lo + bi)) * tmp[r];
          block(bi, bj) = acc;
        }
      }
      auto be = hermitian_eig(block, R(1e-2));
      Mat<R> qn(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t bj = 0; bj < m; ++bj) {
          C acc(0);
          for (std::size_t bk = 0; bk < m; ++bk)
            acc += q(r, lo + bk) * be.vectors(bk, bj);
          qn(r, bj) = acc;
        }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t bj = 0; bj < m; ++bj) q(r, lo + bj) = qn(r, bj);
    }
    lo = hi + 1;
  }

  NormalEig<R> out;
  out.vectors = q;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Rayleigh quotient q_k^H A q_k
    C acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      C row(0);
      for (std::size_t j = 0; j < n; ++j) row += a(i, j) * q(j, k);
      acc += std::conj(q(i, k)) * row;
    }
    out.eigenvalues[k] = acc;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const R ax = std::arg(out.eigenvalues[x]), ay = std::arg(out.eigenvalues[y]);
    if (ax != ay) return ax < ay;
    return std::abs(out.eigenvalues[x]) < std::abs(out.eigenvalues[y]);
  });
  NormalEig<R> sorted;
  sorted.eigenvalues.resize(n);
  sorted.vectors = Mat<R>(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted.eigenvalues[k] = out.eigenvalues[order[k]];
    for (std::size_t r = 0; r < n; ++r) sorted.vectors(r, k) = out.vectors(r, order[k]);
  }
  return sorted;
}

}  // namespace cjm::linalg

#endif
