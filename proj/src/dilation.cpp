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

#include "dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cjm::dilation {

namespace {

constexpr double kTauFloor = 1e-3;
constexpr double kRhoSafety = 1e-6;
constexpr double kIdentityTol = 1e-11;
constexpr double kPruneFloor = 1e-14;

template <class R>
using CVec = std::vector<std::complex<R>>;

template <class R>
CVec<R> widen_scaled(const MomentSequence& s, double tau, std::size_t top) {
  // s~_n = s_n / tau^n computed in R; indices beyond the data are zero.
  CVec<R> out(top + 1, std::complex<R>(0));
  R t(1);
  for (std::size_t n = 0; n <= top; ++n) {
    if (n < s.size())
      out[n] = std::complex<R>(static_cast<R>(s[n].real()), static_cast<R>(s[n].imag())) / t;
    t *= static_cast<R>(tau);
  }
  return out;
}

// Columnwise rank-two form: M e_0 = s_1 e_0 + e_1,
// M e_j = e_{j+1} + (s_{j+1} - s_j s_1) e_0 - s_j e_1. Needs scaled moments
// up to index L.
template <class R>
linalg::Mat<R> moment_matrix_impl(const CVec<R>& st, std::size_t L) {
  linalg::Mat<R> m(L);
  m(0, 0) = st[1];
  if (L > 1) m(1, 0) = std::complex<R>(1);
  for (std::size_t j = 1; j < L; ++j) {
    m(0, j) = st[j + 1] - st[j] * st[1];
    m(1, j) = -st[j];
    if (j + 1 < L) m(j + 1, j) = std::complex<R>(1);
  }
  return m;
}

template <class R>
R power_norm_estimate(const linalg::Mat<R>& a, R phase1, R phase2) {
  const std::size_t n = a.size();
  CVec<R> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::complex<R>(std::cos(phase1 * R(i + 1) + R(0.3)),
                           std::sin(phase2 * R(i + 1) + R(0.2)));
  R vn(0);
  for (auto& z : v) vn += std::norm(z);
  vn = std::sqrt(vn);
  if (vn == R(0)) return R(0);
  for (auto& z : v) z /= vn;
  const auto ah = linalg::adjoint(a);
  R est(0);
  for (int it = 0; it < 300; ++it) {
    auto w = linalg::matvec(a, v);
    R wn(0);
    for (auto& z : w) wn += std::norm(z);
    wn = std::sqrt(wn);
    if (wn == R(0)) return R(0);
    auto u = linalg::matvec(ah, w);
    R un(0);
    for (auto& z : u) un += std::norm(z);
    un = std::sqrt(un);
    if (un == R(0)) return wn;
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
    if (it > 2 && std::abs(wn - est) <= R(1e-12) * std::max(wn, R(1e-290))) {
      est = wn;
      break;
    }
    est = wn;
  }
  return est;
}

template <class R>
R triangle_bound(const linalg::Mat<R>& m) {
  // 1 + |f| + |g| recovered from the first two rows
  const std::size_t L = m.size();
  R f2(0), g2(0);
  for (std::size_t j = 0; j < L; ++j) f2 += std::norm(m(0, j));
  for (std::size_t j = 1; j < L; ++j) g2 += std::norm(m(1, j));
  return R(1) + std::sqrt(f2) + std::sqrt(g2);
}

template <class R>
R contraction_bound_impl(const linalg::Mat<R>& m) {
  const R est = power_norm_estimate(m, R(0.7), R(1.3));
  if (est == R(0)) return R(0);
  const R tri = triangle_bound(m);
  R rho = std::min(est * (R(1) + R(kRhoSafety)), tri);
  // independent confirmation that M/rho is a contraction
  linalg::Mat<R> scaled(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) scaled(i, j) = m(i, j) / rho;
  const R check = power_norm_estimate(scaled, R(0.41), R(0.93));
  if (check > R(1) + R(1e-13)) rho = tri;
  return rho;
}

template <class R>
linalg::Mat<R> power_dilation_impl(const linalg::Mat<R>& b, std::size_t K) {
  const std::size_t L = b.size();
  const std::size_t blocks = K + 2;
  const std::size_t N = blocks * L;
  const auto bh = linalg::adjoint(b);
  auto eye = linalg::Mat<R>::identity(L);

  auto gram_right = linalg::matmul(bh, b);   // B^H B
  auto gram_left = linalg::matmul(b, bh);
  auto defect_right = linalg::sub(eye, gram_right);
  auto defect_left = linalg::sub(eye, gram_left);
  const auto d_b = linalg::psd_sqrt(defect_right);   // (I - B^H B)^(1/2)
  const auto d_bh = linalg::psd_sqrt(defect_left);   // (I - B B^H)^(1/2)

  linalg::Mat<R> u(N);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      u(i, j) = b(i, j);
      u(i, (blocks - 1) * L + j) = d_bh(i, j);
      u(L + i, j) = d_b(i, j);
      u(L + i, (blocks - 1) * L + j) = -bh(i, j);
    }
  for (std::size_t blk = 2; blk < blocks; ++blk)
    for (std::size_t i = 0; i < L; ++i) u(blk * L + i, (blk - 1) * L + i) = std::complex<R>(1);
  return u;
}

struct RawMeasure {
  std::vector<Complex> atoms;
  std::vector<double> weights;
};

// Action of the block dilation without forming it: for v split into K+2
// blocks of length L,
//   (Uv)_0 = B v_0 + D_{B^H} v_last,
//   (Uv)_1 = D_B v_0 - B^H v_last,
//   (Uv)_j = v_{j-1} for j >= 2.
template <class R>
struct DilationAction {
  const linalg::Mat<R>* b;
  const linalg::Mat<R>* bh;
  const linalg::Mat<R>* d_b;
  const linalg::Mat<R>* d_bh;
  std::size_t blocks;

  std::size_t dim() const { return blocks * b->size(); }

  CVec<R> apply(const CVec<R>& v) const {
    const std::size_t L = b->size();
    CVec<R> out(dim(), std::complex<R>(0));
    const auto mix = [&](const linalg::Mat<R>& m, std::size_t src, std::size_t dst,
                         bool negate) {
      for (std::size_t i = 0; i < L; ++i) {
        std::complex<R> acc(0);
        for (std::size_t j = 0; j < L; ++j) acc += m(i, j) * v[src * L + j];
        if (negate)
          out[dst * L + i] -= acc;
        else
          out[dst * L + i] += acc;
      }
    };
    mix(*b, 0, 0, false);
    mix(*d_bh, blocks - 1, 0, false);
    mix(*d_b, 0, 1, false);
    mix(*bh, blocks - 1, 1, true);
    for (std::size_t blk = 2; blk < blocks; ++blk)
      for (std::size_t i = 0; i < L; ++i) out[blk * L + i] = v[(blk - 1) * L + i];
    return out;
  }
};

// Krylov compression of (U, e_0) to dimension m, completed to a unitary.
// Powers up to m-1 keep the (0,0) pairing, so the compressed spectral
// measure reproduces the same moments.
template <class R>
void krylov_unitary(const DilationAction<R>& u, std::size_t m, linalg::Mat<R>& h_out,
                    std::size_t& meff) {
  using C = std::complex<R>;
  const std::size_t N = u.dim();
  m = std::min(m, N);
  std::vector<CVec<R>> v;
  v.reserve(m);
  CVec<R> first(N, C(0));
  first[0] = C(1);
  v.push_back(std::move(first));
  linalg::Mat<R> h(m);
  meff = m;
  const R brk = R(64) * std::numeric_limits<R>::epsilon();
  for (std::size_t j = 0; j < m; ++j) {
    auto w = u.apply(v[j]);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i <= j; ++i) {
        C c(0);
        for (std::size_t r = 0; r < N; ++r) c += std::conj(v[i][r]) * w[r];
        h(i, j) += c;
        for (std::size_t r = 0; r < N; ++r) w[r] -= c * v[i][r];
      }
    }
    if (j + 1 < m) {
      R nw(0);
      for (auto& z : w) nw += std::norm(z);
      nw = std::sqrt(nw);
      h(j + 1, j) = nw;
      if (nw <= brk) {
        meff = j + 1;
        break;
      }
      for (auto& z : w) z /= nw;
      v.push_back(std::move(w));
    }
  }
  // shrink to meff and replace the last column with a unit completion
  linalg::Mat<R> hh(meff);
  for (std::size_t i = 0; i < meff; ++i)
    for (std::size_t j = 0; j < meff; ++j) hh(i, j) = h(i, j);
  const std::size_t last = meff - 1;
  CVec<R> r(meff);
  for (std::size_t i = 0; i < meff; ++i) r[i] = hh(i, last);
  for (std::size_t col = 0; col < last; ++col) {
    C ip(0);
    for (std::size_t i = 0; i < meff; ++i) ip += std::conj(hh(i, col)) * r[i];
    for (std::size_t i = 0; i < meff; ++i) r[i] -= ip * hh(i, col);
  }
  R nr(0);
  for (auto& z : r) nr += std::norm(z);
  nr = std::sqrt(nr);
  if (nr > R(1e-8)) {
    for (std::size_t i = 0; i < meff; ++i) hh(i, last) = r[i] / nr;
  } else {
    for (std::size_t k = 0; k < meff; ++k) {
      CVec<R> e(meff, C(0));
      e[k] = C(1);
      for (std::size_t col = 0; col < last; ++col) {
        C ip(0);
        for (std::size_t i = 0; i < meff; ++i) ip += std::conj(hh(i, col)) * e[i];
        for (std::size_t i = 0; i < meff; ++i) e[i] -= ip * hh(i, col);
      }
      R ne(0);
      for (auto& z : e) ne += std::norm(z);
      ne = std::sqrt(ne);
      if (ne > R(0.1)) {
        for (std::size_t i = 0; i < meff; ++i) hh(i, last) = e[i] / ne;
        break;
      }
    }
  }
  h_out = std::move(hh);
}

// Moment residuals E_n = sum_j w_j z_j^n - s_n for the stored double atoms,
// accumulated in R.
template <class R>
std::vector<std::complex<R>> stored_residuals(const RawMeasure& raw, const MomentSequence& s,
                                              std::size_t K) {
  using C = std::complex<R>;
  std::vector<C> e(K + 1);
  std::vector<C> zp(raw.atoms.size(), C(1));
  std::vector<C> z(raw.atoms.size());
  for (std::size_t j = 0; j < raw.atoms.size(); ++j)
    z[j] = C(static_cast<R>(raw.atoms[j].real()), static_cast<R>(raw.atoms[j].imag()));
  for (std::size_t n = 0; n <= K; ++n) {
    C acc(0);
    for (std::size_t j = 0; j < raw.atoms.size(); ++j) acc += static_cast<R>(raw.weights[j]) * zp[j];
    const C sn = n < s.size() ? C(static_cast<R>(s[n].real()), static_cast<R>(s[n].imag())) : C(0);
    e[n] = acc - sn;
    for (std::size_t j = 0; j < raw.atoms.size(); ++j) zp[j] *= z[j];
  }
  return e;
}

// Pick the double rounding of the weights that cancels the moment residual
// introduced by storing atoms at double precision: a minimum-norm correction
// from the scaled circle Vandermonde system, solved in R. The correction is
// within the rounding noise of the spectral weights themselves.
template <class R>
void polish_weights(RawMeasure& raw, const MomentSequence& s, std::size_t K, double radius,
                    double target) {
  using C = std::complex<R>;
  const std::size_t m = raw.atoms.size();
  const std::size_t rows = 2 * (K + 1);
  const R rr = static_cast<R>(radius > 0 ? radius : 1.0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_w = raw.weights;
  for (int iter = 0; iter < 5; ++iter) {
    auto e = stored_residuals<R>(raw, s, K);
    double maxe = 0.0;
    for (const auto& x : e) maxe = std::max(maxe, static_cast<double>(std::abs(x)));
    if (maxe < best) {
      best = maxe;
      best_w = raw.weights;
    }
    if (maxe <= target) break;
    // rows of A: Re / Im of (z_j / r)^n; rhs: -E_n / r^n
    std::vector<R> a(rows * m);
    std::vector<R> rhs(rows);
    std::vector<C> zp(m, C(1)), zn(m);
    for (std::size_t j = 0; j < m; ++j)
      zn[j] = C(static_cast<R>(raw.atoms[j].real()), static_cast<R>(raw.atoms[j].imag())) / rr;
    R rn(1);
    for (std::size_t n = 0; n <= K; ++n) {
      for (std::size_t j = 0; j < m; ++j) {
        a[(2 * n) * m + j] = zp[j].real();
        a[(2 * n + 1) * m + j] = zp[j].imag();
      }
      rhs[2 * n] = -e[n].real() / rn;
      rhs[2 * n + 1] = -e[n].imag() / rn;
      for (std::size_t j = 0; j < m; ++j) zp[j] *= zn[j];
      rn *= rr;
    }
    // minimum-norm solution through the (rows x rows) Gram system
    std::vector<R> gram(rows * rows, R(0));
    for (std::size_t r1 = 0; r1 < rows; ++r1)
      for (std::size_t r2 = r1; r2 < rows; ++r2) {
        R acc(0);
        for (std::size_t j = 0; j < m; ++j) acc += a[r1 * m + j] * a[r2 * m + j];
        gram[r1 * rows + r2] = acc;
        gram[r2 * rows + r1] = acc;
      }
    R trace(0);
    for (std::size_t r1 = 0; r1 < rows; ++r1) trace += gram[r1 * rows + r1];
    const R ridge = std::max(trace, R(1)) * R(1e-28);
    for (std::size_t r1 = 0; r1 < rows; ++r1) gram[r1 * rows + r1] += ridge;
    // Cholesky solve gram * y = rhs
    std::vector<R> chol = gram;
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        R acc = chol[i * rows + j];
        for (std::size_t k = 0; k < j; ++k) acc -= chol[i * rows + k] * chol[j * rows + k];
        if (i == j) {
          if (acc <= R(0)) {
            ok = false;
            break;
          }
          chol[i * rows + i] = std::sqrt(acc);
        } else {
          chol[i * rows + j] = acc / chol[j * rows + j];
        }
      }
    }
    if (!ok) break;
    std::vector<R> y(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      R acc = rhs[i];
      for (std::size_t k = 0; k < i; ++k) acc -= chol[i * rows + k] * y[k];
      y[i] = acc / chol[i * rows + i];
    }
    for (std::size_t i = rows; i-- > 0;) {
      R acc = y[i];
      for (std::size_t k = i + 1; k < rows; ++k) acc -= chol[k * rows + i] * y[k];
      y[i] = acc / chol[i * rows + i];
    }
    bool changed = false;
    for (std::size_t j = 0; j < m; ++j) {
      R dw(0);
      for (std::size_t r1 = 0; r1 < rows; ++r1) dw += a[r1 * m + j] * y[r1];
      const double neww = raw.weights[j] + static_cast<double>(dw);
      if (neww != raw.weights[j] && neww >= 0.0) {
        raw.weights[j] = neww;
        changed = true;
      }
    }
    if (!changed) break;
  }
  auto e = stored_residuals<R>(raw, s, K);
  double maxe = 0.0;
  for (const auto& x : e) maxe = std::max(maxe, static_cast<double>(std::abs(x)));
  if (maxe > best) raw.weights = best_w;
}

template <class R>
struct PipelineState {
  CVec<R> scaled;                 // s~_0 .. s~_{K+1}
  linalg::Mat<R> mat;
  double tau = 0.0;
  R rho = R(0);
  linalg::Mat<R> contraction;
  linalg::Mat<R> adjoint_contraction;
  linalg::Mat<R> defect_right;    // (I - B^H B)^(1/2)
  linalg::Mat<R> defect_left;     // (I - B B^H)^(1/2)
  std::size_t K = 0;
};

template <class R>
PipelineState<R> run_pipeline(const MomentSequence& s, std::size_t K,
                              std::optional<double> tau_opt) {
  require_normalized(s);
  if (K > s.max_index())
    fail(ErrorCode::insufficient_moments, "solver degree exceeds the available moments");
  PipelineState<R> st;
  const double radius = growth_radius(s);
  st.tau = tau_opt.value_or(1.25 * std::max(radius, kTauFloor));
  if (!(st.tau > 0.0)) fail(ErrorCode::nonpositive_tau, "tau must be positive");

  const std::size_t L = K + 1;
  st.scaled = widen_scaled<R>(s, st.tau, L);  // missing s_{L} enters as zero
  st.mat = moment_matrix_impl<R>(st.scaled, L);

  // keystone identity on the scaled sequence
  CVec<R> x(L, std::complex<R>(0));
  x[0] = std::complex<R>(1);
  R dev(0);
  for (std::size_t n = 0; n < L; ++n) {
    dev = std::max(dev, std::abs(x[0] - st.scaled[n]));
    if (n + 1 < L) x = linalg::matvec(st.mat, x);
  }
  if (static_cast<double>(dev) > kIdentityTol)
    fail(ErrorCode::identity_check_failed,
         "scaled moment identity deviates by " + std::to_string(static_cast<double>(dev)));

  st.rho = contraction_bound_impl(st.mat);
  st.contraction = linalg::Mat<R>(L);
  if (st.rho > R(0))
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) st.contraction(i, j) = st.mat(i, j) / st.rho;
  st.adjoint_contraction = linalg::adjoint(st.contraction);
  const auto eye = linalg::Mat<R>::identity(L);
  st.defect_right =
      linalg::psd_sqrt(linalg::sub(eye, linalg::matmul(st.adjoint_contraction, st.contraction)));
  st.defect_left =
      linalg::psd_sqrt(linalg::sub(eye, linalg::matmul(st.contraction, st.adjoint_contraction)));
  st.K = K;
  return st;
}

}  // namespace

double growth_radius(const MomentSequence& s) {
  if (s.empty()) fail(ErrorCode::insufficient_moments, "empty moment sequence");
  double r = 0.0;
  for (std::size_t n = 1; n < s.size(); ++n)
    r = std::max(r, std::pow(std::abs(s[n]), 1.0 / static_cast<double>(n)));
  return r;
}

MomentSequence scale_moments(const MomentSequence& s, double tau) {
  if (!(tau > 0.0)) fail(ErrorCode::nonpositive_tau, "tau must be positive");
  std::vector<Complex> out;
  out.reserve(s.size());
  double t = 1.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    out.push_back(s[n] / t);
    t *= tau;
  }
  return MomentSequence(std::move(out));
}

std::pair<std::vector<Complex>, std::vector<Complex>> moment_vectors(const MomentSequence& s,
                                                                     std::size_t L) {
  if (s.max_index() < L)
    fail(ErrorCode::insufficient_moments, "moment vectors of length L need moments up to L");
  std::vector<Complex> f(L), g(L);
  g[0] = Complex(0);
  for (std::size_t j = 1; j < L; ++j) g[j] = std::conj(s[j]);
  f[0] = std::conj(s[1]);
  for (std::size_t j = 1; j < L; ++j) f[j] = std::conj(s[j + 1]) - std::conj(s[j]) * std::conj(s[1]);
  return {std::move(f), std::move(g)};
}

linalg::Matrix moment_matrix(const MomentSequence& s, std::size_t L) {
  if (L == 0) fail(ErrorCode::invalid_argument, "matrix size must be positive");
  if (s.max_index() < L)
    fail(ErrorCode::insufficient_moments, "moment matrix of size L needs moments up to L");
  CVec<double> st(L + 1);
  for (std::size_t n = 0; n <= L; ++n) st[n] = s[n];
  linalg::Matrix m = moment_matrix_impl<double>(st, L);
  // cross-check the row pattern against the rank-two column action
  const auto [f, g] = moment_vectors(s, L);
  for (std::size_t j = 0; j < L; ++j) {
    // column j of S + e_0 (., f) - e_1 (., g)
    for (std::size_t i = 0; i < L; ++i) {
      Complex expect(0);
      if (i == j + 1) expect += Complex(1);
      if (i == 0) expect += std::conj(f[j]);
      if (i == 1) expect -= std::conj(g[j]);
      if (m(i, j) != expect)
        fail(ErrorCode::identity_check_failed,
             "rank-two form disagrees with the displayed matrix");
    }
  }
  return m;
}

double verify_moment_identity(const linalg::Matrix& m, const MomentSequence& s,
                              std::size_t n_max) {
  if (n_max >= m.size() && m.size() > 0 && n_max > 0)
    fail(ErrorCode::invalid_argument, "identity is exact only through n = L-1");
  if (n_max > s.max_index())
    fail(ErrorCode::insufficient_moments, "not enough moments to verify against");
  std::vector<Complex> x(m.size(), Complex(0));
  x[0] = Complex(1);
  double dev = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    dev = std::max(dev, std::abs(x[0] - s[n]));
    if (n + 1 <= n_max) x = linalg::matvec(m, x);
  }
  return dev;
}

double contraction_bound(const linalg::Matrix& m) {
  return static_cast<double>(contraction_bound_impl<double>(m));
}

linalg::Matrix power_dilation(const linalg::Matrix& contraction, std::size_t K) {
  const auto nb = linalg::spectral_norm_bound(contraction);
  if (nb.estimate > 1.0 + 1e-12)
    fail(ErrorCode::not_a_contraction,
         "norm estimate " + std::to_string(nb.estimate) + " exceeds 1");
  return power_dilation_impl<double>(contraction, K);
}

DilationModel build_dilation_model(const MomentSequence& s, std::size_t K,
                                   std::optional<double> tau) {
  auto st = run_pipeline<double>(s, K, tau);
  DilationModel model;
  model.scaled = MomentSequence(std::vector<Complex>(st.scaled.begin(), st.scaled.end()));
  auto fg = moment_vectors(model.scaled, K + 1);
  model.f = std::move(fg.first);
  model.g = std::move(fg.second);
  model.mat = st.mat;
  model.tau = st.tau;
  model.rho = st.rho;
  model.contraction = st.contraction;
  model.K = K;
  model.dilation = power_dilation_impl(st.contraction, K);
  model.x0.assign(model.dilation.size(), Complex(0));
  if (!model.x0.empty()) model.x0[0] = Complex(1);
  return model;
}

AtomicMeasure solve_moment_problem(const MomentSequence& s, std::size_t K,
                                   const SolveOptions& options) {
  using R = long double;
  auto st = run_pipeline<R>(s, K, options.tau);
  const double tau = st.tau;
  const double rho = static_cast<double>(st.rho);

  RawMeasure raw;
  if (rho == 0.0) {
    raw.atoms.assign(1, Complex(0));
    raw.weights.assign(1, 1.0);
  } else {
    const DilationAction<R> action{&st.contraction, &st.adjoint_contraction, &st.defect_right,
                                   &st.defect_left, K + 2};
    const std::size_t N = action.dim();
    const std::size_t m = std::min<std::size_t>(N, std::max<std::size_t>(2 * (K + 1) + 6, 32));
    linalg::Mat<R> h;
    std::size_t meff = 0;
    krylov_unitary(action, m, h, meff);
    auto eig = linalg::normal_eig(h);
    const R scale = static_cast<R>(tau) * st.rho;
    raw.atoms.resize(meff);
    raw.weights.resize(meff);
    for (std::size_t j = 0; j < meff; ++j) {
      const auto z = scale * eig.eigenvalues[j];
      raw.atoms[j] = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      raw.weights[j] = static_cast<double>(std::norm(eig.vectors(0, j)));
    }
  }

  const double radius = tau * rho;
  polish_weights<R>(raw, s, K, radius, 0.05 * options.tolerance);

  // drop negligible atoms only if the reproduction survives it
  RawMeasure pruned;
  for (std::size_t j = 0; j < raw.atoms.size(); ++j) {
    if (raw.weights[j] >= kPruneFloor) {
      pruned.atoms.push_back(raw.atoms[j]);
      pruned.weights.push_back(raw.weights[j]);
    }
  }
  if (!pruned.atoms.empty() && pruned.atoms.size() < raw.atoms.size()) {
    auto e = stored_residuals<R>(pruned, s, K);
    double maxe = 0.0;
    for (const auto& x : e) maxe = std::max(maxe, static_cast<double>(std::abs(x)));
    if (maxe <= options.tolerance) raw = std::move(pruned);
  }

  {
    auto e = stored_residuals<R>(raw, s, K);
    double maxe = 0.0;
    for (const auto& x : e) maxe = std::max(maxe, static_cast<double>(std::abs(x)));
    if (maxe > options.tolerance)
      fail(ErrorCode::identity_check_failed,
           "solution reproduces the moments only to " + std::to_string(maxe));
  }

  std::vector<Atom> atoms(raw.atoms.size());
  for (std::size_t j = 0; j < atoms.size(); ++j) atoms[j] = {raw.atoms[j], raw.weights[j]};
  return AtomicMeasure(std::move(atoms), tau, rho);
}

MomentSequence measure_moments(const AtomicMeasure& mu, std::size_t K) {
  using C = std::complex<long double>;
  if (mu.size() == 0) fail(ErrorCode::empty_measure, "measure has no atoms");
  std::vector<Complex> out(K + 1);
  std::vector<C> z(mu.size()), zp(mu.size(), C(1));
  for (std::size_t j = 0; j < mu.size(); ++j)
    z[j] = C(mu.atoms()[j].z.real(), mu.atoms()[j].z.imag());
  for (std::size_t n = 0; n <= K; ++n) {
    C acc(0);
    for (std::size_t j = 0; j < mu.size(); ++j)
      acc += static_cast<long double>(mu.atoms()[j].w) * zp[j];
    out[n] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    for (std::size_t j = 0; j < mu.size(); ++j) zp[j] *= z[j];
  }
  return MomentSequence(std::move(out));
}

}  // namespace cjm::dilation
