#include <doctest.h>

#include "linalg.hpp"
#include "test_support.hpp"

using cjm::Complex;
using namespace cjm::linalg;

namespace {

Matrix from_rows(std::size_t n, std::initializer_list<Complex> rows) {
  return Matrix::from_entries(n, std::vector<Complex>(rows));
}

Matrix random_matrix(cjmtest::Rng& rng, std::size_t n, double radius = 1.0) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.in_disk(radius);
  return m;
}

Matrix hermitian_part(const Matrix& a) {
  Matrix h(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

// unitary columns assembled from Jacobi rotations
Matrix random_unitary(cjmtest::Rng& rng, std::size_t n) {
  const auto eig = hermitian_eig(hermitian_part(random_matrix(rng, n)));
  return eig.vectors;
}

double residual(const Matrix& a, const std::vector<Complex>& v, Complex lambda) {
  double acc = 0.0;
  const auto av = matvec(a, v);
  for (std::size_t i = 0; i < v.size(); ++i) acc += std::norm(av[i] - lambda * v[i]);
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("hermitian_eig fixtures") {
  auto e1 = hermitian_eig(from_rows(2, {Complex(0), Complex(1), Complex(1), Complex(0)}));
  CHECK(e1.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(e1.eigenvalues[1] == doctest::Approx(1.0));

  auto e2 = hermitian_eig(from_rows(3, {Complex(3), Complex(0), Complex(0),
                                        Complex(0), Complex(1), Complex(0),
                                        Complex(0), Complex(0), Complex(2)}));
  CHECK(e2.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(e2.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(e2.eigenvalues[2] == doctest::Approx(3.0));
  // permutation columns
  CHECK(std::abs(e2.vectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e2.vectors(2, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(e2.vectors(0, 2)) == doctest::Approx(1.0));

  auto e3 = hermitian_eig(from_rows(2, {Complex(2), Complex(0, 1), Complex(0, -1), Complex(2)}));
  CHECK(e3.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e3.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eig(from_rows(2, {Complex(0), Complex(1), Complex(2), Complex(0)})),
                  cjm::Error);
}

TEST_CASE("hermitian_eig residual and unitarity contracts") {
  cjmtest::Rng rng(11);
  const Matrix h = hermitian_part(random_matrix(rng, 24, 2.0));
  const double scale = fro_norm(h);
  const auto eig = hermitian_eig(h);
  for (std::size_t k = 0; k < 24; ++k) {
    std::vector<Complex> v(24);
    for (std::size_t r = 0; r < 24; ++r) v[r] = eig.vectors(r, k);
    CHECK(residual(h, v, Complex(eig.eigenvalues[k])) <= 1e-10 * scale);
  }
  const Matrix qhq = matmul(adjoint(eig.vectors), eig.vectors);
  CHECK(fro_norm(sub(qhq, Matrix::identity(24))) <= 1e-12);
}

TEST_CASE("psd_sqrt fixtures and contracts") {
  const Matrix d = from_rows(2, {Complex(4), Complex(0), Complex(0), Complex(9)});
  const Matrix s = psd_sqrt(d);
  CHECK(std::abs(s(0, 0) - Complex(2)) <= 1e-12);
  CHECK(std::abs(s(1, 1) - Complex(3)) <= 1e-12);

  CHECK(fro_norm(sub(psd_sqrt(Matrix::identity(5)), Matrix::identity(5))) <= 1e-12);

  const Matrix a = from_rows(2, {Complex(2), Complex(1), Complex(1), Complex(2)});
  const Matrix r = psd_sqrt(a);
  CHECK(fro_norm(sub(matmul(r, r), a)) <= 1e-10 * fro_norm(a));

  CHECK_THROWS_AS(psd_sqrt(from_rows(2, {Complex(1), Complex(0), Complex(0), Complex(-1)})),
                  cjm::Error);
}

TEST_CASE("psd_sqrt of a projection is the projection") {
  cjmtest::Rng rng(12);
  const Matrix q = random_unitary(rng, 8);
  Matrix p(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Complex acc(0);
      for (std::size_t k = 0; k < 3; ++k) acc += q(i, k) * std::conj(q(j, k));
      p(i, j) = acc;
    }
  CHECK(fro_norm(sub(psd_sqrt(p), p)) <= 1e-10);
}

TEST_CASE("complex_eig fixtures") {
  // upper triangular: eigenvalues are the diagonal
  const Matrix t = from_rows(3, {Complex(2, 1), Complex(5), Complex(1),
                                 Complex(0), Complex(-1), Complex(2),
                                 Complex(0), Complex(0), Complex(0.5, -2)});
  auto et = complex_eig(t);
  std::vector<Complex> want{Complex(-1), Complex(0.5, -2), Complex(2, 1)};
  for (const auto& w : want) {
    double best = 1e9;
    for (const auto& l : et.eigenvalues) best = std::min(best, std::abs(l - w));
    CHECK(best <= 1e-10);
  }

  auto er = complex_eig(from_rows(2, {Complex(0), Complex(1), Complex(-1), Complex(0)}));
  CHECK(std::abs(er.eigenvalues[0] - Complex(0, -1)) <= 1e-12);
  CHECK(std::abs(er.eigenvalues[1] - Complex(0, 1)) <= 1e-12);
}

TEST_CASE("complex_eig on a unitary built from rotations") {
  cjmtest::Rng rng(13);
  const Matrix u = random_unitary(rng, 12);
  auto eig = complex_eig(u);
  CHECK(eig.normal_input);
  CHECK(eig.schur_strict_upper <= 1e-8 * fro_norm(u));
  for (const auto& l : eig.eigenvalues) CHECK(std::abs(std::abs(l) - 1.0) <= 1e-9);
  // orthonormal eigenbasis on the normal path
  const Matrix g = matmul(adjoint(eig.vectors), eig.vectors);
  CHECK(fro_norm(sub(g, Matrix::identity(12))) <= 1e-10);
  // ordering: ascending argument
  for (std::size_t k = 0; k + 1 < 12; ++k)
    CHECK(std::arg(eig.eigenvalues[k]) <= std::arg(eig.eigenvalues[k + 1]) + 1e-15);
}

TEST_CASE("complex_eig residuals on random matrices") {
  cjmtest::Rng rng(14);
  const Matrix a = random_matrix(rng, 24, 1.0);
  const double scale = fro_norm(a);
  auto eig = complex_eig(a);
  CHECK(!eig.normal_input);
  for (std::size_t k = 0; k < 24; ++k) {
    std::vector<Complex> v(24);
    for (std::size_t r = 0; r < 24; ++r) v[r] = eig.vectors(r, k);
    CHECK(residual(a, v, eig.eigenvalues[k]) <= 1e-8 * scale);
  }
  // non-unitary ordering: ascending real part
  for (std::size_t k = 0; k + 1 < 24; ++k)
    CHECK(eig.eigenvalues[k].real() <= eig.eigenvalues[k + 1].real() + 1e-15);
}

TEST_CASE("spectral_norm_bound fixtures") {
  auto z = spectral_norm_bound(Matrix(4));
  CHECK(z.estimate == 0.0);
  CHECK(z.upper_bound == 0.0);

  auto d = spectral_norm_bound(from_rows(2, {Complex(1), Complex(0), Complex(0), Complex(-3)}));
  CHECK(d.estimate == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(d.upper_bound >= 3.0 * (1 - 1e-12));

  Matrix shift(8);
  for (std::size_t i = 0; i + 1 < 8; ++i) shift(i + 1, i) = Complex(1);
  auto s = spectral_norm_bound(shift);
  CHECK(s.estimate == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(s.upper_bound <= 1.0 + 1e-5);
}

TEST_CASE("spectral_norm_bound is an upper bound on samples") {
  cjmtest::Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(rng, 10, 1.0);
    const auto nb = spectral_norm_bound(a);
    for (int probe = 0; probe < 5; ++probe) {
      std::vector<Complex> v(10);
      double nv = 0.0;
      for (auto& x : v) {
        x = rng.in_disk(1.0);
        nv += std::norm(x);
      }
      nv = std::sqrt(nv);
      const auto av = matvec(a, v);
      double navv = 0.0;
      for (const auto& x : av) navv += std::norm(x);
      CHECK(std::sqrt(navv) <= nb.upper_bound * nv * (1 + 1e-9));
    }
  }
}

TEST_CASE("normal_eig gives an orthonormal eigenbasis for unitaries") {
  cjmtest::Rng rng(16);
  const Matrix u = random_unitary(rng, 14);
  auto eig = normal_eig(u);
  const Matrix g = matmul(adjoint(eig.vectors), eig.vectors);
  CHECK(fro_norm(sub(g, Matrix::identity(14))) <= 1e-12);
  for (const auto& l : eig.eigenvalues) CHECK(std::abs(std::abs(l) - 1.0) <= 1e-10);
  // A q_k = lambda_k q_k
  for (std::size_t k = 0; k < 14; ++k) {
    std::vector<Complex> v(14);
    for (std::size_t r = 0; r < 14; ++r) v[r] = eig.vectors(r, k);
    CHECK(residual(u, v, eig.eigenvalues[k]) <= 1e-9);
  }
}

TEST_CASE("normal_eig long double instantiation") {
  using LD = long double;
  Mat<LD> u(3);
  // cyclic permutation: eigenvalues are the cube roots of unity
  u(0, 2) = std::complex<LD>(1);
  u(1, 0) = std::complex<LD>(1);
  u(2, 1) = std::complex<LD>(1);
  auto eig = normal_eig(u);
  for (const auto& l : eig.eigenvalues)
    CHECK(std::abs(std::abs(l) - LD(1)) <= LD(1e-17));
}

TEST_CASE("non-finite entries are rejected") {
  std::vector<Complex> e(4, Complex(0));
  e[1] = Complex(std::numeric_limits<double>::infinity(), 0);
  CHECK_THROWS_AS(Matrix::from_entries(2, e), cjm::Error);
}
