#include <doctest.h>

#include "jacobi.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using cjm::Complex;
using namespace cjm::jacobi;

namespace {

JacobiSpec free_spec(std::size_t n) {
  JacobiSpec s;
  s.a.assign(n - 1, Complex(1));
  s.b.assign(n, Complex(0));
  return s;
}

}  // namespace

TEST_CASE("validate fixtures") {
  JacobiSpec ok;
  ok.a = {Complex(1)};
  ok.b = {Complex(0), Complex(0)};
  CHECK(validate(ok).entry_bound == doctest::Approx(1.0));

  JacobiSpec zero;
  zero.a = {Complex(0)};
  zero.b = {Complex(0), Complex(0)};
  try {
    validate(zero);
    FAIL("expected ZeroOffDiagonal");
  } catch (const cjm::Error& e) {
    CHECK(e.code() == cjm::ErrorCode::zero_off_diagonal);
    CHECK(e.index() == 0);
  }

  JacobiSpec mixed;
  mixed.a = {Complex(0, 1), Complex(2)};
  mixed.b = {Complex(1), Complex(-1), Complex(0, 3)};
  CHECK(validate(mixed).entry_bound == doctest::Approx(3.0));

  CHECK_THROWS_AS(validate(JacobiSpec{}), cjm::Error);
}

TEST_CASE("band action fixtures") {
  const JacobiSpec s = free_spec(6);
  const auto e1 = apply_window(s, {Complex(1)});
  REQUIRE(e1.size() == 2);
  CHECK(e1[0] == Complex(0));
  CHECK(e1[1] == Complex(1));

  const auto back = apply_window(s, {Complex(0), Complex(1)});
  REQUIRE(back.size() == 3);
  CHECK(back[0] == Complex(1));
  CHECK(back[1] == Complex(0));
  CHECK(back[2] == Complex(1));

  JacobiSpec t;
  t.a = {Complex(2), Complex(3)};
  t.b = {Complex(1), Complex(1), Complex(1)};
  const auto r = apply_window(t, {Complex(0), Complex(1)});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Complex(2));
  CHECK(r[1] == Complex(1));
  CHECK(r[2] == Complex(3));

  CHECK_THROWS_AS(apply_window(t, std::vector<Complex>(3, Complex(1))), cjm::Error);
}

TEST_CASE("recurrence polynomials") {
  cjmtest::Rng rng(21);
  const JacobiSpec s = rng.spec(14, 0.5, 1.5, 1.0);
  const auto p = recurrence_polynomials(s, 13);
  REQUIRE(p.size() == 13);
  CHECK(p[0] == cjm::Polynomial::constant(Complex(1)));
  // p_1 = (lambda - b_0)/a_0
  CHECK(std::abs(p[1].coeff(1) - Complex(1) / s.a[0]) <= 1e-15);
  CHECK(std::abs(p[1].coeff(0) + s.b[0] / s.a[0]) <= 1e-15);

  // leading coefficient law with relative tolerance
  Complex lead(1);
  for (std::size_t k = 1; k < 13; ++k) {
    lead /= s.a[k - 1];
    CHECK(p[k].degree() == static_cast<int>(k));
    CHECK(std::abs(p[k].coeff(k) - lead) <= 1e-10 * std::abs(lead));
  }

  // recurrence holds on the generated range
  for (std::size_t k = 0; k + 1 < 13; ++k) {
    cjm::Polynomial rhs = s.b[k] * p[k] + s.a[k] * p[k + 1];
    if (k > 0) rhs = rhs + s.a[k - 1] * p[k - 1];
    const cjm::Polynomial diff = p[k].shifted_up() - rhs;
    for (const auto& c : diff.coeffs()) CHECK(std::abs(c) <= 1e-10);
  }

  const auto free3 = recurrence_polynomials(free_spec(4), 3);
  CHECK(free3[2] == cjm::Polynomial(std::vector<Complex>{Complex(-1), Complex(0), Complex(1)}));

  CHECK_THROWS_AS(recurrence_polynomials(s, 15), cjm::Error);
}

TEST_CASE("moments match the path-counting oracle") {
  const JacobiSpec s = free_spec(10);
  const auto m = compute_moments(s, 8);
  const std::vector<double> want{1, 0, 1, 0, 2, 0, 5, 0, 14};
  REQUIRE(m.size() == 9);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(m[n] == Complex(want[n]));

  // same values from the recursive oracle
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(std::abs(cjmtest::path_moment(s.a, s.b, n) - m[n]) == 0.0);

  JacobiSpec imag = free_spec(8);
  for (auto& a : imag.a) a = Complex(0, 1);
  const auto mi = compute_moments(imag, 4);
  CHECK(mi[2] == Complex(-1));
  CHECK(mi[4] == Complex(2));
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(std::abs(cjmtest::path_moment(imag.a, imag.b, n) - mi[n]) <= 1e-15);

  CHECK_THROWS_AS(compute_moments(s, 10), cjm::Error);
}

TEST_CASE("moments against the oracle on random windows") {
  cjmtest::Rng rng(22);
  for (int trial = 0; trial < 8; ++trial) {
    const JacobiSpec s = rng.spec(10, 0.3, 1.2, 1.0);
    for (std::size_t n = 0; n <= 8; ++n) {
      const Complex oracle = cjmtest::path_moment(s.a, s.b, n);
      CHECK(std::abs(compute_moments(s, 8)[n] - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
    }
  }
}

TEST_CASE("two computation paths for moments agree") {
  cjmtest::Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t K = 9;
    const JacobiSpec s = rng.spec(K + 2, 0.4, 1.1, 0.9);
    const auto m = compute_moments(s, K);
    const auto sec = finite_section(s, K + 1);
    // e_0^T S^n e_0 through dense powers
    std::vector<Complex> v(K + 1, Complex(0));
    v[0] = Complex(1);
    for (std::size_t n = 0; n <= K; ++n) {
      CHECK(std::abs(v[0] - m[n]) <= 1e-12 * std::max(1.0, std::abs(m[n])));
      v = cjm::linalg::matvec(sec, v);
    }
  }
}

TEST_CASE("norm bound fixtures and growth") {
  CHECK(norm_bound(free_spec(6)) == doctest::Approx(2.0));
  JacobiSpec half = free_spec(6);
  for (auto& a : half.a) a = Complex(0.5);
  CHECK(norm_bound(half) == doctest::Approx(1.0));

  cjmtest::Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const JacobiSpec s = rng.spec(12, 0.2, 1.0, 1.0);
    double entry_bound = 0.0;
    for (const auto& z : s.a) entry_bound = std::max(entry_bound, std::abs(z));
    for (const auto& z : s.b) entry_bound = std::max(entry_bound, std::abs(z));
    const double nb = norm_bound(s);
    CHECK(nb <= 3.0 * entry_bound + 1e-15);

    // moment growth: |s_n| <= nb^n as computed values
    const auto m = compute_moments(s, 11);
    double p = 1.0;
    for (std::size_t n = 0; n < m.size(); ++n) {
      CHECK(std::abs(m[n]) <= p * (1 + 1e-12));
      p *= nb;
    }
  }
}

TEST_CASE("finite sections") {
  JacobiSpec s;
  s.a = {Complex(0, 1), Complex(2)};
  s.b = {Complex(1), Complex(-1), Complex(0)};
  const auto m1 = finite_section(s, 1);
  CHECK(m1(0, 0) == Complex(1));

  const auto m3 = finite_section(s, 3);
  CHECK(m3(0, 1) == Complex(0, 1));
  CHECK(m3(1, 0) == Complex(0, 1));
  CHECK(m3(1, 2) == Complex(2));
  CHECK(m3(2, 1) == Complex(2));
  CHECK(m3(0, 2) == Complex(0));
  CHECK(m3(1, 1) == Complex(-1));

  // symmetric, not Hermitian: equality with the transpose is exact
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m3(i, j) == m3(j, i));

  const auto free2 = finite_section(free_spec(4), 2);
  CHECK(free2(0, 1) == Complex(1));
  CHECK(free2(0, 0) == Complex(0));

  CHECK_THROWS_AS(finite_section(s, 4), cjm::Error);
}

TEST_CASE("exact moments agree with the exact oracle") {
  cjmtest::Rng rng(25);
  const JacobiSpecQ sq = rng.spec_exact(9);
  const auto m = window_moments(sq, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const cjm::RationalComplex oracle = cjmtest::path_moment(sq.a, sq.b, n);
    CHECK(m[n] == oracle);
  }
}
