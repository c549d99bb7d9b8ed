#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polynomial.hpp"
#include "test_support.hpp"

using cjm::Complex;
using cjm::Polynomial;
using cjm::PolynomialQ;
using cjm::RationalComplex;

namespace {
Polynomial from(std::initializer_list<Complex> c) { return Polynomial(std::vector<Complex>(c)); }
}

TEST_CASE("degree bookkeeping trims exact zeros only") {
  CHECK(Polynomial().degree() == -1);
  CHECK(from({Complex(0), Complex(0)}).degree() == -1);
  CHECK(from({Complex(1), Complex(0)}).degree() == 0);
  // a tiny but nonzero coefficient is not trimmed
  CHECK(from({Complex(1), Complex(1e-300)}).degree() == 1);
}

TEST_CASE("product fixtures") {
  const Polynomial p = from({Complex(3, 1), Complex(0, -2), Complex(1)});
  CHECK(Polynomial::constant(Complex(1)) * p == p);
  CHECK(Polynomial::monomial(1) * Polynomial::monomial(1) == Polynomial::monomial(2));
  const Polynomial lm1 = from({Complex(-1), Complex(1)});
  const Polynomial lp1 = from({Complex(1), Complex(1)});
  CHECK(lm1 * lp1 == from({Complex(-1), Complex(0), Complex(1)}));
}

TEST_CASE("evaluation fixtures") {
  CHECK(Polynomial::constant(Complex(1)).eval(Complex(5, 2)) == Complex(1));
  CHECK(Polynomial::monomial(2).eval(Complex(0, 1)) == Complex(-1));
  CHECK(from({Complex(-1), Complex(0), Complex(1)}).eval(Complex(2)) == Complex(3));
}

TEST_CASE("multiplication is commutative and associative up to rounding") {
  cjmtest::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto draw = [&] {
      std::vector<Complex> c(1 + static_cast<std::size_t>(rng.uniform(0, 16.99)));
      for (auto& z : c) z = rng.in_disk(2.0);
      return Polynomial(std::move(c));
    };
    const Polynomial u = draw(), v = draw(), w = draw();
    double mag = 0.0;
    for (const auto* p : {&u, &v, &w})
      for (const auto& z : p->coeffs()) mag = std::max(mag, std::abs(z));
    const double tol = 1e-13 * mag * mag * std::max(1.0, mag);

    const Polynomial uv = u * v, vu = v * u;
    CHECK(uv.degree() == vu.degree());
    for (int k = 0; k <= uv.degree(); ++k)
      CHECK(std::abs(uv.coeff(k) - vu.coeff(k)) <= tol);

    const Polynomial l = (u * v) * w, r = u * (v * w);
    CHECK(l.degree() == r.degree());
    for (int k = 0; k <= l.degree(); ++k) CHECK(std::abs(l.coeff(k) - r.coeff(k)) <= tol);
  }
}

TEST_CASE("evaluation is multiplicative") {
  cjmtest::Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Complex> cu(1 + static_cast<std::size_t>(rng.uniform(0, 12.99)));
    std::vector<Complex> cv(1 + static_cast<std::size_t>(rng.uniform(0, 12.99)));
    for (auto& z : cu) z = rng.in_disk(1.5);
    for (auto& z : cv) z = rng.in_disk(1.5);
    const Polynomial u(std::move(cu)), v(std::move(cv));
    const Complex z = rng.in_disk(2.0);
    const Complex lhs = (u * v).eval(z);
    const Complex rhs = u.eval(z) * v.eval(z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("degree of a product adds") {
  cjmtest::Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> cu(1 + static_cast<std::size_t>(rng.uniform(0, 9.99)));
    std::vector<Complex> cv(1 + static_cast<std::size_t>(rng.uniform(0, 9.99)));
    for (auto& z : cu) z = rng.on_annulus(0.5, 1.5);
    for (auto& z : cv) z = rng.on_annulus(0.5, 1.5);
    const Polynomial u(std::move(cu)), v(std::move(cv));
    CHECK((u * v).degree() == u.degree() + v.degree());
  }
}

TEST_CASE("shift against product is bitwise exact") {
  // mul(shift(u), v) and mul(u, shift(v)) accumulate identical partial sums;
  // the functional module's exact symmetry rests on this.
  cjmtest::Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> cu(3), cv(4);
    for (auto& z : cu) z = rng.in_disk(1.0);
    for (auto& z : cv) z = rng.in_disk(1.0);
    const Polynomial u(cu), v(cv);
    const Polynomial a = u.shifted_up() * v;
    const Polynomial b = u * v.shifted_up();
    REQUIRE(a.degree() == b.degree());
    for (int k = 0; k <= a.degree(); ++k) {
      CHECK(a.coeff(k).real() == b.coeff(k).real());
      CHECK(a.coeff(k).imag() == b.coeff(k).imag());
    }
  }
}

TEST_CASE("rational mode is exact") {
  using RC = RationalComplex;
  const PolynomialQ lm1(std::vector<RC>{RC(-1), RC(1)});
  const PolynomialQ lp1(std::vector<RC>{RC(1), RC(1)});
  const PolynomialQ sq(std::vector<RC>{RC(-1), RC(0), RC(1)});
  CHECK(lm1 * lp1 == sq);
  const RC i(cjm::Rational(0), cjm::Rational(1));
  CHECK((PolynomialQ::monomial(2).eval(i) == RC(-1)));
}
