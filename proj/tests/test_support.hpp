#ifndef CJM_TEST_SUPPORT_HPP
#define CJM_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "jacobi.hpp"
#include "scalars.hpp"

namespace cjmtest {

using cjm::Complex;

// Deterministic draws for the property suites.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }

  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * M_PI);
    return std::polar(r, th);
  }

  Complex on_annulus(double rmin, double rmax) {
    return std::polar(uniform(rmin, rmax), uniform(0.0, 2.0 * M_PI));
  }

  cjm::jacobi::JacobiSpec spec(std::size_t window, double amin, double amax, double bmax) {
    cjm::jacobi::JacobiSpec s;
    for (std::size_t k = 0; k + 1 < window; ++k) s.a.push_back(on_annulus(amin, amax));
    for (std::size_t k = 0; k < window; ++k) s.b.push_back(in_disk(bmax));
    return s;
  }

  // Rational-entry spec: numerators in [-4, 4], denominators in {1, 2, 4},
  // off-diagonal moduli kept near 1.
  cjm::jacobi::JacobiSpecQ spec_exact(std::size_t window) {
    cjm::jacobi::JacobiSpecQ s;
    auto smallq = [&](bool nonzero_unit) {
      for (;;) {
        const int num_re = static_cast<int>(uniform(-4.49, 4.49));
        const int num_im = static_cast<int>(uniform(-4.49, 4.49));
        const int den = 1 << static_cast<int>(uniform(0.0, 2.99));
        cjm::RationalComplex z(cjm::Rational(num_re, den), cjm::Rational(num_im, den));
        const double mag = cjm::abs_approx(z);
        if (nonzero_unit) {
          if (mag >= 0.7 && mag <= 1.5) return z;
        } else {
          if (mag <= 1.0) return z;
        }
      }
    };
    for (std::size_t k = 0; k + 1 < window; ++k) s.a.push_back(smallq(true));
    for (std::size_t k = 0; k < window; ++k) s.b.push_back(smallq(false));
    return s;
  }
};

}  // namespace cjmtest

#endif
