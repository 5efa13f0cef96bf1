#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hsos/gram_analysis.hpp"
#include "hsos/hermitian_poly.hpp"

namespace hsos::testutil {

using Rng = std::mt19937;

inline Complex rand_complex(Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return Complex(u(rng), u(rng));
}

// Uniform on the closed unit disc (area measure).
inline Complex rand_unit_disc(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline HermitianPoly random_poly(Rng& rng, int deg, double radius = 1.0) {
  Eigen::MatrixXcd m(deg + 1, deg + 1);
  for (int j = 0; j <= deg; ++j) {
    for (int k = 0; k <= deg; ++k) m(j, k) = rand_complex(rng, radius);
  }
  return HermitianPoly(m);
}

// Exactly Hermitian: (B + B*)/2 commutes with conjugation in IEEE
// arithmetic entry for entry.
inline HermitianPoly random_hermitian(Rng& rng, int deg, double radius = 1.0) {
  const Eigen::MatrixXcd b = random_poly(rng, deg, radius).coeffs();
  Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(deg + 1, deg + 1);
  padded.topLeftCorner(b.rows(), b.cols()) = b;
  return HermitianPoly(Eigen::MatrixXcd(0.5 * (padded + padded.adjoint().eval())));
}

// Integer coefficients in [-bound, bound]; arithmetic on these is exact.
inline HermitianPoly random_int_poly(Rng& rng, int deg, int bound = 3) {
  std::uniform_int_distribution<int> u(-bound, bound);
  Eigen::MatrixXcd m(deg + 1, deg + 1);
  for (int j = 0; j <= deg; ++j) {
    for (int k = 0; k <= deg; ++k) m(j, k) = Complex(u(rng), u(rng));
  }
  return HermitianPoly(m);
}

inline HoloPoly random_holo(Rng& rng, int deg, double radius = 1.0) {
  std::vector<Complex> coeffs(deg + 1);
  for (Complex& c : coeffs) c = rand_complex(rng, radius);
  return HoloPoly(std::move(coeffs));
}

inline double max_abs_diff(const HermitianPoly& a, const HermitianPoly& b) {
  return (a - b).max_abs_coeff();
}

// 1 + z*zbar + ... + (z*zbar)^{n-1}: already in normal form (every exponent
// pair has min < n) and sitting on the diagonal of A_0, so adding c times
// this polynomial shifts the block Toeplitz matrix by exactly c*I.
inline HermitianPoly diagonal_unit(int n) {
  HermitianPoly s;
  for (int l = 0; l < n; ++l) s = s + HermitianPoly::monomial(l, l);
  return s;
}

// Smallest orbit-Gram eigenvalue over a coarse grid, relative to the
// coefficient scale. Projection-based square recovery converges linearly
// only when this margin is bounded away from zero (thin or rank-deficient
// spectra put the feasible set on a face of the PSD cone, where it stalls),
// so the random member families below reject draws with a poor margin.
inline double orbit_margin(const HermitianPoly& f, int n, int samples = 256) {
  const GramSweep sweep = gram_sweep(f, n, samples);
  const double mn =
      *std::min_element(sweep.min_eigs.begin(), sweep.min_eigs.end());
  return mn / (1.0 + f.max_abs_coeff());
}

// Sum of `count` random Hermitian squares |h_i|^2 with deg h_i <= max_deg.
inline HermitianPoly random_square_sum(Rng& rng, int count, int max_deg = 4) {
  HermitianPoly f;
  for (int i = 0; i < count; ++i) {
    const int deg = 1 + static_cast<int>(rng() % max_deg);
    f = f + hermitian_square(random_holo(rng, deg));
  }
  return f;
}

// Member of the cone modulo (z^n zbar^n - 1) built from at most three
// Hermitian squares, conditioned on a healthy spectral margin: at least n
// squares so the orbit Gram has full rank, redrawn until the minimum
// orbit-Gram eigenvalue clears 5% of the coefficient scale.
inline HermitianPoly conditioned_member(Rng& rng, int n) {
  for (;;) {
    const int count = n + static_cast<int>(rng() % (4 - n));
    const HermitianPoly f = random_square_sum(rng, count);
    if (orbit_margin(f, n) >= 0.05) return f;
  }
}

// Single random Hermitian square |h|^2 for the scalar (n = 1) pipeline,
// redrawn until |h|^2 is bounded away from zero on the circle (random
// polynomials often have roots close to the unit circle).
inline HoloPoly conditioned_single_square(Rng& rng, int max_deg = 8) {
  for (;;) {
    const int deg = 2 + static_cast<int>(rng() % (max_deg - 1));
    HoloPoly h = random_holo(rng, deg);
    if (orbit_margin(hermitian_square(h), 1) >= 0.05) return h;
  }
}

}  // namespace hsos::testutil
