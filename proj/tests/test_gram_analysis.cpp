#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hsos/gram_analysis.hpp"
#include "hsos/ideal_reduction.hpp"
#include "hsos/parser.hpp"
#include "testutil.hpp"

using namespace hsos;
using testutil::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

const char* kRunningExample =
    "10 + 2*z + 2*zbar + 10*z*zbar - 2*z^2*zbar - 2*z*zbar^2";

double max_entry_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("orbit configurations lie on the circle and rotate by construction") {
  const OrbitConfig cfg = OrbitConfig::make(4, 0.3);
  REQUIRE(cfg.points.size() == 4);
  const Complex omega = std::polar(1.0, 2.0 * kPi / 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(std::abs(cfg.points[j]) - 1.0) <= 1e-14);
    if (j > 0) CHECK(cfg.points[j] == omega * cfg.points[j - 1]);
  }
  CHECK(cfg.points[0] == std::polar(1.0, 0.3));
}

TEST_CASE("gram matrix at explicit points") {
  const HermitianPoly sq = parse("(z + zbar)^2");
  const Eigen::MatrixXcd g = gram_at_points(sq, {Complex(0.0), Complex(1.0)});
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 1, 1, 4;
  CHECK(max_entry_diff(g, expected) == 0.0);
  // Indefinite: det = -1, so the plain-cone test must fail here.
  CHECK(std::abs(g.determinant().real() + 1.0) <= 1e-14);

  const Eigen::MatrixXcd ones =
      gram_at_points(parse("1"), {Complex(0.2, 0.1), Complex(1.0), Complex(-2.0)});
  CHECK(max_entry_diff(ones, Eigen::MatrixXcd::Ones(3, 3)) == 0.0);

  CHECK_THROWS_AS(gram_at_points(parse("z"), {Complex(1.0)}), std::domain_error);
}

TEST_CASE("orbit gram of the running example matches the closed form") {
  const HermitianPoly f = parse(kRunningExample);

  const Eigen::MatrixXcd g = orbit_gram(f, 2, kPi / 2);
  Eigen::MatrixXcd expected(2, 2);
  expected << 20.0, Complex(0, 8), Complex(0, -8), 20.0;
  CHECK(max_entry_diff(g, expected) <= 1e-12);

  for (int s = 0; s < 64; ++s) {
    const double theta = 2.0 * kPi * s / 64;
    const Eigen::MatrixXcd gt = orbit_gram(f, 2, theta);
    Eigen::MatrixXcd closed(2, 2);
    closed << 20.0, Complex(0, 8 * std::sin(theta)),
        Complex(0, -8 * std::sin(theta)), 20.0;
    CHECK(max_entry_diff(gt, closed) <= 1e-12);
    const double det = 400.0 - 64.0 * std::pow(std::sin(theta), 2);
    CHECK(std::abs(gt.determinant().real() - det) <= 1e-10);
  }
}

TEST_CASE("orbit gram edge cases") {
  // The generator vanishes on every orbit point pair.
  for (double theta : {0.0, 0.7, 2.9}) {
    const Eigen::MatrixXcd g = orbit_gram(parse("z^2*zbar^2 - 1"), 2, theta);
    CHECK(g.cwiseAbs().maxCoeff() <= 1e-14);
  }
  const Eigen::MatrixXcd single = orbit_gram(parse("(z + zbar)^2"), 1, 0.0);
  REQUIRE(single.rows() == 1);
  CHECK(std::abs(single(0, 0) - Complex(4.0)) <= 1e-14);
}

TEST_CASE("orbit gram is hermitian and blind to generator multiples") {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 1 + trial % 4;
    const HermitianPoly f = testutil::random_hermitian(rng, 4);
    const double theta = 2.0 * kPi * (trial / 50.0);
    const Eigen::MatrixXcd g = orbit_gram(f, N, theta);
    CHECK(max_entry_diff(g, g.adjoint()) <= 1e-12 * (1.0 + g.cwiseAbs().maxCoeff()));

    const HermitianPoly r = testutil::random_hermitian(rng, 2);
    const HermitianPoly shifted = f + mul(r, ideal_generator(N));
    CHECK(max_entry_diff(g, orbit_gram(shifted, N, theta)) <=
          1e-10 * (1.0 + shifted.sum_abs_coeffs()));
  }
}

TEST_CASE("gram of a product with a squared modulus is the hadamard product") {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const int N = 1 + trial % 3;
    const HermitianPoly f = testutil::random_hermitian(rng, 3);
    const HoloPoly h = testutil::random_holo(rng, 3);
    const HermitianPoly hsq = hermitian_square(h);
    const double theta = 0.1 + trial * 0.2;
    const Eigen::MatrixXcd lhs = orbit_gram(mul(hsq, f), N, theta);
    const Eigen::MatrixXcd rhs =
        orbit_gram(hsq, N, theta).cwiseProduct(orbit_gram(f, N, theta));
    CHECK(max_entry_diff(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("gram entries are trigonometric polynomials of the poly's degree") {
  // Interpolate each entry from 2d+2 uniform samples by a discrete Fourier
  // transform, then compare against direct evaluation off the grid.
  Rng rng(71);
  const int N = 3;
  const HermitianPoly f = testutil::random_hermitian(rng, 4);
  const int d = f.deg();
  const int samples = 2 * d + 2;

  std::vector<Eigen::MatrixXcd> grams;
  for (int s = 0; s < samples; ++s) {
    grams.push_back(orbit_gram(f, N, 2.0 * kPi * s / samples));
  }
  for (double theta : {0.123, 1.717, 4.004}) {
    const Eigen::MatrixXcd direct = orbit_gram(f, N, theta);
    for (int row = 0; row < N; ++row) {
      for (int col = 0; col < N; ++col) {
        Complex interp = 0.0;
        for (int ell = -d; ell <= d; ++ell) {
          Complex coeff = 0.0;
          for (int s = 0; s < samples; ++s) {
            const double ts = 2.0 * kPi * s / samples;
            coeff += grams[s](row, col) * std::polar(1.0, -ell * ts);
          }
          coeff /= static_cast<double>(samples);
          interp += coeff * std::polar(1.0, ell * theta);
        }
        CHECK(std::abs(interp - direct(row, col)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("sweep of the running example stays positive with minimum 12") {
  const GramSweep sweep = gram_sweep(parse(kRunningExample), 2, 1024);
  REQUIRE(sweep.grid.size() == 1024);
  CHECK_FALSE(sweep.witness.has_value());

  double grid_min = sweep.min_eigs[0];
  for (double v : sweep.min_eigs) grid_min = std::min(grid_min, v);
  CHECK(std::abs(grid_min - 12.0) <= 1e-9);
  // theta = pi/2 lands exactly on sample 256 of 1024.
  CHECK(std::abs(sweep.min_eigs[256] - 12.0) <= 1e-9);
  CHECK(std::abs(sweep.min_eigs[0] - 20.0) <= 1e-9);
}

TEST_CASE("sweep refutes a negative constant anywhere on the circle") {
  const GramSweep sweep = gram_sweep(parse("-1"), 1, 8);
  REQUIRE(sweep.witness.has_value());
  CHECK(std::abs(sweep.witness->value + 1.0) <= 1e-12);
  CHECK(std::abs(witness_check(parse("-1"), 1, *sweep.witness) + 1.0) <= 1e-12);
}

TEST_CASE("sweep finds the true minimum of a shifted linear polynomial") {
  // f = z + zbar - 3 on the circle is 2 cos(theta) - 3, minimized at pi.
  const HermitianPoly f = parse("z + zbar - 3");
  const GramSweep sweep = gram_sweep(f, 1, 1024);
  REQUIRE(sweep.witness.has_value());
  CHECK(std::abs(sweep.witness->theta - kPi) <= 1e-9);
  CHECK(std::abs(sweep.witness->value + 5.0) <= 1e-9);
  const double replay = witness_check(f, 1, *sweep.witness);
  CHECK(std::abs(replay + 5.0) <= 1e-9);
  CHECK(replay < -10 * kDefaultTol * 6.0);
}

TEST_CASE("sweeps of squared moduli never produce witnesses") {
  Rng rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const int N = 1 + trial % 4;
    const HoloPoly h = testutil::random_holo(rng, 3);
    const HermitianPoly sq = hermitian_square(h);
    const GramSweep sweep = gram_sweep(sq, N, 64);
    CHECK_FALSE(sweep.witness.has_value());
    for (double v : sweep.min_eigs) {
      CHECK(v >= -kDefaultTol * (1.0 + sq.sum_abs_coeffs()));
    }
  }
}

TEST_CASE("sweep reports the first sample on ties and validates sample counts") {
  const GramSweep flat = gram_sweep(parse("1"), 1, 8);
  CHECK(flat.worst_theta == 0.0);
  CHECK(std::abs(flat.worst_value - 1.0) <= 1e-15);
  CHECK_THROWS_AS(gram_sweep(parse("(z + zbar)^2"), 2, 4), std::invalid_argument);
}

TEST_CASE("witness quadratic forms recompute from scratch") {
  const HermitianPoly f = parse(kRunningExample);
  RefutationWitness unit;
  unit.theta = 1.234;
  unit.v = Eigen::VectorXcd::Zero(2);
  unit.v(0) = 1.0;
  CHECK(std::abs(witness_check(f, 2, unit) - 20.0) <= 1e-12);

  // Eigen-decomposition of the indefinite explicit-point matrix [[0,1],[1,4]]:
  // the negative eigenvalue 2 - sqrt(5) is attained by its eigenvector.
  const Eigen::MatrixXcd g =
      gram_at_points(parse("(z + zbar)^2"), {Complex(0.0), Complex(1.0)});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g);
  const double lambda = eig.eigenvalues()(0);
  CHECK(std::abs(lambda - (2.0 - std::sqrt(5.0))) <= 1e-12);
  const Eigen::VectorXcd v = eig.eigenvectors().col(0);
  const double form = std::real(v.dot(g * v));
  CHECK(std::abs(form - lambda) <= 1e-12);
}
