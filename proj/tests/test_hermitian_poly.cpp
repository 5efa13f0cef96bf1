#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "hsos/hermitian_poly.hpp"
#include "testutil.hpp"

using namespace hsos;
using testutil::Rng;

namespace {

HermitianPoly from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXcd m(n, n);
  int j = 0;
  for (const auto& row : rows) {
    int k = 0;
    for (const Complex& c : row) m(j, k++) = c;
    ++j;
  }
  return HermitianPoly(m);
}

// 10 + 2z + 2zbar + 10 z zbar - 2 z^2 zbar - 2 z zbar^2
HermitianPoly running_example() {
  return from_rows({{10, 2, 0}, {2, 10, -2}, {0, -2, 0}});
}

}  // namespace

TEST_CASE("factories, trimming, and coefficient access") {
  const HermitianPoly c = HermitianPoly::constant(Complex(3, -1));
  CHECK(c.deg() == 0);
  CHECK(c.coeff(0, 0) == Complex(3, -1));

  const HermitianPoly m = HermitianPoly::monomial(2, 1);  // zbar^2 z
  CHECK(m.deg() == 2);
  CHECK(m.coeff(2, 1) == Complex(1));
  CHECK(m.coeff(1, 2) == Complex(0));
  CHECK(m.coeff(7, 9) == Complex(0));  // out of range reads as zero

  Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(4, 4);
  padded(0, 0) = 5.0;
  const HermitianPoly trimmed{padded};
  CHECK(trimmed.deg() == 0);

  CHECK(HermitianPoly::constant(0.0).is_zero());
  CHECK_FALSE(running_example().is_zero());
}

TEST_CASE("arithmetic matches hand-expanded coefficients") {
  const HermitianPoly z = HermitianPoly::monomial(0, 1);
  const HermitianPoly zbar = HermitianPoly::monomial(1, 0);
  const HermitianPoly one = HermitianPoly::constant(1.0);

  // (z + zbar)^2 = z^2 + 2 z zbar + zbar^2
  const HermitianPoly s = z + zbar;
  const HermitianPoly sq = mul(s, s);
  CHECK(sq == from_rows({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}));

  // |1 + z|^2 = 1 + z + zbar + z zbar
  CHECK(hermitian_square(HoloPoly({1.0, 1.0})) == from_rows({{1, 1}, {1, 1}}));

  const HermitianPoly f = running_example();
  CHECK(f + HermitianPoly::constant(0.0) == f);
  CHECK((f - f).is_zero());
  CHECK(one * 2.0 + z == from_rows({{2, 1}, {0, 0}}));
  CHECK(f.max_abs_coeff() == 10.0);
  CHECK(f.sum_abs_coeffs() == 28.0);
}

TEST_CASE("multiplication is commutative and associative") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianPoly a = testutil::random_int_poly(rng, 3);
    const HermitianPoly b = testutil::random_int_poly(rng, 2);
    const HermitianPoly c = testutil::random_int_poly(rng, 2);
    CHECK(mul(a, b) == mul(b, a));  // exact: integer coefficients
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(testutil::max_abs_diff(mul(a, b + c), mul(a, b) + mul(a, c)) == 0.0);
  }
}

TEST_CASE("multiplication refuses degrees past the hard cap") {
  const HermitianPoly big = HermitianPoly::monomial(0, 300);
  CHECK_THROWS_AS(mul(big, big), SizeError);
}

TEST_CASE("involution conjugate-transposes coefficients and is an involution") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianPoly f = testutil::random_poly(rng, 4);
    const HermitianPoly g = involution(f);
    for (int j = 0; j <= f.deg(); ++j) {
      for (int k = 0; k <= f.deg(); ++k) {
        CHECK(g.coeff(j, k) == std::conj(f.coeff(k, j)));
      }
    }
    CHECK(involution(g) == f);
  }
}

TEST_CASE("hermitian polynomials: symmetry, realness on the circle, closure") {
  Rng rng(11);
  const HermitianPoly f = running_example();
  CHECK(f.is_hermitian());
  CHECK(involution(f) == f);

  for (int trial = 0; trial < 100; ++trial) {
    const HermitianPoly h = testutil::random_hermitian(rng, 4);
    CHECK(h.is_hermitian());
    // Real-valued on the unit circle.
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const Complex z = std::polar(1.0, u(rng));
    const Complex value = polarized_eval(h, z, z);
    CHECK(std::abs(std::imag(value)) <= 1e-12 * (1.0 + h.sum_abs_coeffs()));
  }

  // Products of hermitian polynomials stay hermitian (exact for integer
  // coefficients, where no rounding can break the symmetry).
  for (int trial = 0; trial < 100; ++trial) {
    HermitianPoly a = testutil::random_int_poly(rng, 3);
    HermitianPoly b = testutil::random_int_poly(rng, 3);
    a = a + involution(a);
    b = b + involution(b);
    CHECK(mul(a, b).is_hermitian());
  }
}

TEST_CASE("is_hermitian tolerance distinguishes tiny defects") {
  Eigen::MatrixXcd m = running_example().coeffs();
  m(0, 1) += Complex(0, 1e-12);
  const HermitianPoly f{m};
  CHECK_FALSE(f.is_hermitian());
  CHECK(f.is_hermitian(1e-11));
  CHECK_THROWS_AS(require_hermitian(HermitianPoly::monomial(0, 1), "test"),
                  std::domain_error);
}

TEST_CASE("polarized evaluation and the hermitian symmetry identity") {
  const HermitianPoly zz = HermitianPoly::monomial(1, 1);
  // a_{11} conj(q) p with p=2, q=3i.
  CHECK(polarized_eval(zz, 2.0, Complex(0, 3)) == Complex(0, -6));

  // At p = q = 1 the polarization collapses to the plain coefficient sum.
  const HermitianPoly f = running_example();
  CHECK(polarized_eval(f, Complex(1, 0), Complex(1, 0)) == Complex(20.0));

  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianPoly g = testutil::random_poly(rng, 4);
    const Complex p = testutil::rand_complex(rng);
    const Complex q = testutil::rand_complex(rng);
    // polarized_eval(g*, p, q) == conj(polarized_eval(g, q, p)) for every g.
    const Complex lhs = polarized_eval(involution(g), p, q);
    const Complex rhs = std::conj(polarized_eval(g, q, p));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + g.sum_abs_coeffs()));
  }
}

TEST_CASE("conj_product builds squared moduli") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const HoloPoly h = testutil::random_holo(rng, 4);
    const HermitianPoly sq = hermitian_square(h);
    CHECK(sq == conj_product(h, h));
    CHECK(sq.is_hermitian(1e-15));
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const Complex z = std::polar(1.0, u(rng));
    const double direct = std::norm(h.eval(z));
    const Complex via_matrix = polarized_eval(sq, z, z);
    CHECK(std::abs(std::real(via_matrix) - direct) <=
          1e-12 * (1.0 + sq.sum_abs_coeffs()));
  }
}

TEST_CASE("circle averages come from the diagonal") {
  const HermitianPoly f = running_example();
  CHECK(circle_integral(f) == Complex(20.0));

  // Cross-check against a trapezoid average over the circle.
  Rng rng(29);
  const HermitianPoly g = testutil::random_poly(rng, 3);
  const int samples = 32;
  Complex avg = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * s / samples);
    avg += polarized_eval(g, z, z);
  }
  avg /= static_cast<double>(samples);
  CHECK(std::abs(avg - circle_integral(g)) <= 1e-12 * (1.0 + g.sum_abs_coeffs()));
}

TEST_CASE("coefficient matrix positivity detection") {
  CHECK_FALSE(coeff_matrix_psd(from_rows({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}})));
  CHECK(coeff_matrix_psd(from_rows({{1, 1}, {1, 1}})));
  CHECK(coeff_matrix_psd(from_rows({{5, 2, 0}, {2, 10, -2}, {0, -2, 5}})));
  CHECK_FALSE(coeff_matrix_psd(running_example()));
  // Tolerance is relative: a tiny negative dip below a large diagonal passes.
  CHECK(coeff_matrix_psd(from_rows({{1e6, 0}, {0, -1e-6}}), 1e-9));
}

TEST_CASE("holomorphic evaluation uses all coefficients") {
  const HoloPoly h({1.0, 2.0, 3.0});
  CHECK(h.deg() == 2);
  CHECK(h.eval(2.0) == Complex(17.0));
  CHECK(h.eval(0.0) == Complex(1.0));
  const HoloPoly trimmed({Complex(4.0), Complex(0.0), Complex(0.0)});
  CHECK(trimmed.deg() == 0);
}

TEST_CASE("format_double prints exact round-trippable literals") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(42.0) == "42");
  CHECK(format_double(-3.0) == "-3");
  const std::string s = format_double(0.1);
  CHECK(std::stod(s) == 0.1);
}
