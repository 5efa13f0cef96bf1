#include "hsos/fn_functional.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsos {

int circulant_average(long long ell, int N) {
  if (N < 1) throw std::invalid_argument("circulant_average: N must be positive");
  if (ell < 0) throw std::invalid_argument("circulant_average: ell must be nonnegative");
  return ell % N == 0 ? 1 : 0;
}

Complex fn_diagonal(const HermitianPoly& f, int N) {
  if (N < 1) throw std::invalid_argument("fn_diagonal: N must be positive");
  Complex sum = 0.0;
  for (int l = 0; l <= f.deg(); l += N) {
    sum += f.coeff(l, l);
  }
  return sum;
}

Complex fn_quadrature(const HermitianPoly& f, int N, int samples) {
  if (N < 1) throw std::invalid_argument("fn_quadrature: N must be positive");
  if (samples == 0) samples = 2 * f.deg() + 2;
  if (samples < 2 * f.deg() + 2) {
    throw std::invalid_argument(
        "fn_quadrature: need at least 2*deg+2 samples for exactness");
  }
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / N);
  Complex total = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex xi = std::polar(1.0, 2.0 * std::numbers::pi * s / samples);
    Complex orbit = 0.0;
    Complex wj = 1.0;
    for (int j = 0; j < N; ++j) {
      Complex wk = 1.0;
      for (int k = 0; k < N; ++k) {
        orbit += polarized_eval(f, wj * xi, wk * xi);
        wk *= omega;
      }
      wj *= omega;
    }
    total += orbit / static_cast<double>(N * N);
  }
  return total / static_cast<double>(samples);
}

HoloPoly embed_vector(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw std::invalid_argument("embed_vector: empty vector");
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  for (int j = 0; j < n; ++j) {
    coeffs[n - j] = v(j);
  }
  return HoloPoly(std::move(coeffs));
}

Complex matrix_product_via_fn(const Eigen::VectorXcd& v,
                              const Eigen::MatrixXcd& A,
                              const Eigen::VectorXcd& w, int s, int t) {
  const int N = static_cast<int>(A.rows());
  if (A.cols() != N || v.size() != N || w.size() != N) {
    throw std::invalid_argument("matrix_product_via_fn: dimension mismatch");
  }
  if (s < 0 || t < 0) {
    throw std::invalid_argument("matrix_product_via_fn: shifts must be nonnegative");
  }
  const HermitianPoly f_a{Eigen::MatrixXcd(A)};
  const HermitianPoly embedded = conj_product(embed_vector(v), embed_vector(w));
  const HermitianPoly shift = HermitianPoly::monomial(N * s, N * t);
  return fn_diagonal(mul(shift, mul(embedded, f_a)), N);
}

double fn_positivity_check(const HermitianPoly& f, int N, const HoloPoly& h) {
  require_hermitian(f, "fn_positivity_check");
  return std::real(fn_diagonal(mul(hermitian_square(h), f), N));
}

}  // namespace hsos
