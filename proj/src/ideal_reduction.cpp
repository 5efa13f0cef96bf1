#include "hsos/ideal_reduction.hpp"

#include <stdexcept>
#include <string>

#include "hsos/gram_analysis.hpp"

namespace hsos {

void validate_normal_form(const TrigNormalForm& t) {
  if (t.N < 1) throw std::invalid_argument("normal form: N must be positive");
  if (t.m < 0 || t.data.size() != static_cast<size_t>(t.m) + 1) {
    throw std::invalid_argument("normal form: data must hold exactly m+1 blocks");
  }
  for (const auto& block : t.data) {
    if (block.rows() != t.N || block.cols() != t.N) {
      throw std::invalid_argument("normal form: blocks must be N x N");
    }
    if (!block.allFinite()) {
      throw std::invalid_argument("normal form: block has non-finite entries");
    }
  }
  if (t.m > 0 && t.data.back().cwiseAbs().maxCoeff() == 0.0) {
    throw std::invalid_argument("normal form: trailing block is zero (m not minimal)");
  }
  const Eigen::MatrixXcd skew = t.data[0] - t.data[0].adjoint();
  if (skew.cwiseAbs().maxCoeff() >
      1e-12 * (1.0 + t.data[0].cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("normal form: A_0 must be Hermitian");
  }
}

HermitianPoly ideal_generator(int N) {
  if (N < 0) throw std::invalid_argument("ideal generator: N must be nonnegative");
  if (N == 0) return HermitianPoly();  // z^0 zbar^0 - 1 = 0
  return HermitianPoly::monomial(N, N) - HermitianPoly::constant(1.0);
}

std::pair<TrigNormalForm, HermitianPoly> reduce(const HermitianPoly& f, int N) {
  if (N < 1) throw std::invalid_argument("reduce: N must be positive");
  require_hermitian(f, "reduce");

  const int d = f.deg();
  Eigen::MatrixXcd w = f.coeffs();
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  // One fold per visit: zbar^a z^b = zbar^{a-N} z^{b-N} (z^N zbar^N - 1)
  //                               + zbar^{a-N} z^{b-N}.
  // Sweeping total degrees downward revisits folded-down mass later, so
  // cascades (min exponent >= 2N) resolve without inner loops.
  for (int total = 2 * d; total >= 2 * N; --total) {
    for (int a = std::max(N, total - d); a <= std::min(d, total - N); ++a) {
      const int b = total - a;
      const Complex c = w(a, b);
      if (c == Complex(0.0)) continue;
      w(a, b) = 0.0;
      w(a - N, b - N) += c;
      q(a - N, b - N) += c;
    }
  }

  HermitianPoly quotient(q);
  require_hermitian(quotient, "reduce quotient");
  HermitianPoly normal(w);

  TrigNormalForm t;
  t.N = N;
  t.m = (normal.deg() + N) / N - 1;  // ceil((deg+1)/N) - 1
  const int size = N * (t.m + 1);
  Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(size, size);
  padded.topLeftCorner(normal.deg() + 1, normal.deg() + 1) = normal.coeffs();
  for (int k = 0; k <= t.m; ++k) {
    t.data.push_back(padded.block(0, k * N, N, N));
  }
  while (t.m > 0 && t.data.back().isZero(0.0)) {
    t.data.pop_back();
    --t.m;
  }
  return {std::move(t), std::move(quotient)};
}

HermitianPoly reconstruct(const TrigNormalForm& t) {
  validate_normal_form(t);
  const int size = t.N * (t.m + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  m.topLeftCorner(t.N, t.N) = t.data[0];
  for (int k = 1; k <= t.m; ++k) {
    m.block(0, k * t.N, t.N, t.N) = t.data[k];
    m.block(k * t.N, 0, t.N, t.N) = t.data[k].adjoint();
  }
  return HermitianPoly(m);
}

bool gram_invariance_check(const HermitianPoly& f, const HermitianPoly& g,
                           int N, const std::vector<double>& thetas,
                           double tol) {
  for (double theta : thetas) {
    const Eigen::MatrixXcd gf = orbit_gram(f, N, theta);
    const Eigen::MatrixXcd gg = orbit_gram(g, N, theta);
    if ((gf - gg).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace hsos
