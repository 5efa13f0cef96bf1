#include "hsos/block_toeplitz.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hsos {

namespace {

Eigen::MatrixXcd psd_clip(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXcd r =
      es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
  return 0.5 * (r + r.adjoint().eval());
}

// Exact orthogonal projection onto {Q Hermitian : block sums = data}: on
// each block diagonal the defect is spread evenly, with the mirrored
// adjoint keeping the matrix Hermitian.
void project_affine(Eigen::MatrixXcd& q, const std::vector<Eigen::MatrixXcd>& data, int N) {
  const int m = static_cast<int>(data.size()) - 1;
  for (int k = 0; k <= m; ++k) {
    Eigen::MatrixXcd defect = data[k] - block_trace(q, N, k);
    if (k == 0) defect = 0.5 * (defect + defect.adjoint().eval());
    defect /= static_cast<double>(m + 1 - k);
    for (int j = 0; j + k <= m; ++j) {
      q.block(j * N, (j + k) * N, N, N) += defect;
      if (k > 0) q.block((j + k) * N, j * N, N, N) += defect.adjoint();
    }
  }
}

double trace_residual(const Eigen::MatrixXcd& q, const std::vector<Eigen::MatrixXcd>& data, int N) {
  double worst = 0.0;
  for (int k = 0; k < static_cast<int>(data.size()); ++k) {
    worst = std::max(worst, (data[k] - block_trace(q, N, k)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

BlockToeplitz build_toeplitz(const TrigNormalForm& t) {
  validate_normal_form(t);
  BlockToeplitz b;
  b.N = t.N;
  b.m = t.m;
  const int size = t.N * (t.m + 1);
  b.mat = Eigen::MatrixXcd::Zero(size, size);
  // A_0 enters Hermitianized so the assembled matrix is exactly Hermitian
  // even when the stored block carries roundoff skew.
  const Eigen::MatrixXcd a0 = 0.5 * (t.data[0] + t.data[0].adjoint().eval());
  for (int j = 0; j <= t.m; ++j) {
    b.mat.block(j * t.N, j * t.N, t.N, t.N) = a0;
    for (int k = j + 1; k <= t.m; ++k) {
      b.mat.block(j * t.N, k * t.N, t.N, t.N) = t.data[k - j];
      b.mat.block(k * t.N, j * t.N, t.N, t.N) = t.data[k - j].adjoint();
    }
  }
  return b;
}

Eigen::MatrixXcd elementary_toeplitz(int k, int N, int m) {
  if (N < 1 || m < 0) throw std::invalid_argument("elementary_toeplitz: bad shape");
  if (std::abs(k) > m) {
    throw std::invalid_argument("elementary_toeplitz: |k| exceeds block degree");
  }
  const int size = N * (m + 1);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(size, size);
  for (int j = 0; j <= m; ++j) {
    const int c = j + k;
    if (c < 0 || c > m) continue;
    t.block(j * N, c * N, N, N).setIdentity();
  }
  return t;
}

Eigen::MatrixXcd block_trace(const Eigen::MatrixXcd& q, int N, int k) {
  if (N < 1 || q.rows() != q.cols() || q.rows() % N != 0) {
    throw std::invalid_argument("block_trace: matrix side must be a multiple of N");
  }
  const int m = static_cast<int>(q.rows()) / N - 1;
  if (std::abs(k) > m) {
    throw std::invalid_argument("block_trace: |k| exceeds block degree");
  }
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(N, N);
  for (int j = std::max(0, -k); j <= m && j + k <= m; ++j) {
    sum += q.block(j * N, (j + k) * N, N, N);
  }
  return sum;
}

PositiveBlockQ recover_q(const TrigNormalForm& t, const RecoverOptions& opts) {
  const BlockToeplitz toep = build_toeplitz(t);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(toep.mat, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues()(0);
  const double scale = 1.0 + es.eigenvalues().cwiseAbs().maxCoeff();
  if (min_eig < -opts.tol * scale) {
    throw NotPsdError("recover_q: Toeplitz matrix is not positive semidefinite",
                      min_eig);
  }

  std::vector<Eigen::MatrixXcd> data = t.data;
  double epsilon = 0.0;
  if (min_eig < opts.tol * scale) {
    // Singular within tolerance: projections stall on the cone boundary, so
    // solve for slightly interior data instead and report the shift.
    epsilon = 10.0 * opts.tol * scale;
    data[0] += epsilon * Eigen::MatrixXcd::Identity(t.N, t.N);
  }

  const int size = t.N * (t.m + 1);
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(size, size);
  for (int j = 0; j <= t.m; ++j) {
    for (int k = 0; j + k <= t.m; ++k) {
      const Eigen::MatrixXcd lifted = data[k] / static_cast<double>(t.m + 1 - k);
      x.block(j * t.N, (j + k) * t.N, t.N, t.N) = lifted;
      if (k > 0) x.block((j + k) * t.N, j * t.N, t.N, t.N) = lifted.adjoint();
    }
  }
  x = 0.5 * (x + x.adjoint().eval());

  Eigen::MatrixXcd correction = Eigen::MatrixXcd::Zero(size, size);
  PositiveBlockQ best;
  best.N = t.N;
  best.m = t.m;
  best.epsilon = epsilon;
  best.residual = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    const Eigen::MatrixXcd y = psd_clip(x + correction);
    correction = x + correction - y;
    const double residual = trace_residual(y, data, t.N);
    if (residual < best.residual) {
      best.residual = residual;
      best.mat = y;
    }
    if (iter % 100 == 0) best.residual_history.push_back(best.residual);
    if (best.residual <= opts.feas_tol) return best;
    x = y;
    project_affine(x, data, t.N);
  }
  throw NoConvergenceError(
      "recover_q: no feasible Q within " + std::to_string(opts.max_iters) +
          " iterations (best residual " + format_double(best.residual) + ")",
      best.residual);
}

std::vector<HoloPoly> factor_to_squares(const PositiveBlockQ& q) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q.mat);
  const double scale = 1.0 + es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<HoloPoly> squares;
  // Largest eigenvalue first, so the dominant square comes out first.
  for (int i = static_cast<int>(es.eigenvalues().size()) - 1; i >= 0; --i) {
    const double lam = es.eigenvalues()(i);
    if (lam <= 1e-12 * scale) continue;
    const double root = std::sqrt(lam);
    std::vector<Complex> coeffs(q.mat.rows());
    for (Eigen::Index c = 0; c < q.mat.rows(); ++c) {
      coeffs[c] = root * std::conj(es.eigenvectors()(c, i));
    }
    squares.emplace_back(std::move(coeffs));
  }
  return squares;
}

Complex scalar_toeplitz_quadratic(const TrigNormalForm& t,
                                  const Eigen::VectorXcd& w) {
  if (t.N != 1) {
    throw std::invalid_argument("scalar_toeplitz_quadratic: requires N = 1 data");
  }
  if (w.size() != t.m + 1) {
    throw std::invalid_argument("scalar_toeplitz_quadratic: w must have length m+1");
  }
  const BlockToeplitz toep = build_toeplitz(t);
  return w.dot(toep.mat * w);
}

}  // namespace hsos
