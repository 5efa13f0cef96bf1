#include "hsos/gram_analysis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsos {

namespace {

struct EigPoint {
  double lambda_min = 0.0;
  double scale = 1.0;  // 1 + spectral norm
  Eigen::VectorXcd vec;
};

EigPoint min_eig_at(const HermitianPoly& f, int N, double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(orbit_gram(f, N, theta));
  EigPoint p;
  p.lambda_min = es.eigenvalues()(0);
  p.scale = 1.0 + es.eigenvalues().cwiseAbs().maxCoeff();
  p.vec = es.eigenvectors().col(0);
  return p;
}

// Deterministic representative of the eigvector: unit norm, largest-magnitude
// entry rotated to the positive real axis.
void fix_phase(Eigen::VectorXcd& v) {
  v.normalize();
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  const Complex pivot = v(at);
  if (std::abs(pivot) > 0) v *= std::conj(pivot) / std::abs(pivot);
}

}  // namespace

OrbitConfig OrbitConfig::make(int N, double theta) {
  if (N < 1) throw std::invalid_argument("orbit: N must be positive");
  OrbitConfig c;
  c.N = N;
  c.theta = theta;
  const Complex xi = std::polar(1.0, theta);
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / N);
  Complex w = 1.0;
  for (int j = 0; j < N; ++j) {
    c.points.push_back(w * xi);
    w *= omega;
  }
  return c;
}

Eigen::MatrixXcd gram_at_points(const HermitianPoly& f,
                                const std::vector<Complex>& points) {
  require_hermitian(f, "gram_at_points");
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    g(j, j) = polarized_eval(f, points[j], points[j]);
    for (Eigen::Index k = j + 1; k < n; ++k) {
      // f Hermitian makes the matrix Hermitian up to roundoff; evaluating
      // the upper triangle once and mirroring keeps it exactly so.
      g(j, k) = polarized_eval(f, points[j], points[k]);
      g(k, j) = std::conj(g(j, k));
    }
  }
  return g;
}

Eigen::MatrixXcd orbit_gram(const HermitianPoly& f, int N, double theta) {
  return gram_at_points(f, OrbitConfig::make(N, theta).points);
}

GramSweep gram_sweep(const HermitianPoly& f, int N, int samples, double tol) {
  if (samples < 2 * f.deg() + 2) {
    throw std::invalid_argument(
        "gram_sweep: need at least 2*deg+2 samples to avoid aliasing");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;

  GramSweep sweep;
  sweep.grid.reserve(samples);
  sweep.min_eigs.reserve(samples);
  int worst_idx = 0;
  EigPoint worst;
  for (int s = 0; s < samples; ++s) {
    const double theta = two_pi * s / samples;
    EigPoint p = min_eig_at(f, N, theta);
    sweep.grid.push_back(theta);
    sweep.min_eigs.push_back(p.lambda_min);
    if (s == 0 || p.lambda_min < worst.lambda_min) {
      worst = std::move(p);
      worst_idx = s;
    }
  }
  double worst_theta = sweep.grid[worst_idx];

  if (worst.lambda_min < -tol * worst.scale) {
    // Golden-section minimization of the smallest-eigenvalue function over
    // the bracket spanned by the worst sample's neighbours.
    constexpr double inv_phi = 0.6180339887498949;
    double lo = worst_theta - two_pi / samples;
    double hi = worst_theta + two_pi / samples;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = min_eig_at(f, N, x1).lambda_min;
    double f2 = min_eig_at(f, N, x2).lambda_min;
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = min_eig_at(f, N, x1).lambda_min;
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = min_eig_at(f, N, x2).lambda_min;
      }
    }
    const double refined = 0.5 * (lo + hi);
    EigPoint p = min_eig_at(f, N, refined);
    if (p.lambda_min < worst.lambda_min) {
      worst = std::move(p);
      worst_theta = refined;
    }
  }

  fix_phase(worst.vec);
  sweep.worst_theta = worst_theta;
  sweep.worst_value = worst.lambda_min;
  sweep.worst_vector = worst.vec;
  if (worst.lambda_min <= -10.0 * tol * worst.scale) {
    RefutationWitness w;
    w.theta = worst_theta;
    w.v = worst.vec;
    w.value = worst.lambda_min;
    sweep.witness = std::move(w);
  }
  return sweep;
}

double witness_check(const HermitianPoly& f, int N, const RefutationWitness& w) {
  const Eigen::MatrixXcd g = orbit_gram(f, N, w.theta);
  if (w.v.size() != g.rows()) {
    throw std::invalid_argument("witness_check: vector length must equal N");
  }
  return std::real(w.v.dot(g * w.v));
}

}  // namespace hsos
