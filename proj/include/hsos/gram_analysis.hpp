#pragma once

#include <optional>
#include <vector>

#include "hsos/hermitian_poly.hpp"

namespace hsos {

/// A root-of-unity orbit on the unit circle: the points
/// (xi, w xi, ..., w^{N-1} xi) with xi = e^{i theta} and w = e^{2 pi i / N}.
/// The generator z^N zbar^N - 1 vanishes on every pair of orbit points, so
/// Gram matrices over these configurations are invariant under adding
/// multiples of it.
struct OrbitConfig {
  int N = 1;
  double theta = 0.0;
  std::vector<Complex> points;

  static OrbitConfig make(int N, double theta);
};

/// A certificate of non-membership: the quadratic form of the orbit Gram
/// matrix at `theta` in direction `v` evaluates to `value` < 0 beyond
/// tolerance. Re-checkable from scratch via witness_check.
struct RefutationWitness {
  double theta = 0.0;
  Eigen::VectorXcd v;
  double value = 0.0;
};

/// Result of sweeping the circle for orbit Gram positivity.
struct GramSweep {
  std::vector<double> grid;      // sampled theta values
  std::vector<double> min_eigs;  // smallest Gram eigenvalue per sample
  // Most negative point found (after refinement when triggered), with the
  // phase-fixed unit eigenvector of the smallest eigenvalue there.
  double worst_theta = 0.0;
  double worst_value = 0.0;
  Eigen::VectorXcd worst_vector;
  // Present only when the refined minimum clears the refutation threshold
  // -10 * tol * (1 + ||Gram||); shallower dips are reported as nonnegative
  // within tolerance.
  std::optional<RefutationWitness> witness;
};

/// Matrix of pairwise polarized evaluations: entry (j, k) = f(p_j, conj(p_k)).
/// Hermitian for Hermitian f (enforced, then exactly symmetrized).
/// Throws std::domain_error on non-Hermitian input.
Eigen::MatrixXcd gram_at_points(const HermitianPoly& f,
                                const std::vector<Complex>& points);

/// gram_at_points on the orbit configuration (N points).
Eigen::MatrixXcd orbit_gram(const HermitianPoly& f, int N, double theta);

/// Sample the smallest orbit-Gram eigenvalue on a uniform theta grid
/// (theta_s = 2 pi s / samples). If any sample dips below
/// -tol * (1 + ||Gram||), a golden-section refinement (60 iterations)
/// localizes the minimum around the worst sample; the refined point becomes
/// a witness when it clears the refutation threshold. Ties in the grid
/// argmin resolve to the smallest theta. Throws std::invalid_argument when
/// samples < 2*deg(f) + 2 (aliasing guard: Gram entries are trigonometric
/// polynomials of degree <= deg(f)).
GramSweep gram_sweep(const HermitianPoly& f, int N, int samples,
                     double tol = kDefaultTol);

/// Recompute v* . orbit_gram(f, N, theta) . v from scratch. A valid
/// refutation must come out below -tol; independent of how the witness was
/// produced.
double witness_check(const HermitianPoly& f, int N, const RefutationWitness& w);

}  // namespace hsos
