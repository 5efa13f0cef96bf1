#pragma once

#include <optional>
#include <vector>

#include "hsos/block_toeplitz.hpp"
#include "hsos/gram_analysis.hpp"

namespace hsos {

/// Explicit membership certificate: f = sum_i |h_i|^2 + q * (z^n zbar^n - 1),
/// re-checkable by coefficient arithmetic alone (verify_certificate).
/// n = 0 denotes the plain sums-of-squares cone (zero generator, q unused).
struct SosCertificate {
  int n = 1;
  std::vector<HoloPoly> squares;
  HermitianPoly multiplier;  // q, fully collected and Hermitian
  double residual = 0.0;     // max-norm defect of the identity above
};

enum class Verdict { Member, NonMember, Boundary };

/// Outcome of decide: the verdict plus whichever evidence supports it and
/// the diagnostics both routes produced. Member always carries a checked
/// certificate; NonMember always carries a checked witness; Boundary
/// carries a best-effort certificate when the regularized recovery
/// succeeded.
struct Decision {
  Verdict verdict = Verdict::Boundary;
  std::optional<SosCertificate> certificate;
  std::optional<RefutationWitness> witness;
  double toeplitz_min_eig = 0.0;
  double toeplitz_scale = 1.0;  // 1 + spectral norm: the tolerance reference
  double sweep_min_eig = 0.0;   // most negative orbit-Gram eigenvalue seen
  double sweep_theta = 0.0;     // where it occurs
};

struct DecideOptions {
  double tol = kDefaultTol;  // PSD band: |min eig| < tol*scale => Boundary
  int sweep_samples = 1024;  // raised to 2*deg+2 when the degree demands it
  double cert_tol = 1e-8;    // Member certificates must verify below this
  double feas_tol = 1e-9;    // recover_q trace-residual target
  int max_iters = 20000;     // recover_q iteration budget
  int max_refine = 3;        // extra sweep passes (4x samples each) for a witness
};

/// Decide membership of f in the Hermitian sums-of-squares cone modulo
/// (z^N zbar^N - 1). Route: reduce to the trigonometric normal form, build
/// the block Toeplitz matrix, and test its smallest eigenvalue against the
/// tolerance band.
///
///   - Clearly PSD: Member. recover_q + factor_to_squares produce the
///     squares; the multiplier is q_reduce - q_S, where q_S is the
///     reduction quotient of sum |h_i|^2, so the certificate identity holds
///     by construction. The residual is recomputed independently and must
///     clear opts.cert_tol (else InconsistentError).
///   - Clearly not PSD: NonMember. The orbit Gram sweep must produce a
///     witness (the Gram-to-Toeplitz implication guarantees one exists);
///     the sweep is retried at finer grids up to opts.max_refine times, and
///     failure to find one raises InconsistentError.
///   - Within the band: Boundary, with the epsilon-regularized certificate
///     attempt attached when it converges. Floating point cannot resolve
///     the face of the cone, so neither binary verdict is forced.
///
/// N = 0 selects the plain cone: the test is positivity of the coefficient
/// matrix itself, squares come from its eigen-factorization, and no orbit
/// witness applies (the Toeplitz/sweep diagnostics both report the
/// coefficient-matrix eigenvalue). Throws std::domain_error on
/// non-Hermitian f, std::invalid_argument for N < 0; NotPsdError /
/// NoConvergenceError propagate from certificate recovery.
Decision decide(const HermitianPoly& f, int N, const DecideOptions& opts = {});

/// Recompute the certificate defect f - sum_i |h_i|^2 - q * (z^N zbar^N - 1)
/// from scratch with coefficient arithmetic only (nothing shared with the
/// solvers) and return its max coefficient magnitude.
double verify_certificate(const HermitianPoly& f, int N,
                          const SosCertificate& cert);

}  // namespace hsos
