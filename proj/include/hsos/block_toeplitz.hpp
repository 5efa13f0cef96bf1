#pragma once

#include <vector>

#include "hsos/ideal_reduction.hpp"

namespace hsos {

/// The block Toeplitz matrix of a normal form: block (j, k) = A_{k-j} with
/// A_{-l} = A_l*. Hermitian and block-constant along block diagonals by
/// construction; its positivity is the membership test.
struct BlockToeplitz {
  int N = 1;
  int m = 0;
  Eigen::MatrixXcd mat;  // size N(m+1) x N(m+1)
};

/// A positive block matrix reproducing the normal-form data through its
/// block-diagonal sums: block_trace(Q, k) = A_k. Produced by recover_q;
/// factoring it yields the squares of a certificate.
struct PositiveBlockQ {
  int N = 1;
  int m = 0;
  Eigen::MatrixXcd mat;   // Hermitian PSD, size N(m+1)
  double residual = 0.0;  // max entry-wise block-trace violation at exit
  // Best residual seen so far, recorded every 100 iterations; non-increasing.
  std::vector<double> residual_history;
  // Diagonal regularization applied to A_0 before solving (0 for interior
  // instances; 10*tol*scale when the Toeplitz matrix was within the
  // tolerance band of singularity, where projections stall).
  double epsilon = 0.0;
};

struct RecoverOptions {
  double tol = kDefaultTol;  // PSD tolerance (relative)
  double feas_tol = 1e-8;    // per-entry block-trace residual target
  int max_iters = 20000;
};

BlockToeplitz build_toeplitz(const TrigNormalForm& t);

/// T_k: identity blocks on block diagonal k (positive k to the right), zero
/// elsewhere. elementary_toeplitz(-k, N, m) equals the transpose. Throws
/// std::invalid_argument when |k| > m.
Eigen::MatrixXcd elementary_toeplitz(int k, int N, int m);

/// Trace[T_{-k} Q] = sum_{j=max(0,k)}^{min(m,m+k)} Q_{j-k,j}: the sum of the
/// blocks on the k-th block diagonal. Q must be square with side a multiple
/// of N; |k| bounded by the block count.
Eigen::MatrixXcd block_trace(const Eigen::MatrixXcd& q, int N, int k);

/// Find a PSD matrix whose block-diagonal sums reproduce the data, by
/// Dykstra alternating projections between the PSD cone (eigenvalue clip,
/// with correction term) and the affine set {Q : block_trace(Q, k) = A_k}
/// (spread the defect evenly along each diagonal). Starts from the lifted
/// Toeplitz matrix (diagonal k scaled by 1/(m+1-k)), which satisfies the
/// affine constraints exactly.
///
/// Throws NotPsdError when the Toeplitz precondition fails and
/// NoConvergenceError (with the best residual) when the target is not met
/// within opts.max_iters — which is also how infeasible data surfaces: a
/// PSD Toeplitz matrix of one fixed size does not always admit a Q of that
/// size (e.g. scalar data (1, 0.8)); see the Boundary discussion in decide.
PositiveBlockQ recover_q(const TrigNormalForm& t, const RecoverOptions& opts = {});

/// Eigen-factor Q = G*G with G = Lambda^{1/2} U*; row i of G, read over the
/// stacked monomial basis (1, z, ..., z^{N(m+1)-1}), is the coefficient
/// vector of one square h_i. Negative eigenvalues are clipped before
/// factoring; rows below the rank threshold 1e-12*scale are dropped, so the
/// number of squares equals the numerical rank. The coefficient matrix of
/// sum_i |h_i|^2 equals the clipped Q.
std::vector<HoloPoly> factor_to_squares(const PositiveBlockQ& q);

/// w* Toep(a_0..a_m) w for scalar (N = 1) data: equals the circle average
/// of |wc(e^{i theta})|^2 f(e^{i theta}) with wc(z) = sum_j conj(w_j) z^j —
/// the quadratic-form identity behind the block case (the conjugation is
/// the usual transpose twist; for real w it disappears). Throws
/// std::invalid_argument unless t.N == 1 and length(w) == m+1.
Complex scalar_toeplitz_quadratic(const TrigNormalForm& t,
                                  const Eigen::VectorXcd& w);

}  // namespace hsos
