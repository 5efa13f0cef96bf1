#pragma once

#include "hsos/hermitian_poly.hpp"

namespace hsos {

/// The orbit-average of the monomial phase: 1 if N divides ell, else 0.
/// Equals (1/N^2) * sum_{j,k=0}^{N-1} w^{ell(j-k)} with w = e^{2 pi i / N}
/// (the numerical identity is exercised by the tests).
int circulant_average(long long ell, int N);

/// F_N(f) computed from coefficients: the sum of diagonal entries a[l][l]
/// over l divisible by N. Exact in coefficient arithmetic; real for
/// Hermitian f.
Complex fn_diagonal(const HermitianPoly& f, int N);

/// F_N(f) computed by quadrature: uniform-grid average over theta of
/// (1/N^2) sum_{j,k} f(w^j e^{i theta}, conj(w^k e^{i theta})). The
/// integrand is a trigonometric polynomial of degree <= deg(f), so any grid
/// with samples >= 2*deg(f)+2 is exact up to roundoff. Pass samples = 0 to
/// pick that bound automatically. Serves as an independent cross-check of
/// fn_diagonal.
Complex fn_quadrature(const HermitianPoly& f, int N, int samples = 0);

/// Lift a vector to the holomorphic polynomial
/// v~(z) = sum_{j=0}^{N-1} v_j z^{N-j} (degree <= N, zero constant term).
HoloPoly embed_vector(const Eigen::VectorXcd& v);

/// The matrix-product representation: computes
///   F_N( zbar^{Ns} z^{Nt} * conj(v~(z)) * w~(z) * f_A(z, zbar) )
/// with f_A the polynomial whose coefficient matrix is A, by expanding the
/// product and applying fn_diagonal. Equals delta_{st} * v^H A w; the
/// off-diagonal shifts annihilate the average. Throws std::invalid_argument
/// on dimension mismatch or negative shifts.
Complex matrix_product_via_fn(const Eigen::VectorXcd& v,
                              const Eigen::MatrixXcd& A,
                              const Eigen::VectorXcd& w, int s, int t);

/// F_N(|h|^2 * f) via fn_diagonal. When the orbit Gram matrices of f are
/// PSD for every theta, this is nonnegative for every h (the average of the
/// entries of a positive matrix is positive); callers use it as a spot
/// check, not a decision procedure.
double fn_positivity_check(const HermitianPoly& f, int N, const HoloPoly& h);

}  // namespace hsos
