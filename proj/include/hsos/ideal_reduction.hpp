#pragma once

#include <utility>
#include <vector>

#include "hsos/hermitian_poly.hpp"

namespace hsos {

/// The unique representative of a Hermitian polynomial modulo
/// (z^N zbar^N - 1) whose monomial support satisfies min(j, k) < N, stored
/// as block data: in the block basis (psi, z^N psi, ..., z^{Nm} psi) with
/// psi = (1, z, ..., z^{N-1})^T, the coefficient matrix has block (0, k)
/// equal to A_k, block (j, 0) equal to A_j*, and zero elsewhere. Only
/// A_0..A_m are stored; A_{-j} = A_j* is implicit.
///
/// Invariants: each block is N x N; A_0 is Hermitian; m is minimal, i.e.
/// data.back() is nonzero unless m == 0.
struct TrigNormalForm {
  int N = 1;
  int m = 0;
  std::vector<Eigen::MatrixXcd> data;  // A_0, ..., A_m
};

/// Throws std::invalid_argument if t violates the structural invariants
/// (used on deserialized values; internally produced forms satisfy them by
/// construction).
void validate_normal_form(const TrigNormalForm& t);

/// The generator z^N zbar^N - 1. For N = 0 this degenerates to the zero
/// polynomial, matching the CLI's "ideal (0)" convention.
HermitianPoly ideal_generator(int N);

/// Reduce f modulo (z^N zbar^N - 1): repeatedly fold monomials with both
/// exponents >= N via zbar^a z^b == zbar^{a-N} z^{b-N}, accumulating each
/// folded monomial into the quotient q, so that
///     f == reconstruct(normal) + q * (z^N zbar^N - 1)
/// holds coefficient-wise. Monomials are processed in decreasing total
/// degree, which fixes q deterministically (the result itself is
/// order-independent). Throws std::domain_error on non-Hermitian input and
/// std::invalid_argument for N < 1. Both outputs are exactly Hermitian.
std::pair<TrigNormalForm, HermitianPoly> reduce(const HermitianPoly& f, int N);

/// Assemble the coefficient matrix of size N(m+1) from the block data
/// (first block row A_k, first block column A_j*) and trim. Inverse of
/// reduce on normal forms: reduce(reconstruct(t), N) == (t, 0).
HermitianPoly reconstruct(const TrigNormalForm& t);

/// Test-support predicate: do f and g have equal orbit Gram matrices (to
/// `tol`, absolute per entry) at every theta in the grid? True whenever
/// f - g is a multiple of the generator, since the generator vanishes on
/// orbit point pairs.
bool gram_invariance_check(const HermitianPoly& f, const HermitianPoly& g,
                           int N, const std::vector<double>& thetas,
                           double tol = 1e-10);

}  // namespace hsos
