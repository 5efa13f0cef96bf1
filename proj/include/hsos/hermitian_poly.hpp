#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hsos/types.hpp"

namespace hsos {

/// One-variable polynomial in z and zbar, stored as its (d+1) x (d+1)
/// complex coefficient matrix: entry (j, k) is the coefficient of zbar^j z^k
/// (row = conjugate exponent, column = holomorphic exponent).
///
/// The stored degree is minimal: the last row and last column are never both
/// identically zero unless d = 0. Values are immutable after construction.
/// The class represents arbitrary polynomials; Hermitian ones are the fixed
/// points of the involution, see is_hermitian().
class HermitianPoly {
 public:
  /// The zero polynomial (1 x 1 zero matrix).
  HermitianPoly() : coeffs_(Eigen::MatrixXcd::Zero(1, 1)) {}

  /// Construct from a square coefficient matrix. Trailing zero row/column
  /// pairs are trimmed. Throws std::invalid_argument on a non-square matrix
  /// or non-finite entries.
  explicit HermitianPoly(const Eigen::MatrixXcd& coeffs);

  static HermitianPoly constant(Complex c);

  /// c * zbar^conj_exp * z^holo_exp
  static HermitianPoly monomial(int conj_exp, int holo_exp, Complex c = 1.0);

  int deg() const { return static_cast<int>(coeffs_.rows()) - 1; }
  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }

  /// Coefficient of zbar^j z^k; zero outside the stored range.
  Complex coeff(int j, int k) const {
    if (j < 0 || k < 0 || j > deg() || k > deg()) return 0.0;
    return coeffs_(j, k);
  }

  bool is_zero() const { return deg() == 0 && coeffs_(0, 0) == 0.0; }

  /// True iff a[k][j] == conj(a[j][k]) for all j, k, up to `tol` in absolute
  /// value per entry (tol = 0 is the exact predicate).
  bool is_hermitian(double tol = 0.0) const;

  double max_abs_coeff() const { return coeffs_.cwiseAbs().maxCoeff(); }
  double sum_abs_coeffs() const { return coeffs_.cwiseAbs().sum(); }

  HermitianPoly operator+(const HermitianPoly& rhs) const;
  HermitianPoly operator-(const HermitianPoly& rhs) const;
  HermitianPoly operator-() const;
  HermitianPoly operator*(Complex scalar) const;

  friend bool operator==(const HermitianPoly& a, const HermitianPoly& b) {
    return a.coeffs_.rows() == b.coeffs_.rows() &&
           a.coeffs_.cwiseEqual(b.coeffs_).all();
  }
  friend bool operator!=(const HermitianPoly& a, const HermitianPoly& b) {
    return !(a == b);
  }

 private:
  Eigen::MatrixXcd coeffs_;
};

/// Holomorphic polynomial in z; coeffs()[j] is the coefficient of z^j.
/// The zero polynomial has an empty coefficient vector and deg() == -1;
/// otherwise the trailing coefficient is nonzero.
class HoloPoly {
 public:
  HoloPoly() = default;
  explicit HoloPoly(std::vector<Complex> coeffs);

  int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coeff(int j) const {
    return (j < 0 || j > deg()) ? Complex(0.0) : coeffs_[j];
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex eval(Complex z) const;

  friend bool operator==(const HoloPoly& a, const HoloPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Complex> coeffs_;
};

/// f*(z, zbar) = conj(f(z, zbar)); the coefficient matrix of the result is
/// the conjugate transpose. Applying twice is the identity.
HermitianPoly involution(const HermitianPoly& f);

/// Product of two polynomials (2D convolution of coefficient matrices).
/// Throws SizeError if the product degree would exceed kMaxDegree.
HermitianPoly mul(const HermitianPoly& f, const HermitianPoly& g);

inline HermitianPoly operator*(const HermitianPoly& f, const HermitianPoly& g) {
  return mul(f, g);
}

/// conj(a(z)) * b(z) as a polynomial in z, zbar: coefficient of zbar^j z^k is
/// conj(a_j) * b_k.
HermitianPoly conj_product(const HoloPoly& a, const HoloPoly& b);

/// |h(z)|^2 = h(z) * conj(h(z)); the coefficient matrix is the rank-one
/// outer product with entry (j, k) = h_k * conj(h_j).
HermitianPoly hermitian_square(const HoloPoly& h);

/// Polarized evaluation f(p, conj(q)) = sum_{j,k} a[j][k] conj(q)^j p^k,
/// treating z and zbar as independent variables. For Hermitian f,
/// polarized_eval(f, p, q) == conj(polarized_eval(f, q, p)).
Complex polarized_eval(const HermitianPoly& f, Complex p, Complex q);

/// True iff the smallest eigenvalue of the coefficient matrix is
/// >= -tol * (1 + spectral norm). Throws std::domain_error on
/// non-Hermitian input.
bool coeff_matrix_psd(const HermitianPoly& f, double tol = kDefaultTol);

/// Mean of f over the unit circle; equals the trace of the coefficient
/// matrix.
Complex circle_integral(const HermitianPoly& f);

/// Throws std::domain_error unless f is Hermitian up to
/// 1e-12 * (1 + max |coeff|). `where` names the operation for the message.
void require_hermitian(const HermitianPoly& f, const char* where);

}  // namespace hsos
