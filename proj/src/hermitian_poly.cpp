#include "hsos/hermitian_poly.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hsos {

namespace {

// Smallest n such that rows/cols beyond n are all zero; at least 1 so the
// zero polynomial keeps a 1 x 1 matrix.
Eigen::Index trimmed_size(const Eigen::MatrixXcd& m) {
  Eigen::Index n = m.rows();
  while (n > 1 && m.row(n - 1).head(n).isZero(0.0) &&
         m.col(n - 1).head(n).isZero(0.0)) {
    --n;
  }
  return n;
}

}  // namespace

HermitianPoly::HermitianPoly(const Eigen::MatrixXcd& coeffs) {
  if (coeffs.rows() != coeffs.cols() || coeffs.rows() < 1) {
    throw std::invalid_argument("coefficient matrix must be square and non-empty");
  }
  if (!coeffs.allFinite()) {
    throw std::invalid_argument("coefficient matrix has non-finite entries");
  }
  const Eigen::Index n = trimmed_size(coeffs);
  coeffs_ = coeffs.topLeftCorner(n, n);
}

HermitianPoly HermitianPoly::constant(Complex c) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = c;
  return HermitianPoly(m);
}

HermitianPoly HermitianPoly::monomial(int conj_exp, int holo_exp, Complex c) {
  if (conj_exp < 0 || holo_exp < 0) {
    throw std::invalid_argument("monomial exponents must be non-negative");
  }
  const int d = std::max(conj_exp, holo_exp);
  if (d > kMaxDegree) {
    throw SizeError("monomial degree " + std::to_string(d) + " exceeds limit " +
                    std::to_string(kMaxDegree));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  m(conj_exp, holo_exp) = c;
  return HermitianPoly(m);
}

bool HermitianPoly::is_hermitian(double tol) const {
  for (int j = 0; j <= deg(); ++j) {
    for (int k = j; k <= deg(); ++k) {
      if (std::abs(coeffs_(k, j) - std::conj(coeffs_(j, k))) > tol) {
        return false;
      }
    }
  }
  return true;
}

HermitianPoly HermitianPoly::operator+(const HermitianPoly& rhs) const {
  const int d = std::max(deg(), rhs.deg());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  m.topLeftCorner(deg() + 1, deg() + 1) = coeffs_;
  m.topLeftCorner(rhs.deg() + 1, rhs.deg() + 1) += rhs.coeffs_;
  return HermitianPoly(m);
}

HermitianPoly HermitianPoly::operator-(const HermitianPoly& rhs) const {
  return *this + (-rhs);
}

HermitianPoly HermitianPoly::operator-() const {
  return HermitianPoly(Eigen::MatrixXcd(-coeffs_));
}

HermitianPoly HermitianPoly::operator*(Complex scalar) const {
  return HermitianPoly(Eigen::MatrixXcd(scalar * coeffs_));
}

HoloPoly::HoloPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) {
    coeffs_.pop_back();
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("coefficient vector has non-finite entries");
    }
  }
}

Complex HoloPoly::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

HermitianPoly involution(const HermitianPoly& f) {
  return HermitianPoly(Eigen::MatrixXcd(f.coeffs().adjoint()));
}

HermitianPoly mul(const HermitianPoly& f, const HermitianPoly& g) {
  const int d = f.deg() + g.deg();
  if (d > kMaxDegree) {
    throw SizeError("product degree " + std::to_string(d) + " exceeds limit " +
                    std::to_string(kMaxDegree));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  for (int j = 0; j <= f.deg(); ++j) {
    for (int k = 0; k <= f.deg(); ++k) {
      const Complex a = f.coeffs()(j, k);
      if (a == Complex(0.0)) continue;
      m.block(j, k, g.deg() + 1, g.deg() + 1) += a * g.coeffs();
    }
  }
  return HermitianPoly(m);
}

HermitianPoly conj_product(const HoloPoly& a, const HoloPoly& b) {
  if (a.is_zero() || b.is_zero()) return HermitianPoly();
  const int d = std::max(a.deg(), b.deg());
  if (d > kMaxDegree) {
    throw SizeError("conjugate product degree " + std::to_string(d) +
                    " exceeds limit " + std::to_string(kMaxDegree));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  for (int j = 0; j <= a.deg(); ++j) {
    for (int k = 0; k <= b.deg(); ++k) {
      m(j, k) = std::conj(a.coeff(j)) * b.coeff(k);
    }
  }
  return HermitianPoly(m);
}

HermitianPoly hermitian_square(const HoloPoly& h) { return conj_product(h, h); }

Complex polarized_eval(const HermitianPoly& f, Complex p, Complex q) {
  // Horner in zbar (rows) of the row-wise Horner evaluations in z (columns).
  const Complex qc = std::conj(q);
  Complex acc = 0.0;
  for (int j = f.deg(); j >= 0; --j) {
    Complex row = 0.0;
    for (int k = f.deg(); k >= 0; --k) {
      row = row * p + f.coeffs()(j, k);
    }
    acc = acc * qc + row;
  }
  return acc;
}

bool coeff_matrix_psd(const HermitianPoly& f, double tol) {
  if (!f.is_hermitian()) {
    throw std::domain_error("coeff_matrix_psd requires a Hermitian coefficient matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f.coeffs(),
                                                     Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().cwiseAbs().maxCoeff();
  return lo >= -tol * (1.0 + hi);
}

Complex circle_integral(const HermitianPoly& f) {
  // On |z| = 1 the monomial zbar^j z^k averages to [j == k], so the mean is
  // the trace of the coefficient matrix.
  return f.coeffs().trace();
}

void require_hermitian(const HermitianPoly& f, const char* where) {
  const double tol = 1e-12 * (1.0 + f.max_abs_coeff());
  if (!f.is_hermitian(tol)) {
    throw std::domain_error(std::string(where) + ": input polynomial is not Hermitian");
  }
}

}  // namespace hsos
