#include "hsos/json_io.hpp"

#include <stdexcept>
#include <string>

namespace hsos {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

double number_at(const Json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a complex number is a [re, im] pair");
  return Complex(number_at(j[0]), number_at(j[1]));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("a matrix is a non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols) {
      bad("matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

Json poly_to_json(const HermitianPoly& f) {
  Json j;
  j["deg"] = f.deg();
  j["coeffs"] = matrix_to_json(f.coeffs());
  return j;
}

HermitianPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("deg") || !j.contains("coeffs")) {
    bad("a poly is {\"deg\": d, \"coeffs\": [[..], ..]}");
  }
  const Eigen::MatrixXcd m = matrix_from_json(j["coeffs"]);
  if (m.rows() != m.cols()) bad("poly coefficient matrix must be square");
  if (j["deg"].get<int>() != static_cast<int>(m.rows()) - 1) {
    bad("poly deg does not match the coefficient matrix size");
  }
  return HermitianPoly(m);
}

Json normal_form_to_json(const TrigNormalForm& t) {
  Json j;
  j["N"] = t.N;
  j["m"] = t.m;
  Json data = Json::array();
  for (const auto& block : t.data) data.push_back(matrix_to_json(block));
  j["data"] = std::move(data);
  return j;
}

TrigNormalForm normal_form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("m") || !j.contains("data")) {
    bad("a normal form is {\"N\": n, \"m\": m, \"data\": [block, ..]}");
  }
  TrigNormalForm t;
  t.N = j["N"].get<int>();
  t.m = j["m"].get<int>();
  if (!j["data"].is_array()) bad("normal form data must be an array of blocks");
  for (const auto& block : j["data"]) t.data.push_back(matrix_from_json(block));
  validate_normal_form(t);
  return t;
}

Json witness_to_json(const RefutationWitness& w) {
  Json j;
  j["theta"] = w.theta;
  Json v = Json::array();
  for (Eigen::Index i = 0; i < w.v.size(); ++i) v.push_back(complex_to_json(w.v(i)));
  j["v"] = std::move(v);
  j["value"] = w.value;
  return j;
}

RefutationWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("v") || !j.contains("value")) {
    bad("a witness is {\"theta\": t, \"v\": [[re,im], ..], \"value\": x}");
  }
  RefutationWitness w;
  w.theta = number_at(j["theta"]);
  if (!j["v"].is_array() || j["v"].empty()) bad("witness vector must be non-empty");
  w.v.resize(static_cast<Eigen::Index>(j["v"].size()));
  for (Eigen::Index i = 0; i < w.v.size(); ++i) {
    w.v(i) = complex_from_json(j["v"][i]);
  }
  w.value = number_at(j["value"]);
  return w;
}

Json certificate_to_json(const SosCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  Json squares = Json::array();
  for (const HoloPoly& h : cert.squares) {
    Json coeffs = Json::array();
    for (const Complex& c : h.coeffs()) coeffs.push_back(complex_to_json(c));
    squares.push_back(std::move(coeffs));
  }
  j["squares"] = std::move(squares);
  j["multiplier"] = poly_to_json(cert.multiplier);
  j["residual"] = cert.residual;
  return j;
}

SosCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("squares") ||
      !j.contains("multiplier") || !j.contains("residual")) {
    bad("a certificate is {\"n\": N, \"squares\": [..], \"multiplier\": poly, "
        "\"residual\": x}");
  }
  SosCertificate cert;
  cert.n = j["n"].get<int>();
  if (cert.n < 0) bad("certificate n must be nonnegative");
  if (!j["squares"].is_array()) bad("certificate squares must be an array");
  for (const auto& sq : j["squares"]) {
    if (!sq.is_array()) bad("a square is an array of [re, im] coefficients");
    std::vector<Complex> coeffs;
    for (const auto& c : sq) coeffs.push_back(complex_from_json(c));
    cert.squares.emplace_back(std::move(coeffs));
  }
  cert.multiplier = poly_from_json(j["multiplier"]);
  cert.residual = number_at(j["residual"]);
  return cert;
}

Json decision_to_json(const Decision& dec) {
  Json j;
  switch (dec.verdict) {
    case Verdict::Member: j["verdict"] = "member"; break;
    case Verdict::NonMember: j["verdict"] = "non-member"; break;
    case Verdict::Boundary: j["verdict"] = "boundary"; break;
  }
  Json diag;
  diag["toeplitz_min_eig"] = dec.toeplitz_min_eig;
  diag["toeplitz_scale"] = dec.toeplitz_scale;
  diag["sweep_min_eig"] = dec.sweep_min_eig;
  diag["sweep_theta"] = dec.sweep_theta;
  j["diagnostics"] = std::move(diag);
  if (dec.certificate) j["certificate"] = certificate_to_json(*dec.certificate);
  if (dec.witness) j["witness"] = witness_to_json(*dec.witness);
  return j;
}

}  // namespace hsos
