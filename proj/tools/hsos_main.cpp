#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hsos/certify.hpp"
#include "hsos/fn_functional.hpp"
#include "hsos/json_io.hpp"
#include "hsos/parser.hpp"

namespace {

// Exit code map: 0/1/2 carry the verdict (member / non-member / boundary);
// 64 usage, 65 unparseable input, 70 internal failure (no convergence or an
// inconsistent numerical state).
constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitFailure = 70;

// Polynomial and certificate arguments accept a literal string, a file
// path, or "-" for stdin.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string format_complex(hsos::Complex c) {
  if (c.imag() == 0.0) return hsos::format_double(c.real());
  return "(" + hsos::format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
         hsos::format_double(std::abs(c.imag())) + "i)";
}

int verdict_exit(hsos::Verdict v) {
  switch (v) {
    case hsos::Verdict::Member: return kExitMember;
    case hsos::Verdict::NonMember: return kExitNonMember;
    case hsos::Verdict::Boundary: return kExitBoundary;
  }
  return kExitFailure;
}

const char* verdict_name(hsos::Verdict v) {
  switch (v) {
    case hsos::Verdict::Member: return "member";
    case hsos::Verdict::NonMember: return "non-member";
    case hsos::Verdict::Boundary: return "boundary";
  }
  return "?";
}

struct Args {
  std::string expr;
  std::string cert_path;
  int n = 1;
  int samples = 1024;
  double theta = 0.0;
  double tol = hsos::kDefaultTol;
  double max_residual = 1e-8;
};

double env_or_default_tol() {
  const char* env = std::getenv("HSOS_TOL");
  if (!env || !*env) return hsos::kDefaultTol;
  double value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
  if (ec != std::errc() || *ptr != '\0' || !(value > 0)) {
    throw CLI::ValidationError("HSOS_TOL", "must be a positive number");
  }
  return value;
}

hsos::DecideOptions decide_options(const Args& a) {
  hsos::DecideOptions opts;
  opts.tol = a.tol;
  opts.sweep_samples = a.samples;
  return opts;
}

int run_check(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const hsos::Decision dec = hsos::decide(f, a.n, decide_options(a));
  std::cout << "verdict: " << verdict_name(dec.verdict) << "\n";
  std::cout << "matrix min eigenvalue: " << hsos::format_double(dec.toeplitz_min_eig)
            << " (scale " << hsos::format_double(dec.toeplitz_scale) << ")\n";
  if (a.n >= 1) {
    std::cout << "sweep min eigenvalue: " << hsos::format_double(dec.sweep_min_eig)
              << " at theta " << hsos::format_double(dec.sweep_theta) << "\n";
  }
  if (dec.certificate) {
    std::cout << "certificate: " << dec.certificate->squares.size()
              << " squares, residual "
              << hsos::format_double(dec.certificate->residual) << "\n";
  } else if (dec.verdict == hsos::Verdict::Boundary) {
    std::cout << "certificate: unavailable (recovery did not converge)\n";
  }
  if (dec.witness) {
    std::cout << "witness: theta " << hsos::format_double(dec.witness->theta)
              << ", value " << hsos::format_double(dec.witness->value) << "\n";
  }
  return verdict_exit(dec.verdict);
}

int run_certify(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const hsos::Decision dec = hsos::decide(f, a.n, decide_options(a));
  if (dec.certificate) {
    std::cout << hsos::certificate_to_json(*dec.certificate).dump(2) << "\n";
  } else {
    std::cout << hsos::decision_to_json(dec).dump(2) << "\n";
  }
  return verdict_exit(dec.verdict);
}

int run_verify(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  hsos::SosCertificate cert;
  try {
    cert = hsos::certificate_from_json(hsos::Json::parse(read_input(a.cert_path)));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "certificate: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "certificate: " << e.what() << "\n";
    return kExitParse;
  }
  const int n = a.n >= 0 ? a.n : cert.n;
  const double residual = hsos::verify_certificate(f, n, cert);
  std::cout << hsos::format_double(residual) << "\n";
  return residual <= a.max_residual ? 0 : 1;
}

int run_reduce(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const auto [normal, q] = hsos::reduce(f, a.n);
  hsos::Json out;
  out["normal"] = hsos::normal_form_to_json(normal);
  out["q"] = hsos::poly_to_json(q);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gram(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  std::cout << hsos::matrix_to_json(hsos::orbit_gram(f, a.n, a.theta)).dump(2)
            << "\n";
  return 0;
}

int run_sweep(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const hsos::GramSweep sweep = hsos::gram_sweep(f, a.n, a.samples, a.tol);
  std::cout << "theta,lambda_min\n";
  for (size_t i = 0; i < sweep.grid.size(); ++i) {
    std::cout << hsos::format_double(sweep.grid[i]) << ","
              << hsos::format_double(sweep.min_eigs[i]) << "\n";
  }
  return sweep.witness ? kExitNonMember : kExitMember;
}

int run_fn(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const hsos::Complex diag = hsos::fn_diagonal(f, a.n);
  const hsos::Complex quad = hsos::fn_quadrature(f, a.n, a.samples);
  std::cout << "diagonal: " << format_complex(diag) << "\n";
  std::cout << "quadrature: " << format_complex(quad) << "\n";
  std::cout << "difference: " << hsos::format_double(std::abs(diag - quad)) << "\n";
  return 0;
}

int run_toeplitz(const Args& a) {
  const hsos::HermitianPoly f = hsos::parse(read_input(a.expr));
  const auto [normal, q] = hsos::reduce(f, a.n);
  const hsos::BlockToeplitz toep = hsos::build_toeplitz(normal);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(toep.mat,
                                                     Eigen::EigenvaluesOnly);
  hsos::Json out;
  out["N"] = toep.N;
  out["m"] = toep.m;
  out["matrix"] = hsos::matrix_to_json(toep.mat);
  out["min_eig"] = es.eigenvalues()(0);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hsos: decide membership in the cone of Hermitian sums of squares "
      "modulo (z^N zbar^N - 1), with checkable certificates and refutation "
      "witnesses.\n\nPolynomial arguments take a literal expression (e.g. "
      "\"(z + zbar)^2\"), a file path, or '-' for stdin. HSOS_TOL overrides "
      "the default positivity tolerance."};
  app.require_subcommand(1);

  Args args;
  try {
    args.tol = env_or_default_tol();
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  args.max_residual = 1e-8;

  auto add_expr = [&](CLI::App* cmd) {
    cmd->add_option("expr", args.expr, "polynomial expression, file, or '-'")
        ->required();
  };
  auto add_n = [&](CLI::App* cmd, int min_n) {
    cmd->add_option("--n", args.n, "ideal modulus N")
        ->required()
        ->check(CLI::Range(min_n, 1 << 20));
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", args.tol, "positivity tolerance (relative)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide membership; exit 0 member, 1 non-member, 2 boundary");
  add_expr(check);
  add_n(check, 0);
  add_tol(check);
  check->add_option("--samples", args.samples, "sweep grid size")
      ->check(CLI::Range(2, 1 << 20));

  CLI::App* certify =
      app.add_subcommand("certify", "emit the certificate (or decision) JSON");
  add_expr(certify);
  add_n(certify, 0);
  add_tol(certify);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute a certificate residual from scratch and print it");
  add_expr(verify);
  verify->add_option("cert", args.cert_path, "certificate JSON file or '-'")
      ->required();
  args.n = -1;  // default: take N from the certificate
  verify->add_option("--n", args.n, "override the certificate's modulus")
      ->check(CLI::Range(0, 1 << 20));
  verify->add_option("--max-residual", args.max_residual,
                     "acceptance threshold for exit status")
      ->check(CLI::PositiveNumber);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "print the trigonometric normal form and quotient JSON");
  add_expr(reduce);
  add_n(reduce, 1);

  CLI::App* gram =
      app.add_subcommand("gram", "print the orbit Gram matrix at --theta");
  add_expr(gram);
  add_n(gram, 1);
  gram->add_option("--theta", args.theta, "orbit base angle in radians");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "print the min-eigenvalue profile as CSV (theta,lambda_min)");
  add_expr(sweep);
  add_n(sweep, 1);
  add_tol(sweep);
  sweep->add_option("--samples", args.samples, "grid size (>= 2*deg+2)")
      ->check(CLI::Range(2, 1 << 20));

  CLI::App* fn = app.add_subcommand(
      "fn", "print the orbit-average functional via both routes");
  add_expr(fn);
  add_n(fn, 1);
  fn->add_option("--samples", args.samples,
                 "quadrature grid size (0 = automatic)")
      ->check(CLI::Range(0, 1 << 20));
  args.samples = 1024;

  CLI::App* toeplitz = app.add_subcommand(
      "toeplitz", "print the block Toeplitz matrix and its min eigenvalue");
  add_expr(toeplitz);
  add_n(toeplitz, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return run_check(args);
    if (app.got_subcommand(certify)) return run_certify(args);
    if (app.got_subcommand(verify)) return run_verify(args);
    if (app.got_subcommand(reduce)) return run_reduce(args);
    if (app.got_subcommand(gram)) return run_gram(args);
    if (app.got_subcommand(sweep)) return run_sweep(args);
    if (app.got_subcommand(fn)) return run_fn(args);
    if (app.got_subcommand(toeplitz)) return run_toeplitz(args);
  } catch (const hsos::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
