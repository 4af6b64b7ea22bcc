#include "nimrep/perron.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "nimrep/errors.hpp"
#include "nimrep/nimrep_engine.hpp"

namespace nimrep {

namespace {

constexpr double kResidual = 1e-10;
constexpr int kMaxIterations = 200000;
constexpr double kRootMatch = 1e-6;

void sort_roots(std::vector<std::complex<double>>& xs) {
  for (auto& x : xs) {
    // Clean tiny imaginary noise so conjugate pairs and real roots sort stably.
    if (std::abs(x.imag()) < 1e-12) x = {x.real(), 0.0};
  }
  std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.real() - b.real()) > 1e-12) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = p.leading().convert_to<double>();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coefficient(i).convert_to<double>() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  sort_roots(roots);
  return roots;
}

PerronAnalysis perron_analysis(const IntMatrix& q) {
  if (!q.is_square() || q.rows() == 0) throw PreconditionError("perron_analysis requires a nonempty square matrix");
  if (!q.is_nonnegative()) throw PreconditionError("perron_analysis requires a nonnegative matrix");
  const std::size_t r = q.rows();
  PerronAnalysis out;
  out.irreducible = !missing_path(q).has_value();

  Eigen::MatrixXd m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = q(i, j).convert_to<double>();
  const Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(r, r);

  Eigen::VectorXd x = Eigen::VectorXd::Constant(r, 1.0 / r);
  double rho = 0;
  for (out.iterations = 1; out.iterations <= kMaxIterations; ++out.iterations) {
    Eigen::VectorXd y = shifted * x;
    const double norm = y.sum();
    if (norm == 0) break;
    y /= norm;
    rho = (m * y).dot(y) / y.dot(y);
    const double residual = (m * y - rho * y).norm();
    x = y;
    if (residual < kResidual) break;
  }
  out.spectral_radius = rho;
  out.eigenvector.assign(x.data(), x.data() + r);
  out.positive_eigenvector = std::all_of(out.eigenvector.begin(), out.eigenvector.end(), [](double v) { return v > 0; });

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + r);
  sort_roots(out.eigenvalues);

  out.characteristic_polynomial = characteristic_polynomial(q);
  const IntPolynomial repeated = gcd(out.characteristic_polynomial, out.characteristic_polynomial.derivative());
  const auto repeated_roots = polynomial_roots(repeated);
  out.top_eigenvalue_simple = std::none_of(repeated_roots.begin(), repeated_roots.end(),
                                           [&](const auto& z) { return std::abs(z - rho) < kRootMatch; });
  return out;
}

}  // namespace nimrep
