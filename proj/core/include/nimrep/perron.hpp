#pragma once

#include <complex>
#include <vector>

#include "nimrep/int_matrix.hpp"
#include "nimrep/polynomial.hpp"

namespace nimrep {

struct PerronAnalysis {
  bool irreducible = false;
  double spectral_radius = 0;
  bool top_eigenvalue_simple = false;
  /// Normalized to sum 1.
  std::vector<double> eigenvector;
  bool positive_eigenvector = false;
  /// Sorted by real part, then imaginary part.
  std::vector<std::complex<double>> eigenvalues;
  IntPolynomial characteristic_polynomial;
  int iterations = 0;
};

/// Q must be square and nonnegative. The spectral radius comes from power
/// iteration on Q + I to a 1e-10 residual; simplicity is decided against the
/// repeated roots of the exact characteristic polynomial.
PerronAnalysis perron_analysis(const IntMatrix& q);

/// Roots of an integer polynomial (companion matrix eigenvalues), sorted as above.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

}  // namespace nimrep
