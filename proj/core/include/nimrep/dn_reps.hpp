#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nimrep/int_matrix.hpp"
#include "nimrep/polynomial.hpp"

namespace nimrep {

/// A simple complex D_n-module: one-dimensional V(ε,δ) with s ↦ ε, t ↦ δ, or
/// the two-dimensional V(n,k) where st acts as rotation by 2kπ/n.
struct SimpleModule {
  enum class Kind { ONE_DIM, TWO_DIM };

  Kind kind = Kind::ONE_DIM;
  int epsilon = 1;
  int delta = 1;
  int k = 0;

  static SimpleModule one_dim(int epsilon, int delta) { return {Kind::ONE_DIM, epsilon, delta, 0}; }
  static SimpleModule two_dim(int k) { return {Kind::TWO_DIM, 0, 0, k}; }

  int dimension() const noexcept { return kind == Kind::ONE_DIM ? 1 : 2; }
  /// "V(1,-1)" or "V(4,1)".
  std::string name(int n) const;

  /// Report order: (1,1), (1,-1), (-1,1), (-1,-1), then two-dimensional by k.
  int order_key() const noexcept;
  friend bool operator==(const SimpleModule&, const SimpleModule&) = default;
  friend auto operator<=>(const SimpleModule& a, const SimpleModule& b) noexcept {
    return a.order_key() <=> b.order_key();
  }
};

std::vector<SimpleModule> simples(int n);

/// Throws PreconditionError when `v` is not a simple module of D_n.
void validate_simple(int n, const SimpleModule& v);

/// Parses "V(1,-1)" or "V(4,1)" (the latter requires first argument n).
SimpleModule parse_simple(int n, const std::string& text);

using RealMatrix = std::vector<std::vector<double>>;

struct GeneratorMatrices {
  RealMatrix s;
  RealMatrix t;
};

/// Matrices of s̲ = e + s and t̲ = e + t on V.
GeneratorMatrices kl_generator_matrices(int n, const SimpleModule& v);

/// Character value of V at a group element given by its length and first letter.
double character(int n, const SimpleModule& v, int length, bool starts_with_s);

/// x^2 + c1 x + c0, the characteristic polynomial of s̲ + t̲ on V(n,k).
struct QuadraticCharPoly {
  double c1 = -4;
  double c0 = 0;
  /// Present iff 2cos(2kπ/n) is an integer.
  std::optional<IntPolynomial> exact;

  bool integral() const noexcept { return exact.has_value(); }
  std::string to_string() const;
};

QuadraticCharPoly char_poly_two_dim(int n, int k);

class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(int n) : n_(n) {}

  int n() const noexcept { return n_; }
  void add(const SimpleModule& v, int multiplicity);
  int multiplicity(const SimpleModule& v) const;
  /// Nonzero multiplicities in report order.
  const std::vector<std::pair<SimpleModule, int>>& terms() const noexcept { return terms_; }
  int dimension() const;

  Decomposition& operator+=(const Decomposition& other);
  friend bool operator==(const Decomposition&, const Decomposition&) = default;

  /// "V(4,1) ⊕ V(1,-1)", multiplicities as "2·V(4,1)"; "0" when empty.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::pair<SimpleModule, int>> terms_;
};

/// Decomposes the D_n-module with s = A_s - I, t = A_t - I into simples.
/// The defining relations are checked exactly first (NotAModuleError names the
/// failing one); multiplicities come from character inner products and must be
/// within 1e-6 of nonnegative integers.
Decomposition decompose(int n, const IntMatrix& theta_s, const IntMatrix& theta_t);

}  // namespace nimrep
