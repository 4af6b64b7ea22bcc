#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nimrep/bigint.hpp"
#include "nimrep/int_matrix.hpp"

namespace nimrep {

/// Univariate polynomial over Z; coefficients stored lowest degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial x() { return IntPolynomial({0, 1}); }
  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }
  /// x - root
  static IntPolynomial linear(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, 1}); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(int power) const;
  BigInt leading() const;

  IntPolynomial derivative() const;
  BigInt content() const;
  /// Divided by content, leading coefficient made positive.
  IntPolynomial primitive_part() const;

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;
  IntMatrix evaluate(const IntMatrix& m) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^4 - 6x^3 + 10x^2 - 4x"
  std::string to_string() const;
  /// Accepts the to_string format: integer coefficients, `x`, `^`, `+`, `-`, `*`, spaces.
  static IntPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient of a by b when b divides a exactly in Q[x] with integral result;
/// throws InternalError otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[x] (positive leading coefficient).
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Product of the distinct irreducible factors, primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// det(x I - m) by the Faddeev-LeVerrier recursion; every division is exact.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

}  // namespace nimrep
