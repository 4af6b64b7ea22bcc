#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nimrep/bigint.hpp"

namespace nimrep {

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t size);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<BigInt>& data() const noexcept { return data_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  BigInt trace() const;
  IntMatrix transpose() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const BigInt& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }
  friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Matrix power by repeated squaring; exponent >= 0.
  IntMatrix pow(unsigned exponent) const;

  /// Rows and columns reordered: result(i,j) = (*this)(perm[i], perm[j]).
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  /// "[[2,0,1],[0,2,1],[0,0,0]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Direct sum diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Determinant by Bareiss fraction-free elimination (exact divisions only).
BigInt determinant(const IntMatrix& m);

}  // namespace nimrep
