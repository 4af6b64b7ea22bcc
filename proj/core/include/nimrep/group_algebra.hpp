#pragma once

#include <map>
#include <string>
#include <vector>

#include "nimrep/bigint.hpp"
#include "nimrep/dihedral.hpp"
#include "nimrep/int_matrix.hpp"

namespace nimrep {

enum class Basis { GROUP, KL };

std::string to_string(Basis b);

/// Sparse integer combination of group elements in either the group basis or
/// the Kazhdan-Lusztig basis. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using Terms = std::map<GroupElement, BigInt>;

  GroupAlgebraElement(int n, Basis basis) : n_(n), basis_(basis) {}
  static GroupAlgebraElement basis_vector(const GroupElement& w, Basis basis, const BigInt& c = 1);

  int n() const noexcept { return n_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const GroupElement& w) const;

  void add(const GroupElement& w, const BigInt& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const BigInt& scalar);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const BigInt& s) { return a *= s; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  /// Terms from the longest element down, e.g. "tst + t", "2·w0", "st - s - t + e".
  std::string to_string() const;

 private:
  void require_compatible(const GroupAlgebraElement& other) const;

  int n_;
  Basis basis_;
  Terms terms_;
};

/// Z[D_n] with its group and Kazhdan-Lusztig bases. In the dihedral case the
/// KL basis element of w is w plus every strictly shorter element.
///
/// Products of KL basis elements are available by two independent routes:
/// convolution in the group basis, and the left action of the generators
/// (s̲·w̲ = (sw)̲ + (tw)̲ when sw > w, 2w̲ otherwise, with the short cases at e, t)
/// extended to all of D_n by u̲ = x̲·u'̲ − (yu')̲ for u = xu'.
class KLAlgebra {
 public:
  explicit KLAlgebra(int n);

  const DihedralGroup& group() const noexcept { return group_; }
  int n() const noexcept { return group_.n(); }
  std::size_t dimension() const noexcept { return group_.order(); }

  GroupAlgebraElement kl_to_group(const GroupAlgebraElement& x) const;
  GroupAlgebraElement group_to_kl(const GroupAlgebraElement& x) const;

  /// Product in the group basis.
  GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const;

  GroupAlgebraElement kl_left_multiply_generator(Generator x, const GroupElement& w) const;
  /// w̲·x̲, obtained from the left rule by transport along w ↦ w⁻¹.
  GroupAlgebraElement kl_right_multiply_generator(const GroupElement& w, Generator x) const;

  GroupAlgebraElement kl_multiply_by_convolution(const GroupElement& u, const GroupElement& w) const;
  GroupAlgebraElement kl_multiply_by_recursion(const GroupElement& u, const GroupElement& w) const;
  /// u̲·w̲ in the KL basis; both routes are evaluated and must agree.
  GroupAlgebraElement kl_multiply(const GroupElement& u, const GroupElement& w) const;

  /// Bilinear product of two KL-basis combinations (recursion route).
  GroupAlgebraElement kl_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const;

  /// Matrix of left multiplication by u̲ on the KL basis; column j is u̲·(element j)̲.
  const IntMatrix& left_action(const GroupElement& u) const;

  /// Applies w ↦ w⁻¹ to every basis index (anti-automorphism of Z[D_n] in both bases).
  GroupAlgebraElement inverse_transport(const GroupAlgebraElement& x) const;

 private:
  void require_basis(const GroupAlgebraElement& x, Basis b) const;
  GroupAlgebraElement column(const IntMatrix& m, std::size_t j) const;

  DihedralGroup group_;
  std::vector<std::size_t> product_table_;  // index(a*b) at a*order+b
  std::vector<IntMatrix> left_actions_;     // indexed by element index
};

/// All products u̲·w̲ = Σ c(u,w,v) v̲. Every constant is checked nonnegative.
class StructureConstantTable {
 public:
  explicit StructureConstantTable(const KLAlgebra& algebra);

  int n() const noexcept { return n_; }
  const GroupAlgebraElement& product(const GroupElement& u, const GroupElement& w) const;
  BigInt constant(const GroupElement& u, const GroupElement& w, const GroupElement& v) const;

 private:
  int n_;
  std::size_t order_;
  std::vector<GroupAlgebraElement> entries_;
};

}  // namespace nimrep
